#include "tropskel/feasibility.hpp"

#include "tropskel/error.hpp"
#include "tropskel/matrix.hpp"

#include <algorithm>
#include <map>

namespace tropskel {

bool LinearConstraint::satisfied_by(const Vec& x) const {
  const Rat lhs = dot(normal, x);
  switch (relation) {
    case Relation::Equal: return lhs == rhs;
    case Relation::AtLeast: return lhs >= rhs;
    case Relation::Greater: return lhs > rhs;
  }
  return false;
}

LinearSystem& LinearSystem::add(LinearConstraint c) {
  if (c.normal.size() != dimension_)
    throw Error(ErrorCode::DimensionMismatch, "constraint of length " + std::to_string(c.normal.size()) +
                                                  " in a system of dimension " + std::to_string(dimension_));
  constraints_.push_back(std::move(c));
  return *this;
}

bool LinearSystem::satisfied_by(const Vec& x) const {
  for (const auto& c : constraints_)
    if (!c.satisfied_by(x)) return false;
  return true;
}

namespace {

struct Bound {
  Rat rhs;
  bool strict = false;
};

// Inequalities a.x >= b (or > b) keyed by the primitive normal a, keeping only
// the tightest right-hand side per normal.
class InequalitySet {
 public:
  bool contradictory() const noexcept { return contradictory_; }
  const std::map<Vec, Bound>& rows() const noexcept { return rows_; }

  void insert(Vec a, Rat b, bool strict) {
    if (is_zero(a)) {
      if (strict ? !(b < 0) : !(b <= 0)) contradictory_ = true;
      return;
    }
    const Rat s = primitive_scale(a);
    for (Rat& x : a) x *= s;
    b *= s;
    auto [it, inserted] = rows_.try_emplace(std::move(a), Bound{b, strict});
    if (inserted) return;
    Bound& old = it->second;
    if (b > old.rhs) {
      old = Bound{b, strict};
    } else if (b == old.rhs && strict) {
      old.strict = true;
    }
  }

 private:
  std::map<Vec, Bound> rows_;
  bool contradictory_ = false;
};

// Fewest generated rows first; ties go to the lowest index.
std::size_t choose_variable(const InequalitySet& set, const std::vector<std::size_t>& candidates) {
  std::size_t best = candidates.front();
  std::optional<long long> best_cost;
  for (std::size_t v : candidates) {
    long long pos = 0, neg = 0;
    for (const auto& [a, bound] : set.rows()) {
      if (a[v] > 0) ++pos;
      else if (a[v] < 0) ++neg;
    }
    const long long cost = pos * neg - pos - neg;
    if (!best_cost || cost < *best_cost) {
      best_cost = cost;
      best = v;
    }
  }
  return best;
}

InequalitySet eliminate(const InequalitySet& set, std::size_t v) {
  InequalitySet out;
  std::vector<const std::pair<const Vec, Bound>*> pos, neg;
  for (const auto& row : set.rows()) {
    if (row.first[v] > 0) pos.push_back(&row);
    else if (row.first[v] < 0) neg.push_back(&row);
    else out.insert(row.first, row.second.rhs, row.second.strict);
  }
  for (const auto* p : pos)
    for (const auto* q : neg) {
      const Rat mp = -q->first[v];
      const Rat mq = p->first[v];
      Vec a(p->first.size());
      for (std::size_t j = 0; j < a.size(); ++j) a[j] = mp * p->first[j] + mq * q->first[j];
      a[v] = 0;
      out.insert(std::move(a), mp * p->second.rhs + mq * q->second.rhs, p->second.strict || q->second.strict);
    }
  return out;
}

// Equalities in reduced echelon form: x[pivot_i] = rhs_i - sum_j coeff(i, j) x[j].
struct EqualityElimination {
  RowEchelon echelon;
  bool inconsistent = false;
  std::vector<bool> is_pivot;
};

EqualityElimination eliminate_equalities(const LinearSystem& system) {
  const std::size_t n = system.dimension();
  std::vector<const LinearConstraint*> eqs;
  for (const auto& c : system.constraints())
    if (c.relation == Relation::Equal) eqs.push_back(&c);
  RatMatrix m(eqs.size(), n + 1);
  for (std::size_t i = 0; i < eqs.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = eqs[i]->normal[j];
    m(i, n) = eqs[i]->rhs;
  }
  EqualityElimination out{row_echelon(std::move(m)), false, std::vector<bool>(n, false)};
  for (std::size_t p : out.echelon.pivots) {
    if (p == n) out.inconsistent = true;
    else out.is_pivot[p] = true;
  }
  return out;
}

}  // namespace

std::optional<Vec> solve_feasibility(const LinearSystem& system) {
  const std::size_t n = system.dimension();
  const EqualityElimination eq = eliminate_equalities(system);
  if (eq.inconsistent) return std::nullopt;
  const RatMatrix& r = eq.echelon.reduced;
  const auto& pivots = eq.echelon.pivots;

  std::vector<std::size_t> free_vars;
  for (std::size_t j = 0; j < n; ++j)
    if (!eq.is_pivot[j]) free_vars.push_back(j);
  const std::size_t f = free_vars.size();

  // Substitute the pivot variables into every inequality.
  InequalitySet set;
  for (const auto& c : system.constraints()) {
    if (c.relation == Relation::Equal) continue;
    Vec a(f);
    Rat b = c.rhs;
    for (std::size_t k = 0; k < f; ++k) a[k] = c.normal[free_vars[k]];
    for (std::size_t i = 0; i < pivots.size(); ++i) {
      const Rat& cp = c.normal[pivots[i]];
      if (cp == 0) continue;
      for (std::size_t k = 0; k < f; ++k) a[k] -= cp * r(i, free_vars[k]);
      b -= cp * r(i, n);
    }
    set.insert(std::move(a), std::move(b), c.relation == Relation::Greater);
    if (set.contradictory()) return std::nullopt;
  }

  struct Level {
    std::size_t variable;
    InequalitySet rows;
  };
  std::vector<Level> levels;
  std::vector<std::size_t> remaining(f);
  for (std::size_t k = 0; k < f; ++k) remaining[k] = k;
  while (!remaining.empty()) {
    const std::size_t v = choose_variable(set, remaining);
    remaining.erase(std::find(remaining.begin(), remaining.end(), v));
    InequalitySet next = eliminate(set, v);
    levels.push_back({v, std::move(set)});
    set = std::move(next);
    if (set.contradictory()) return std::nullopt;
  }

  Vec y(f, Rat(0));
  for (auto it = levels.rbegin(); it != levels.rend(); ++it) {
    const std::size_t v = it->variable;
    std::optional<Bound> lo, hi;
    for (const auto& [a, bound] : it->rows.rows()) {
      if (a[v] == 0) continue;
      Rat rest = bound.rhs;
      for (std::size_t j = 0; j < f; ++j)
        if (j != v && a[j] != 0) rest -= a[j] * y[j];
      const Rat value = rest / a[v];
      if (a[v] > 0) {
        if (!lo || value > lo->rhs || (value == lo->rhs && bound.strict)) lo = Bound{value, bound.strict};
      } else {
        if (!hi || value < hi->rhs || (value == hi->rhs && bound.strict)) hi = Bound{value, bound.strict};
      }
    }
    if (lo && hi) {
      if (lo->rhs > hi->rhs || (lo->rhs == hi->rhs && (lo->strict || hi->strict)))
        throw Error(ErrorCode::InternalInconsistency, "Fourier-Motzkin back-substitution found an empty interval");
      y[v] = (lo->rhs + hi->rhs) / 2;
    } else if (lo) {
      y[v] = lo->rhs + 1;
    } else if (hi) {
      y[v] = hi->rhs - 1;
    } else {
      y[v] = 0;
    }
  }

  Vec x(n, Rat(0));
  for (std::size_t k = 0; k < f; ++k) x[free_vars[k]] = y[k];
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    Rat value = r(i, n);
    for (std::size_t k = 0; k < f; ++k)
      if (r(i, free_vars[k]) != 0) value -= r(i, free_vars[k]) * y[k];
    x[pivots[i]] = value;
  }
  if (!system.satisfied_by(x))
    throw Error(ErrorCode::InternalInconsistency, "feasibility witness fails re-substitution");
  return x;
}

LinearSystem project(const LinearSystem& system, const std::vector<bool>& keep) {
  const std::size_t n = system.dimension();
  if (keep.size() != n) throw Error(ErrorCode::DimensionMismatch, "projection mask has wrong length");

  std::vector<std::pair<Vec, Rat>> eqs;
  InequalitySet ineqs;
  for (const auto& c : system.constraints()) {
    if (c.relation == Relation::Equal) eqs.emplace_back(c.normal, c.rhs);
    else ineqs.insert(c.normal, c.rhs, c.relation == Relation::Greater);
  }

  std::vector<std::size_t> fm_vars;
  for (std::size_t v = 0; v < n; ++v) {
    if (keep[v]) continue;
    auto pivot = std::find_if(eqs.begin(), eqs.end(), [&](const auto& e) { return e.first[v] != 0; });
    if (pivot == eqs.end()) {
      fm_vars.push_back(v);
      continue;
    }
    const auto [pa, pb] = *pivot;
    eqs.erase(pivot);
    for (auto& [a, b] : eqs) {
      if (a[v] == 0) continue;
      const Rat t = a[v] / pa[v];
      for (std::size_t j = 0; j < n; ++j) a[j] -= t * pa[j];
      b -= t * pb;
    }
    InequalitySet next;
    for (const auto& [a0, bound] : ineqs.rows()) {
      Vec a = a0;
      Rat b = bound.rhs;
      if (a[v] != 0) {
        const Rat t = a[v] / pa[v];
        for (std::size_t j = 0; j < n; ++j) a[j] -= t * pa[j];
        b -= t * pb;
      }
      next.insert(std::move(a), std::move(b), bound.strict);
    }
    ineqs = std::move(next);
  }

  while (!fm_vars.empty() && !ineqs.contradictory()) {
    const std::size_t v = choose_variable(ineqs, fm_vars);
    fm_vars.erase(std::find(fm_vars.begin(), fm_vars.end(), v));
    ineqs = eliminate(ineqs, v);
  }

  std::vector<std::size_t> kept;
  for (std::size_t v = 0; v < n; ++v)
    if (keep[v]) kept.push_back(v);
  auto restrict = [&](const Vec& a) {
    Vec out(kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) out[k] = a[kept[k]];
    return out;
  };

  LinearSystem out(kept.size());
  if (ineqs.contradictory()) {
    out.add_inequality(Vec(kept.size(), Rat(0)), Rat(1));
    return out;
  }
  for (const auto& [a, b] : eqs) {
    if (is_zero(a)) {
      if (b != 0) out.add_inequality(Vec(kept.size(), Rat(0)), Rat(1));
      continue;
    }
    out.add_equality(restrict(a), b);
  }
  for (const auto& [a, bound] : ineqs.rows()) out.add_inequality(restrict(a), bound.rhs, bound.strict);
  return out;
}

}  // namespace tropskel
