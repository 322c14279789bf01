#include "tropskel/polyhedron.hpp"

#include "tropskel/error.hpp"
#include "tropskel/lattice.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

namespace tropskel {

namespace {

void check_rank(const std::vector<Constraint>& rows, std::size_t n) {
  for (const auto& c : rows)
    if (c.normal.size() != n)
      throw Error(ErrorCode::DimensionMismatch, "constraint of length " + std::to_string(c.normal.size()) +
                                                    " in ambient rank " + std::to_string(n));
}

std::string linear_form(const Vec& a) {
  std::string out;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (a[j] == 0) continue;
    const Rat c = a[j];
    const bool negative = c < 0;
    const Rat mag = negative ? Rat(-c) : c;
    if (out.empty()) out += negative ? "-" : "";
    else out += negative ? " - " : " + ";
    if (mag != 1) out += to_string(mag) + "*";
    out += "x" + std::to_string(j + 1);
  }
  return out.empty() ? "0" : out;
}

Constraint negated(const Constraint& c) {
  Constraint out{c.normal, -c.rhs};
  for (Rat& x : out.normal) x = -x;
  return out;
}

}  // namespace

int Polyhedron::dimension() const noexcept {
  if (empty_) return -1;
  return static_cast<int>(ambient_rank_) - static_cast<int>(equalities_.size());
}

bool Polyhedron::is_cone() const noexcept {
  if (empty_) return false;
  for (const auto& c : equalities_)
    if (c.rhs != 0) return false;
  for (const auto& c : inequalities_)
    if (c.rhs != 0) return false;
  return true;
}

bool Polyhedron::contains(const Vec& x) const {
  if (x.size() != ambient_rank_) throw Error(ErrorCode::DimensionMismatch, "point has wrong length");
  if (empty_) return false;
  for (const auto& c : equalities_)
    if (dot(c.normal, x) != c.rhs) return false;
  for (const auto& c : inequalities_)
    if (dot(c.normal, x) < c.rhs) return false;
  return true;
}

bool Polyhedron::contains_in_relative_interior(const Vec& x) const {
  if (!contains(x)) return false;
  for (const auto& c : inequalities_)
    if (dot(c.normal, x) == c.rhs) return false;
  return true;
}

LinearSystem Polyhedron::system(bool strict_inequalities) const {
  LinearSystem sys(ambient_rank_);
  if (empty_) {
    sys.add_inequality(Vec(ambient_rank_, Rat(0)), Rat(1));
    return sys;
  }
  for (const auto& c : equalities_) sys.add_equality(c.normal, c.rhs);
  for (const auto& c : inequalities_) sys.add_inequality(c.normal, c.rhs, strict_inequalities);
  return sys;
}

std::string Polyhedron::to_string() const {
  if (empty_) return "{} (empty, rank " + std::to_string(ambient_rank_) + ")";
  std::string out = "{";
  bool first = true;
  auto emit = [&](const Constraint& c, const char* rel) {
    if (!first) out += ", ";
    first = false;
    out += linear_form(c.normal) + " " + rel + " " + tropskel::to_string(c.rhs);
  };
  for (const auto& c : equalities_) emit(c, "=");
  for (const auto& c : inequalities_) emit(c, ">=");
  if (first) out += "R^" + std::to_string(ambient_rank_);
  return out + "}";
}

bool operator<(const Polyhedron& a, const Polyhedron& b) {
  if (a.ambient_rank_ != b.ambient_rank_) return a.ambient_rank_ < b.ambient_rank_;
  if (a.empty_ != b.empty_) return a.empty_;
  if (a.equalities_ != b.equalities_) return a.equalities_ < b.equalities_;
  return a.inequalities_ < b.inequalities_;
}

Polyhedron Polyhedron::whole_space(std::size_t n) {
  Polyhedron p;
  p.ambient_rank_ = n;
  return p;
}

Polyhedron Polyhedron::empty(std::size_t n) {
  Polyhedron p;
  p.ambient_rank_ = n;
  p.empty_ = true;
  return p;
}

Polyhedron Polyhedron::point(const Vec& x) {
  std::vector<Constraint> eqs;
  for (std::size_t i = 0; i < x.size(); ++i) {
    Vec e(x.size(), Rat(0));
    e[i] = 1;
    eqs.push_back({std::move(e), x[i]});
  }
  return from_constraints(x.size(), std::move(eqs), {});
}

Polyhedron Polyhedron::from_constraints(std::size_t n, std::vector<Constraint> eqs,
                                        std::vector<Constraint> ineqs) {
  check_rank(eqs, n);
  check_rank(ineqs, n);

  LinearSystem weak(n);
  for (const auto& c : eqs) weak.add_equality(c.normal, c.rhs);
  for (const auto& c : ineqs) weak.add_inequality(c.normal, c.rhs);
  if (!solve_feasibility(weak)) return empty(n);

  // An inequality is an implicit equality iff making it strict is infeasible.
  std::vector<bool> implicit(ineqs.size(), false);
  LinearSystem all_strict(n);
  for (const auto& c : eqs) all_strict.add_equality(c.normal, c.rhs);
  for (const auto& c : ineqs) all_strict.add_inequality(c.normal, c.rhs, true);
  if (!solve_feasibility(all_strict)) {
    for (std::size_t i = 0; i < ineqs.size(); ++i) {
      LinearSystem s(n);
      for (const auto& c : eqs) s.add_equality(c.normal, c.rhs);
      for (std::size_t j = 0; j < ineqs.size(); ++j) s.add_inequality(ineqs[j].normal, ineqs[j].rhs, j == i);
      implicit[i] = !solve_feasibility(s);
    }
  }

  std::vector<const Constraint*> hull_rows;
  for (const auto& c : eqs) hull_rows.push_back(&c);
  for (std::size_t i = 0; i < ineqs.size(); ++i)
    if (implicit[i]) hull_rows.push_back(&ineqs[i]);
  RatMatrix m(hull_rows.size(), n + 1);
  for (std::size_t i = 0; i < hull_rows.size(); ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = hull_rows[i]->normal[j];
    m(i, n) = hull_rows[i]->rhs;
  }
  const RowEchelon hull = row_echelon(std::move(m));

  Polyhedron out;
  out.ambient_rank_ = n;
  for (std::size_t i = 0; i < hull.pivots.size(); ++i) {
    Vec a(n);
    for (std::size_t j = 0; j < n; ++j) a[j] = hull.reduced(i, j);
    const Rat s = primitive_scale(a);
    out.equalities_.push_back({s * a, s * hull.reduced(i, n)});
  }

  std::map<Vec, Rat> reduced;
  for (std::size_t k = 0; k < ineqs.size(); ++k) {
    if (implicit[k]) continue;
    Vec a = ineqs[k].normal;
    Rat b = ineqs[k].rhs;
    for (std::size_t i = 0; i < hull.pivots.size(); ++i) {
      const Rat t = a[hull.pivots[i]];
      if (t == 0) continue;
      for (std::size_t j = 0; j < n; ++j) a[j] -= t * hull.reduced(i, j);
      b -= t * hull.reduced(i, n);
    }
    if (is_zero(a)) continue;
    const Rat s = primitive_scale(a);
    a = s * a;
    b *= s;
    auto [it, inserted] = reduced.try_emplace(std::move(a), b);
    if (!inserted && b > it->second) it->second = b;
  }

  std::vector<Constraint> candidates;
  for (auto& [a, b] : reduced) candidates.push_back({a, b});
  std::vector<bool> dropped(candidates.size(), false);
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    LinearSystem s(n);
    for (const auto& c : out.equalities_) s.add_equality(c.normal, c.rhs);
    for (std::size_t j = 0; j < candidates.size(); ++j)
      if (j != i && !dropped[j]) s.add_inequality(candidates[j].normal, candidates[j].rhs);
    const Constraint violated = negated(candidates[i]);
    s.add_inequality(violated.normal, violated.rhs, true);
    if (!solve_feasibility(s)) dropped[i] = true;
  }
  for (std::size_t i = 0; i < candidates.size(); ++i)
    if (!dropped[i]) out.inequalities_.push_back(std::move(candidates[i]));

  std::sort(out.equalities_.begin(), out.equalities_.end());
  std::sort(out.inequalities_.begin(), out.inequalities_.end());
  return out;
}

Polyhedron canonicalize(std::size_t n, std::vector<Constraint> eqs, std::vector<Constraint> ineqs) {
  return Polyhedron::from_constraints(n, std::move(eqs), std::move(ineqs));
}

Cone::Cone(Polyhedron p) : polyhedron_(std::move(p)) {
  if (!polyhedron_.is_cone())
    throw Error(ErrorCode::InvalidInput, "not a cone: " + polyhedron_.to_string());
}

Cone Cone::zero(std::size_t n) { return Cone(Polyhedron::point(Vec(n, Rat(0)))); }

Cone Cone::from_rays(std::size_t n, const std::vector<IntVec>& rays) {
  if (rays.empty()) return zero(n);
  const std::size_t k = rays.size();
  RatMatrix generators(n, k);
  for (std::size_t j = 0; j < k; ++j) {
    if (rays[j].size() != n) throw Error(ErrorCode::DimensionMismatch, "ray of wrong length");
    for (std::size_t i = 0; i < n; ++i) generators(i, j) = Rat(rays[j][i]);
  }
  std::vector<Constraint> nonneg;
  for (std::size_t j = 0; j < k; ++j) {
    Vec e(k, Rat(0));
    e[j] = 1;
    nonneg.push_back({std::move(e), Rat(0)});
  }
  const Polyhedron orthant = Polyhedron::from_constraints(k, {}, std::move(nonneg));
  return Cone(linear_image(orthant, generators));
}

bool Cone::is_pointed() const { return lineality_basis(polyhedron_).empty(); }

std::vector<IntVec> Cone::rays() const {
  std::vector<IntVec> out;
  for (const Polyhedron& f : faces(polyhedron_))
    if (f.dimension() == 1) out.push_back(primitive(relint_point(f)));
  std::sort(out.begin(), out.end());
  return out;
}

Cone recession_cone(const Polyhedron& p) {
  if (p.is_empty()) throw Error(ErrorCode::EmptyInput, "recession cone of the empty polyhedron");
  std::vector<Constraint> eqs, ineqs;
  for (const auto& c : p.equalities()) eqs.push_back({c.normal, Rat(0)});
  for (const auto& c : p.inequalities()) ineqs.push_back({c.normal, Rat(0)});
  return Cone(Polyhedron::from_constraints(p.ambient_rank(), std::move(eqs), std::move(ineqs)));
}

Vec relint_point(const Polyhedron& p) {
  if (p.is_empty()) throw Error(ErrorCode::EmptyInput, "relative-interior point of the empty polyhedron");
  auto x = solve_feasibility(p.system(true));
  if (!x) throw Error(ErrorCode::InternalInconsistency, "canonical polyhedron has empty relative interior");
  return *x;
}

Cone local_cone(const Polyhedron& p, const Vec& point) {
  if (!p.contains(point))
    throw Error(ErrorCode::PointNotInPolyhedron, tropskel::to_string(point) + " is not in " + p.to_string());
  std::vector<Constraint> eqs, ineqs;
  for (const auto& c : p.equalities()) eqs.push_back({c.normal, Rat(0)});
  for (const auto& c : p.inequalities())
    if (dot(c.normal, point) == c.rhs) ineqs.push_back({c.normal, Rat(0)});
  return Cone(Polyhedron::from_constraints(p.ambient_rank(), std::move(eqs), std::move(ineqs)));
}

Polyhedron linear_image(const Polyhedron& p, const RatMatrix& map) {
  const std::size_t n = p.ambient_rank(), m = map.rows();
  if (map.cols() != n)
    throw Error(ErrorCode::DimensionMismatch, "linear map with " + std::to_string(map.cols()) +
                                                  " columns applied to rank " + std::to_string(n));
  if (p.is_empty()) return Polyhedron::empty(m);

  // Variables (x, y) with y = map * x; project out x.
  LinearSystem sys(n + m);
  auto lift = [&](const Vec& a) {
    Vec out(n + m, Rat(0));
    std::copy(a.begin(), a.end(), out.begin());
    return out;
  };
  for (const auto& c : p.equalities()) sys.add_equality(lift(c.normal), c.rhs);
  for (const auto& c : p.inequalities()) sys.add_inequality(lift(c.normal), c.rhs);
  for (std::size_t i = 0; i < m; ++i) {
    Vec a(n + m, Rat(0));
    for (std::size_t j = 0; j < n; ++j) a[j] = -map(i, j);
    a[n + i] = 1;
    sys.add_equality(std::move(a), Rat(0));
  }
  std::vector<bool> keep(n + m, false);
  for (std::size_t i = 0; i < m; ++i) keep[n + i] = true;
  const LinearSystem image = project(sys, keep);

  std::vector<Constraint> eqs, ineqs;
  for (const auto& c : image.constraints()) {
    if (c.relation == Relation::Equal) eqs.push_back({c.normal, c.rhs});
    else ineqs.push_back({c.normal, c.rhs});
  }
  return Polyhedron::from_constraints(m, std::move(eqs), std::move(ineqs));
}

Polyhedron intersect(const Polyhedron& a, const Polyhedron& b) {
  if (a.ambient_rank() != b.ambient_rank())
    throw Error(ErrorCode::DimensionMismatch, "intersection of polyhedra of different rank");
  if (a.is_empty() || b.is_empty()) return Polyhedron::empty(a.ambient_rank());
  std::vector<Constraint> eqs = a.equalities(), ineqs = a.inequalities();
  eqs.insert(eqs.end(), b.equalities().begin(), b.equalities().end());
  ineqs.insert(ineqs.end(), b.inequalities().begin(), b.inequalities().end());
  return Polyhedron::from_constraints(a.ambient_rank(), std::move(eqs), std::move(ineqs));
}

Polyhedron translate(const Polyhedron& p, const Vec& offset) {
  if (offset.size() != p.ambient_rank()) throw Error(ErrorCode::DimensionMismatch, "translation of wrong length");
  if (p.is_empty()) return p;
  std::vector<Constraint> eqs, ineqs;
  for (const auto& c : p.equalities()) eqs.push_back({c.normal, c.rhs + dot(c.normal, offset)});
  for (const auto& c : p.inequalities()) ineqs.push_back({c.normal, c.rhs + dot(c.normal, offset)});
  return Polyhedron::from_constraints(p.ambient_rank(), std::move(eqs), std::move(ineqs));
}

bool union_covers(std::span<const Polyhedron> cover, std::span<const Polyhedron> covered) {
  std::optional<std::size_t> rank;
  for (const auto& p : cover) {
    if (rank && *rank != p.ambient_rank()) throw Error(ErrorCode::DimensionMismatch, "union_covers: mixed ranks");
    rank = p.ambient_rank();
  }
  for (const auto& p : covered) {
    if (rank && *rank != p.ambient_rank()) throw Error(ErrorCode::DimensionMismatch, "union_covers: mixed ranks");
    rank = p.ambient_rank();
  }

  // Every constraint hyperplane of the cover, oriented canonically.
  std::set<Constraint> hyperplanes;
  for (const auto& p : cover) {
    auto add = [&](const Constraint& c) {
      Constraint h = c;
      auto lead = std::find_if(h.normal.begin(), h.normal.end(), [](const Rat& x) { return x != 0; });
      if (lead != h.normal.end() && *lead < 0) h = negated(h);
      hyperplanes.insert(std::move(h));
    };
    for (const auto& c : p.equalities()) add(c);
    for (const auto& c : p.inequalities()) add(c);
  }

  auto point_covered = [&](const Vec& x) {
    return std::any_of(cover.begin(), cover.end(), [&](const Polyhedron& p) { return p.contains(x); });
  };
  auto strictly_meets = [](const Polyhedron& piece, const Constraint& side) {
    LinearSystem s = piece.system(true);
    s.add_inequality(side.normal, side.rhs, true);
    return solve_feasibility(s).has_value();
  };

  for (const auto& cell : covered) {
    if (cell.is_empty()) continue;
    std::vector<Polyhedron> pieces{cell};
    for (const auto& h : hyperplanes) {
      std::vector<Polyhedron> next;
      for (auto& piece : pieces) {
        if (piece.dimension() == 0 || !strictly_meets(piece, h) || !strictly_meets(piece, negated(h))) {
          next.push_back(std::move(piece));
          continue;
        }
        next.push_back(intersect(piece, Polyhedron::from_constraints(piece.ambient_rank(), {}, {h})));
        next.push_back(intersect(piece, Polyhedron::from_constraints(piece.ambient_rank(), {}, {negated(h)})));
      }
      pieces = std::move(next);
    }
    for (const auto& piece : pieces)
      if (!point_covered(relint_point(piece))) return false;
  }
  return true;
}

std::vector<Polyhedron> faces(const Polyhedron& p) {
  if (p.is_empty()) return {};
  std::set<Polyhedron> seen{p};
  std::deque<Polyhedron> queue{p};
  while (!queue.empty()) {
    const Polyhedron q = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i < q.inequalities().size(); ++i) {
      std::vector<Constraint> eqs = q.equalities();
      std::vector<Constraint> ineqs;
      for (std::size_t j = 0; j < q.inequalities().size(); ++j) {
        if (j == i) eqs.push_back(q.inequalities()[j]);
        else ineqs.push_back(q.inequalities()[j]);
      }
      Polyhedron f = Polyhedron::from_constraints(q.ambient_rank(), std::move(eqs), std::move(ineqs));
      if (f.is_empty() || seen.count(f)) continue;
      seen.insert(f);
      queue.push_back(std::move(f));
    }
  }
  std::vector<Polyhedron> out(seen.begin(), seen.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const Polyhedron& a, const Polyhedron& b) { return a.dimension() > b.dimension(); });
  return out;
}

std::vector<Vec> direction_basis(const Polyhedron& p) {
  if (p.is_empty()) return {};
  RatMatrix m(p.equalities().size(), p.ambient_rank());
  for (std::size_t i = 0; i < p.equalities().size(); ++i)
    for (std::size_t j = 0; j < p.ambient_rank(); ++j) m(i, j) = p.equalities()[i].normal[j];
  return nullspace(m);
}

IntMatrix direction_lattice(const Polyhedron& p) {
  IntMatrix m(p.equalities().size(), p.ambient_rank());
  for (std::size_t i = 0; i < p.equalities().size(); ++i) {
    const IntVec row = to_int_vec(p.equalities()[i].normal);
    for (std::size_t j = 0; j < p.ambient_rank(); ++j) m(i, j) = row[j];
  }
  return integer_kernel(m);
}

std::vector<Vec> lineality_basis(const Polyhedron& p) {
  if (p.is_empty()) return {};
  const std::size_t rows = p.equalities().size() + p.inequalities().size();
  RatMatrix m(rows, p.ambient_rank());
  std::size_t i = 0;
  for (const auto* list : {&p.equalities(), &p.inequalities()})
    for (const auto& c : *list) {
      for (std::size_t j = 0; j < p.ambient_rank(); ++j) m(i, j) = c.normal[j];
      ++i;
    }
  return nullspace(m);
}

}  // namespace tropskel
