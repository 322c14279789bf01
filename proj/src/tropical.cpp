#include "tropskel/tropical.hpp"

#include "tropskel/error.hpp"
#include "tropskel/lattice.hpp"

#include <algorithm>
#include <set>

namespace tropskel {

LaurentPoly::LaurentPoly(std::size_t ambient_rank, std::vector<Term> terms)
    : rank_(ambient_rank), terms_(std::move(terms)) {
  std::set<IntVec> seen;
  for (const auto& t : terms_) {
    if (t.exponent.size() != rank_)
      throw Error(ErrorCode::DimensionMismatch, "exponent " + to_string(t.exponent) + " in a polynomial of rank " +
                                                    std::to_string(rank_));
    if (!seen.insert(t.exponent).second)
      throw Error(ErrorCode::InvalidInput, "repeated exponent " + to_string(t.exponent));
  }
}

Rat LaurentPoly::term_value(std::size_t i, const Vec& w) const {
  if (w.size() != rank_) throw Error(ErrorCode::DimensionMismatch, "point of wrong length");
  return terms_[i].valuation + dot(to_vec(terms_[i].exponent), w);
}

ExtendedTropicalComplex::ExtendedTropicalComplex(Fan fan, std::map<std::string, Stratum> strata)
    : fan_(std::move(fan)), strata_(std::move(strata)) {
  for (const auto& [id, s] : strata_) {
    if (!fan_.contains(id)) throw Error(ErrorCode::UnknownCone, "stratum for unknown cone " + id);
    const std::size_t rank = stratum_rank(id);
    for (const auto& c : s.cells)
      if (c.polyhedron.ambient_rank() != rank)
        throw Error(ErrorCode::DimensionMismatch, "cell " + c.id + " of stratum " + id + " has rank " +
                                                      std::to_string(c.polyhedron.ambient_rank()) + ", expected " +
                                                      std::to_string(rank));
  }
}

const Stratum& ExtendedTropicalComplex::stratum(const std::string& id) const {
  if (!fan_.contains(id)) throw Error(ErrorCode::UnknownCone, "no cone with id " + id);
  auto it = strata_.find(id);
  if (it == strata_.end()) throw Error(ErrorCode::MissingStratumData, "no stratum data for cone " + id);
  return it->second;
}

std::size_t ExtendedTropicalComplex::stratum_rank(const std::string& id) const {
  return fan_.ambient_rank() - static_cast<std::size_t>(fan_.dimension(id));
}

bool ExtendedTropicalComplex::complete() const {
  for (const auto& id : fan_.ids())
    if (!strata_.count(id)) return false;
  return true;
}

namespace {

std::vector<std::size_t> minimizing_terms(const LaurentPoly& f, const Vec& w, Rat& minimum) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < f.terms().size(); ++i) {
    const Rat v = f.term_value(i, w);
    if (out.empty() || v < minimum) {
      minimum = v;
      out.assign(1, i);
    } else if (v == minimum) {
      out.push_back(i);
    }
  }
  return out;
}

// Lattice length of the segment spanned by collinear exponents.
Int lattice_length(const LaurentPoly& f, const std::vector<std::size_t>& terms) {
  const IntVec& base = f.terms()[terms.front()].exponent;
  std::optional<IntVec> direction;
  Int lo = 0, hi = 0;
  for (std::size_t t : terms) {
    IntVec d(base.size());
    for (std::size_t j = 0; j < d.size(); ++j) d[j] = f.terms()[t].exponent[j] - base[j];
    if (std::all_of(d.begin(), d.end(), [](const Int& x) { return x == 0; })) continue;
    if (!direction) direction = primitive(to_vec(d));
    // d = c * direction for an integer c
    std::optional<Int> c;
    for (std::size_t j = 0; j < d.size(); ++j) {
      if ((*direction)[j] == 0) {
        if (d[j] != 0) c.reset();
        if (d[j] != 0) throw Error(ErrorCode::InternalInconsistency, "facet exponents are not collinear");
        continue;
      }
      const Int cj = d[j] / (*direction)[j];
      if (c && *c != cj) throw Error(ErrorCode::InternalInconsistency, "facet exponents are not collinear");
      c = cj;
    }
    lo = std::min(lo, *c);
    hi = std::max(hi, *c);
  }
  return hi - lo;
}

}  // namespace

std::vector<WeightedCell> trop_hypersurface(const LaurentPoly& f) {
  const auto& terms = f.terms();
  if (terms.size() < 2)
    throw Error(ErrorCode::TooFewTerms, "tropicalization needs at least two terms, got " + std::to_string(terms.size()));
  const std::size_t n = f.ambient_rank();

  std::set<Polyhedron> facets;
  for (std::size_t i = 0; i < terms.size(); ++i)
    for (std::size_t j = i + 1; j < terms.size(); ++j) {
      // val_i + <u_i, w> = val_j + <u_j, w> <= val_k + <u_k, w>
      Vec eq(n);
      for (std::size_t c = 0; c < n; ++c) eq[c] = Rat(terms[i].exponent[c] - terms[j].exponent[c]);
      std::vector<Constraint> ineqs;
      for (std::size_t k = 0; k < terms.size(); ++k) {
        if (k == i || k == j) continue;
        Vec a(n);
        for (std::size_t c = 0; c < n; ++c) a[c] = Rat(terms[k].exponent[c] - terms[i].exponent[c]);
        ineqs.push_back({std::move(a), terms[i].valuation - terms[k].valuation});
      }
      Polyhedron cell = canonicalize(n, {{std::move(eq), terms[j].valuation - terms[i].valuation}}, std::move(ineqs));
      if (cell.dimension() == static_cast<int>(n) - 1) facets.insert(std::move(cell));
    }

  std::vector<WeightedCell> out;
  for (const Polyhedron& p : facets) {
    Rat minimum;
    const auto attaining = minimizing_terms(f, relint_point(p), minimum);
    if (attaining.size() < 2) throw Error(ErrorCode::InternalInconsistency, "facet with a unique minimizing term");
    out.push_back({"P" + std::to_string(out.size() + 1), p, lattice_length(f, attaining), {}});
  }
  return out;
}

InitialForm initial_form(const LaurentPoly& f, const Vec& w) {
  if (w.size() != f.ambient_rank()) throw Error(ErrorCode::DimensionMismatch, "point of wrong length");
  if (f.terms().empty()) throw Error(ErrorCode::TooFewTerms, "initial form of the zero polynomial");
  Rat minimum;
  std::vector<Term> kept;
  for (std::size_t i : minimizing_terms(f, w, minimum)) kept.push_back(f.terms()[i]);
  return {LaurentPoly(f.ambient_rank(), std::move(kept)), minimum};
}

InitialForm initial_form(const LaurentPoly& f, const OrbitPoint& w) {
  if (w.cone != Fan::kZeroId)
    throw Error(ErrorCode::OrbitPointUnsupported,
                "initial forms on the orbit of cone " + w.cone + " need the orbit's own equations");
  return initial_form(f, w.coords);
}

ExtendedTropicalComplex extend_to_orbits(const std::vector<WeightedCell>& dense, const Fan& fan) {
  const std::size_t n = fan.ambient_rank();
  for (const auto& c : dense)
    if (c.polyhedron.ambient_rank() != n)
      throw Error(ErrorCode::DimensionMismatch, "cell " + c.id + " has rank " +
                                                    std::to_string(c.polyhedron.ambient_rank()) +
                                                    " but the fan has rank " + std::to_string(n));

  std::vector<Cone> recession;
  for (const auto& c : dense) recession.push_back(recession_cone(c.polyhedron));

  std::map<std::string, Stratum> strata;
  strata[Fan::kZeroId] = {dense, Provenance::Input};
  for (const auto& sigma : fan.ids()) {
    if (sigma == Fan::kZeroId) continue;
    const RatMatrix q = quotient_map(fan, sigma).rational();
    std::vector<Polyhedron> images;
    std::vector<std::vector<std::string>> sources;
    for (std::size_t i = 0; i < dense.size(); ++i) {
      if (dense[i].polyhedron.is_empty() || !relint_meets(recession[i], fan, sigma)) continue;
      Polyhedron image = linear_image(dense[i].polyhedron, q);
      auto it = std::find(images.begin(), images.end(), image);
      if (it == images.end()) {
        images.push_back(std::move(image));
        sources.push_back({dense[i].id});
      } else {
        sources[static_cast<std::size_t>(it - images.begin())].push_back(dense[i].id);
      }
    }
    Stratum s{{}, Provenance::Derived};
    for (std::size_t k = 0; k < images.size(); ++k) {
      std::string id;
      for (const auto& src : sources[k]) id += (id.empty() ? "" : "+") + src;
      s.cells.push_back({std::move(id), std::move(images[k]), std::nullopt, std::move(sources[k])});
    }
    strata[sigma] = std::move(s);
  }
  return ExtendedTropicalComplex(fan, std::move(strata));
}

int local_dimension(std::span<const WeightedCell> stratum, const Vec& point) {
  int best = -1;
  for (const auto& c : stratum)
    if (c.polyhedron.contains(point)) best = std::max(best, c.polyhedron.dimension());
  if (best < 0) throw Error(ErrorCode::PointNotInSupport, to_string(point) + " lies in no cell of the stratum");
  return best;
}

std::vector<Cone> recession_fan_support(std::span<const WeightedCell> cells) {
  std::vector<Cone> out;
  for (const auto& c : cells) {
    if (c.polyhedron.is_empty()) continue;
    Cone r = recession_cone(c.polyhedron);
    if (std::find(out.begin(), out.end(), r) == out.end()) out.push_back(std::move(r));
  }
  return out;
}

bool in_support(std::span<const WeightedCell> cells, const Vec& point) {
  return std::any_of(cells.begin(), cells.end(), [&](const WeightedCell& c) { return c.polyhedron.contains(point); });
}

BalancingReport check_balancing(std::span<const WeightedCell> cells) {
  BalancingReport report;
  if (cells.empty()) return report;
  const std::size_t n = cells.front().polyhedron.ambient_rank();
  if (n < 2) return report;
  const int facet_dim = static_cast<int>(n) - 1;

  std::vector<std::set<Polyhedron>> facet_faces;
  std::set<Polyhedron> ridges;
  for (const auto& c : cells) {
    if (c.polyhedron.dimension() != facet_dim)
      throw Error(ErrorCode::InvalidInput, "balancing needs a pure codimension-one complex; cell " + c.id);
    if (!c.multiplicity) throw Error(ErrorCode::InvalidInput, "balancing needs multiplicities; cell " + c.id);
    std::set<Polyhedron> fs;
    for (auto& f : faces(c.polyhedron))
      if (f.dimension() == facet_dim - 1) {
        ridges.insert(f);
        fs.insert(std::move(f));
      }
    facet_faces.push_back(std::move(fs));
  }

  for (const Polyhedron& ridge : ridges) {
    ++report.ridges_checked;
    // Z^n / (Z^n cap lin(ridge)) is identified with Z^2.
    const RatMatrix quotient = to_rat(quotient_matrix(direction_lattice(ridge)));
    const Vec base = relint_point(ridge);
    Vec total(quotient.rows(), Rat(0));
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (!facet_faces[i].count(ridge)) continue;
      const Vec u = to_vec(primitive(quotient.apply(relint_point(cells[i].polyhedron) - base)));
      total = total + Rat(*cells[i].multiplicity) * u;
    }
    if (!is_zero(total)) report.unbalanced.push_back(ridge);
  }
  return report;
}

}  // namespace tropskel
