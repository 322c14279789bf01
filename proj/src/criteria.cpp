#include "tropskel/criteria.hpp"

#include "parallel.hpp"
#include "tropskel/error.hpp"

#include <algorithm>
#include <tuple>

namespace tropskel {

namespace {

constexpr const char* kProperHypothesis = "proper intersection: dim pi_sigma(P) = d - dim(sigma)";
constexpr const char* kClosedHypothesis =
    "closed skeleton: dim pi_sigma(P) = d_sigma for every d_tau-dimensional cell P of stratum tau reaching sigma";
constexpr const char* kContinuityHypothesis =
    "continuous section: dim pi_sigma(P) = d_sigma for every dense cell P reaching sigma";
constexpr const char* kLimitHypothesis = "limit points: pi_sigma(P) is d-maximal at every face";

void finalize(Verdict& v) {
  v.witnesses.clear();
  for (const auto& f : v.checks)
    if (!f.ok) v.witnesses.push_back(f);
  std::stable_sort(v.witnesses.begin(), v.witnesses.end(), [](const Finding& a, const Finding& b) {
    return std::tie(a.cone, a.cell, a.tau) < std::tie(b.cone, b.cell, b.tau);
  });
  if (!v.witnesses.empty()) v.status = Status::Fail;
}

int dim_of(const std::map<std::string, int>& dims, const std::string& id) {
  auto it = dims.find(id);
  if (it == dims.end())
    throw Error(ErrorCode::MissingStratumData, "no stratum data or supplied dimension for cone " + id);
  return it->second;
}

}  // namespace

std::string status_name(Status s) {
  switch (s) {
    case Status::Pass: return "PASS";
    case Status::Fail: return "FAIL";
    case Status::Vacuous: return "VACUOUS";
    case Status::InsufficientData: return "INSUFFICIENT_DATA";
  }
  return "UNKNOWN";
}

int projected_dimension(const Polyhedron& p, const std::vector<IntVec>& sigma_rays) {
  if (p.is_empty()) return -1;
  const auto dirs = direction_basis(p);
  std::vector<Vec> rows(dirs.begin(), dirs.end());
  std::vector<Vec> ray_rows;
  for (const auto& r : sigma_rays) ray_rows.push_back(to_vec(r));
  rows.insert(rows.end(), ray_rows.begin(), ray_rows.end());
  const std::size_t n = p.ambient_rank();
  const auto joint = rank(RatMatrix::from_rows(rows, n));
  const auto cone = rank(RatMatrix::from_rows(ray_rows, n));
  return static_cast<int>(joint) - static_cast<int>(cone);
}

int stratum_dimension(std::span<const WeightedCell> cells, const std::string& label) {
  int d = -1;
  for (const auto& c : cells) d = std::max(d, c.polyhedron.dimension());
  std::vector<Polyhedron> top, low;
  for (const auto& c : cells) {
    if (c.polyhedron.is_empty()) continue;
    (c.polyhedron.dimension() == d ? top : low).push_back(c.polyhedron);
  }
  if (!low.empty() && !union_covers(top, low))
    throw Error(ErrorCode::NotEquidimensional,
                "stratum " + (label.empty() ? std::string("?") : label) + " has cells of dimension < " +
                    std::to_string(d) + " outside the top-dimensional cells");
  return d;
}

std::map<std::string, int> stratum_dimensions(const ExtendedTropicalComplex& x, const DimensionOverrides& dims) {
  std::map<std::string, int> out;
  for (const auto& [id, d] : dims)
    if (!x.fan().contains(id)) throw Error(ErrorCode::UnknownCone, "dimension supplied for unknown cone " + id);
  for (const auto& id : x.fan().ids()) {
    auto o = dims.find(id);
    if (x.has_stratum(id)) {
      const int actual = stratum_dimension(x.stratum(id).cells, id);
      if (o != dims.end() && actual != -1 && actual != o->second)
        throw Error(ErrorCode::NotEquidimensional, "stratum " + id + " has dimension " + std::to_string(actual) +
                                                       ", supplied " + std::to_string(o->second));
      out[id] = o != dims.end() ? o->second : actual;
    } else if (o != dims.end()) {
      out[id] = o->second;
    }
  }
  return out;
}

bool is_d_maximal(const Polyhedron& p, const Vec& point, std::span<const WeightedCell> stratum) {
  const int d = local_dimension(stratum, point);
  return p.contains(point) && p.dimension() == d;
}

Verdict check_proper(const ExtendedTropicalComplex& x, const std::string& sigma, const CriteriaOptions& opts) {
  const Fan& fan = x.fan();
  if (!fan.contains(sigma)) throw Error(ErrorCode::UnknownCone, "no cone with id " + sigma);
  const auto& dense = x.dense();
  const int d = stratum_dimension(dense, Fan::kZeroId);
  const int ds = fan.dimension(sigma);
  const auto& rays = fan.rays(sigma);
  const Polyhedron& cone = fan.cone(sigma).polyhedron();

  struct Outcome {
    std::optional<Finding> finding;
    bool agree = true;
  };
  auto results = detail::parallel_map(dense.size(), opts.jobs, [&](std::size_t i) -> Outcome {
    const auto& cell = dense[i];
    if (cell.polyhedron.dimension() != d) return {};
    const Cone rec = recession_cone(cell.polyhedron);
    auto hit = relint_meets(rec, fan, sigma);
    if (!hit) return {};
    Finding f{"", sigma, cell.id, projected_dimension(cell.polyhedron, rays), d - ds, *hit, kProperHypothesis, true};
    const bool cond3 = f.computed_dim == f.required_dim;
    const bool cond2 = intersect(rec.polyhedron(), cone).dimension() == ds;
    f.ok = ds <= d && cond3;
    return {std::move(f), cond2 == cond3};
  });

  Verdict v;
  v.criterion = "proper";
  for (auto& r : results) {
    if (!r.finding) continue;
    if (!r.agree)
      v.notes.push_back("cell " + r.finding->cell + ": recession-cone overlap condition disagrees with the projection "
                        "condition; the projection condition decides");
    v.checks.push_back(std::move(*r.finding));
  }
  if (v.checks.empty()) {
    v.status = Status::Vacuous;
    v.notes.push_back("empty intersection: no dense cell has a recession cone meeting relint(" + sigma + ")");
    return v;
  }
  if (ds > d) v.notes.push_back("closure meets the orbit of " + sigma + " although dim(" + sigma + ") > d");
  finalize(v);
  return v;
}

Verdict check_proper_all(const ExtendedTropicalComplex& x, const CriteriaOptions& opts) {
  Verdict v;
  v.criterion = "proper-all";
  for (const auto& id : x.fan().ids()) {
    if (id == Fan::kZeroId) continue;
    Verdict one = check_proper(x, id, opts);
    for (auto& f : one.checks) v.checks.push_back(std::move(f));
    for (auto& n : one.notes) v.notes.push_back(std::move(n));
  }
  finalize(v);
  return v;
}

Verdict check_skeleton_closed(const ExtendedTropicalComplex& x, const CriteriaOptions& opts) {
  const Fan& fan = x.fan();
  const auto dims = stratum_dimensions(x, opts.dims);

  struct Task {
    std::string tau;
    const WeightedCell* cell;
    const StarFan* star;
  };
  std::vector<StarFan> stars;
  std::vector<std::string> taus;
  for (const auto& tau : fan.ids()) {
    if (fan.cones_containing(tau).size() <= 1) continue;
    x.stratum(tau);  // every cone with a proper coface needs stratum data
    taus.push_back(tau);
  }
  stars.reserve(taus.size());
  for (const auto& tau : taus) stars.push_back(star_fan(fan, tau));

  std::vector<Task> tasks;
  for (std::size_t k = 0; k < taus.size(); ++k) {
    const int dt = dim_of(dims, taus[k]);
    for (const auto& cell : x.stratum(taus[k]).cells)
      if (cell.polyhedron.dimension() == dt) tasks.push_back({taus[k], &cell, &stars[k]});
  }

  auto results = detail::parallel_map(tasks.size(), opts.jobs, [&](std::size_t i) {
    const Task& t = tasks[i];
    std::vector<Finding> out;
    const Cone rec = recession_cone(t.cell->polyhedron);
    for (const auto& sigma : t.star->fan.ids()) {
      if (sigma == Fan::kZeroId) continue;
      auto hit = relint_meets(rec, t.star->fan, sigma);
      if (!hit) continue;
      const std::string& original = t.star->original.at(sigma);
      Finding f{t.tau, original, t.cell->id, projected_dimension(t.cell->polyhedron, t.star->fan.rays(sigma)),
                dim_of(dims, original), *hit, kClosedHypothesis, true};
      f.ok = f.computed_dim == f.required_dim;
      out.push_back(std::move(f));
    }
    return out;
  });

  Verdict v;
  v.criterion = "closed";
  for (auto& r : results)
    for (auto& f : r) v.checks.push_back(std::move(f));
  finalize(v);
  return v;
}

Verdict check_continuity(const ExtendedTropicalComplex& x, const CriteriaOptions& opts) {
  const Fan& fan = x.fan();
  const auto& dense = x.dense();
  const int d = stratum_dimension(dense, Fan::kZeroId);
  const auto dims = stratum_dimensions(x, opts.dims);

  auto results = detail::parallel_map(dense.size(), opts.jobs, [&](std::size_t i) {
    const auto& cell = dense[i];
    std::vector<Finding> out;
    if (cell.polyhedron.dimension() != d) return out;
    const Cone rec = recession_cone(cell.polyhedron);
    for (const auto& sigma : fan.ids()) {
      if (sigma == Fan::kZeroId) continue;
      auto hit = relint_meets(rec, fan, sigma);
      if (!hit) continue;
      Finding f{"", sigma, cell.id, projected_dimension(cell.polyhedron, fan.rays(sigma)), dim_of(dims, sigma), *hit,
                kContinuityHypothesis, true};
      f.ok = f.computed_dim == f.required_dim;
      out.push_back(std::move(f));
    }
    return out;
  });

  Verdict v;
  v.criterion = "continuity";
  for (auto& r : results)
    for (auto& f : r) v.checks.push_back(std::move(f));
  if (v.checks.empty()) v.notes.push_back("no dense cell reaches a boundary orbit");
  finalize(v);

  const Verdict proper = check_proper_all(x, opts);
  v.proper_shortcut = proper.status;
  if (proper.status == Status::Pass && v.status == Status::Fail)
    v.notes.push_back("every orbit is met properly, but the supplied stratum dimensions disagree with the dense cells");
  return v;
}

Verdict check_limit_hypothesis(const std::string& cell_id, const std::string& sigma, const ExtendedTropicalComplex& x) {
  const Fan& fan = x.fan();
  if (!fan.contains(sigma)) throw Error(ErrorCode::UnknownCone, "no cone with id " + sigma);
  const auto& dense = x.dense();
  auto it = std::find_if(dense.begin(), dense.end(), [&](const WeightedCell& c) { return c.id == cell_id; });
  if (it == dense.end()) throw Error(ErrorCode::UnknownCell, "no dense cell with id " + cell_id);

  Verdict v;
  v.criterion = "limit";
  if (it->polyhedron.is_empty()) {
    v.status = Status::Vacuous;
    v.notes.push_back("cell " + cell_id + " is empty");
    return v;
  }
  auto hit = relint_meets(recession_cone(it->polyhedron), fan, sigma);
  if (!hit) {
    v.status = Status::Vacuous;
    v.notes.push_back("recession cone of " + cell_id + " misses relint(" + sigma + ")");
    return v;
  }
  const auto& stratum = x.stratum(sigma).cells;
  const Polyhedron image = linear_image(it->polyhedron, quotient_map(fan, sigma).rational());
  for (const auto& face : faces(image)) {
    const Vec w = relint_point(face);
    Finding f{"", sigma, cell_id, image.dimension(), local_dimension(stratum, w), w, kLimitHypothesis, true};
    f.ok = f.computed_dim == f.required_dim;
    v.checks.push_back(std::move(f));
  }
  finalize(v);
  return v;
}

std::vector<RelevantCells> relevant_cells(std::span<const WeightedCell> stratum, const OrbitPoint& point,
                                          const ComponentFanData& data) {
  if (!(data.base == point))
    throw Error(ErrorCode::BasePointMismatch, "component data is based at a different point");
  std::vector<RelevantCells> out;
  for (const auto& comp : data.components) {
    std::vector<Polyhedron> support;
    for (const auto& c : comp.support) {
      if (c.ambient_rank() != point.coords.size())
        throw Error(ErrorCode::DimensionMismatch, "support cone of component " + comp.label + " has wrong rank");
      support.push_back(c.polyhedron());
    }
    RelevantCells r{comp.label, {}};
    for (const auto& cell : stratum) {
      if (cell.polyhedron.ambient_rank() != point.coords.size())
        throw Error(ErrorCode::DimensionMismatch, "cell " + cell.id + " has wrong rank");
      if (!cell.polyhedron.contains(point.coords)) continue;
      const Polyhedron lc = local_cone(cell.polyhedron, point.coords).polyhedron();
      if (union_covers(support, std::span<const Polyhedron>(&lc, 1))) r.cells.push_back(cell.id);
    }
    out.push_back(std::move(r));
  }
  if (data.components.size() == 1) {
    for (const auto& cell : stratum)
      if (cell.polyhedron.contains(point.coords) &&
          std::find(out[0].cells.begin(), out[0].cells.end(), cell.id) == out[0].cells.end())
        throw Error(ErrorCode::DataInconsistent, "single component " + data.components[0].label +
                                                     " does not contain the local cone of cell " + cell.id);
  }
  return out;
}

}  // namespace tropskel
