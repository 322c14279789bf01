#include "tropskel/hk.hpp"

#include "tropskel/error.hpp"
#include "tropskel/lattice.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace tropskel {

const SigmaCell& HKComplex::sigma_cell(const std::string& id) const {
  for (const auto& c : sigma_)
    if (c.id == id) return c;
  throw Error(ErrorCode::UnknownCell, "no cell with id " + id);
}

std::vector<std::size_t> HKComplex::f_vector() const {
  std::vector<std::size_t> f;
  for (const auto& c : cells_) {
    if (f.size() <= static_cast<std::size_t>(c.dim)) f.resize(static_cast<std::size_t>(c.dim) + 1, 0);
    ++f[static_cast<std::size_t>(c.dim)];
  }
  return f;
}

std::size_t HKComplex::connected_components() const {
  std::vector<std::size_t> parent(cells_.size());
  std::iota(parent.begin(), parent.end(), std::size_t{0});
  auto find = [&](std::size_t i) {
    while (parent[i] != i) i = parent[i] = parent[parent[i]];
    return i;
  };
  std::size_t count = cells_.size();
  for (const auto& [a, b] : boundary_) {
    const std::size_t ra = find(a), rb = find(b);
    if (ra != rb) {
      parent[ra] = rb;
      --count;
    }
  }
  return count;
}

bool HKComplex::is_maximal(const std::string& cell) const {
  sigma_cell(cell);
  return std::none_of(faces_.begin(), faces_.end(), [&](const auto& f) { return f.first == cell; });
}

HKComplex build_hk(const HKInput& input) {
  HKComplex out;
  std::map<std::string, const SigmaCell*> by_id;
  for (const auto& c : input.cells) {
    if (c.dim < 0) throw Error(ErrorCode::InvalidInput, "cell " + c.id + " has negative dimension");
    if (!by_id.emplace(c.id, &c).second) throw Error(ErrorCode::InvalidInput, "duplicate cell id " + c.id);
    if (c.components.empty()) throw Error(ErrorCode::InvalidInput, "cell " + c.id + " has no components");
    std::set<std::string> labels(c.components.begin(), c.components.end());
    if (labels.size() != c.components.size())
      throw Error(ErrorCode::InvalidInput, "cell " + c.id + " lists a component twice");
    if (c.polyhedron && c.polyhedron->dimension() != c.dim)
      throw Error(ErrorCode::DataInconsistent, "cell " + c.id + " has dimension " +
                                                   std::to_string(c.polyhedron->dimension()) + ", declared " +
                                                   std::to_string(c.dim));
    for (const auto& [label, lattice] : c.lattices) {
      (void)lattice;
      if (!labels.count(label))
        throw Error(ErrorCode::InvalidInput, "lattice for unknown component " + label + " of cell " + c.id);
    }
  }
  auto cell = [&](const std::string& id) -> const SigmaCell& {
    auto it = by_id.find(id);
    if (it == by_id.end()) throw Error(ErrorCode::UnknownCell, "no cell with id " + id);
    return *it->second;
  };
  for (const auto& [id, m] : input.mtrop) {
    cell(id);
    if (m < 1) throw Error(ErrorCode::InvalidInput, "m_Trop of " + id + " must be positive");
  }

  out.sigma_ = input.cells;
  std::sort(out.sigma_.begin(), out.sigma_.end(),
            [](const SigmaCell& a, const SigmaCell& b) { return std::tie(a.dim, a.id) < std::tie(b.dim, b.id); });
  std::map<std::pair<std::string, std::string>, std::size_t> index;
  for (const auto& c : out.sigma_) {
    std::vector<std::string> labels = c.components;
    std::sort(labels.begin(), labels.end());
    for (const auto& l : labels) {
      index[{c.id, l}] = out.cells_.size();
      out.cells_.push_back({c.id, l, c.dim});
    }
  }

  for (const auto& inc : input.inclusions) {
    cell(inc.facet);
    if (inc.cell) cell(*inc.cell);
  }

  std::set<std::pair<std::string, std::string>> seen_faces;
  for (const auto& [facet_id, cell_id] : input.faces) {
    const SigmaCell& facet = cell(facet_id);
    const SigmaCell& big = cell(cell_id);
    if (!seen_faces.insert({facet_id, cell_id}).second) continue;
    if (facet.dim != big.dim - 1)
      throw Error(ErrorCode::NotGraded, facet_id + " (dim " + std::to_string(facet.dim) + ") is listed as a facet of " +
                                            cell_id + " (dim " + std::to_string(big.dim) + ")");
    if (facet.polyhedron && big.polyhedron) {
      const auto fs = faces(*big.polyhedron);
      if (std::find(fs.begin(), fs.end(), *facet.polyhedron) == fs.end())
        throw Error(ErrorCode::DataInconsistent, facet_id + " is not a face of " + cell_id);
    }
    out.faces_.push_back({facet_id, cell_id});
    for (const auto& label : big.components) {
      std::set<std::string> targets, fallback;
      for (const auto& inc : input.inclusions) {
        if (inc.facet != facet_id || inc.from != label) continue;
        if (inc.cell && *inc.cell == cell_id) targets.insert(inc.to);
        else if (!inc.cell) fallback.insert(inc.to);
      }
      if (targets.empty()) targets = fallback;
      if (targets.empty())
        throw Error(ErrorCode::MissingInclusion,
                    "no inclusion for component " + label + " of " + cell_id + " along facet " + facet_id);
      if (targets.size() > 1)
        throw Error(ErrorCode::DataInconsistent, "component " + label + " of " + cell_id +
                                                     " has several boundary components over " + facet_id);
      const std::string& to = *targets.begin();
      auto it = index.find({facet_id, to});
      if (it == index.end())
        throw Error(ErrorCode::DataInconsistent, "inclusion target " + to + " is not a component of " + facet_id);
      out.boundary_.push_back({it->second, index.at({cell_id, label})});
    }
  }
  std::sort(out.boundary_.begin(), out.boundary_.end());
  std::sort(out.faces_.begin(), out.faces_.end());
  out.mtrop_ = input.mtrop;

  if (input.support) {
    std::vector<Polyhedron> cells;
    for (const auto& c : input.cells) {
      if (!c.polyhedron)
        throw Error(ErrorCode::InvalidInput, "support cross-check needs the geometry of cell " + c.id);
      cells.push_back(*c.polyhedron);
    }
    if (!union_covers(cells, *input.support) || !union_covers(*input.support, cells))
      throw Error(ErrorCode::DataInconsistent, "the cells do not cover the supplied tropical support");
  }
  return out;
}

Int component_index(const HKComplex& complex, const std::string& cell_id, const std::optional<IntMatrix>& lattice) {
  const SigmaCell& cell = complex.sigma_cell(cell_id);
  if (!lattice) return 1;
  IntMatrix coords = *lattice;
  if (cell.polyhedron) {
    if (lattice->cols() != cell.polyhedron->ambient_rank())
      throw Error(ErrorCode::DimensionMismatch, "lattice of " + cell_id + " has the wrong number of columns");
    const IntMatrix basis = direction_lattice(*cell.polyhedron);
    coords = IntMatrix(lattice->rows(), basis.rows());
    for (std::size_t i = 0; i < lattice->rows(); ++i) {
      auto c = lattice_coordinates(basis, lattice->row(i));
      if (!c) throw Error(ErrorCode::DataInconsistent, "lattice vector " + to_string(lattice->row(i)) +
                                                           " does not lie in the direction lattice of " + cell_id);
      for (std::size_t j = 0; j < c->size(); ++j) coords(i, j) = (*c)[j];
    }
  } else if (lattice->cols() != static_cast<std::size_t>(cell.dim)) {
    throw Error(ErrorCode::DimensionMismatch, "lattice of " + cell_id + " needs " + std::to_string(cell.dim) +
                                                  " columns");
  }
  auto index = lattice_index(coords);
  if (!index) throw Error(ErrorCode::IndexInfinite, "component lattice has lower rank than N_" + cell_id);
  return *index;
}

bool unimodular_check(const HKComplex& complex, const std::string& cell, const std::optional<IntMatrix>& lattice) {
  return component_index(complex, cell, lattice) == 1;
}

STReport validate_st_formula(const HKComplex& complex, const std::string& cell_id) {
  const SigmaCell& cell = complex.sigma_cell(cell_id);
  if (!complex.is_maximal(cell_id)) throw Error(ErrorCode::InvalidInput, cell_id + " is not a maximal cell");
  auto m = complex.mtrop().find(cell_id);
  if (m == complex.mtrop().end()) throw Error(ErrorCode::InvalidInput, "no m_Trop supplied for " + cell_id);

  STReport r;
  r.cell = cell_id;
  r.mtrop = m->second;
  r.index_sum = 0;
  std::vector<std::string> labels = cell.components;
  std::sort(labels.begin(), labels.end());
  for (const auto& l : labels) {
    auto it = cell.lattices.find(l);
    const Int idx = component_index(complex, cell_id, it == cell.lattices.end() ? std::nullopt
                                                                                : std::optional<IntMatrix>(it->second));
    r.indices.push_back({l, idx});
    r.index_sum += idx;
  }
  const Int components = static_cast<long>(labels.size());
  if (r.index_sum != r.mtrop)
    r.failures.push_back("sum of indices " + r.index_sum.str() + " != m_Trop " + r.mtrop.str());
  if (r.mtrop < components)
    r.failures.push_back("m_Trop " + r.mtrop.str() + " < number of components " + components.str());
  if (r.mtrop == components)
    for (const auto& [l, idx] : r.indices)
      if (idx != 1) r.failures.push_back("m_Trop equals the number of components but " + l + " has index " + idx.str());
  r.status = r.failures.empty() ? Status::Pass : Status::Fail;
  return r;
}

}  // namespace tropskel
