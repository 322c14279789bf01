#pragma once

#include "tropskel/criteria.hpp"

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace tropskel {

/// A cell of the complex Sigma_1 together with the components of its stratum.
struct SigmaCell {
  std::string id;
  int dim = 0;
  std::vector<std::string> components;
  std::optional<Polyhedron> polyhedron;  // geometry, when known
  /// Component lattices N_{Delta_S} as row bases; ambient coordinates when the
  /// geometry is given, otherwise coordinates of N_P = Z^dim.
  std::map<std::string, IntMatrix> lattices;
};

/// Component `from` over a cell restricts to component `to` over its facet.
struct Inclusion {
  std::string facet;
  std::string from;
  std::string to;
  std::optional<std::string> cell;  // disambiguates when several cells share the label
};

struct HKInput {
  std::vector<SigmaCell> cells;
  std::vector<std::pair<std::string, std::string>> faces;  // (facet, cell)
  std::vector<Inclusion> inclusions;
  std::map<std::string, Int> mtrop;
  std::optional<std::vector<Polyhedron>> support;  // asserted |Sigma_1|, cross-checked when present
};

struct HKCell {
  std::string cell;
  std::string component;
  int dim = 0;
};

/// Pairs (P, C) with the boundary relation induced by the inclusions.
class HKComplex {
 public:
  const std::vector<HKCell>& cells() const noexcept { return cells_; }
  /// (facet pair index, pair index)
  const std::vector<std::pair<std::size_t, std::size_t>>& boundary() const noexcept { return boundary_; }
  const std::vector<SigmaCell>& sigma_cells() const noexcept { return sigma_; }
  const SigmaCell& sigma_cell(const std::string& id) const;
  const std::map<std::string, Int>& mtrop() const noexcept { return mtrop_; }

  std::vector<std::size_t> f_vector() const;
  std::size_t connected_components() const;
  /// The natural map (P, C) -> P.
  const std::string& image(std::size_t i) const { return cells_.at(i).cell; }
  bool is_maximal(const std::string& cell) const;

 private:
  friend HKComplex build_hk(const HKInput& input);

  std::vector<HKCell> cells_;
  std::vector<std::pair<std::size_t, std::size_t>> boundary_;
  std::vector<SigmaCell> sigma_;
  std::vector<std::pair<std::string, std::string>> faces_;
  std::map<std::string, Int> mtrop_;
};

HKComplex build_hk(const HKInput& input);

/// [N_P : lattice]; throws IndexInfinite when the lattice has lower rank.
Int component_index(const HKComplex& complex, const std::string& cell, const std::optional<IntMatrix>& lattice);
bool unimodular_check(const HKComplex& complex, const std::string& cell, const std::optional<IntMatrix>& lattice);

struct STReport {
  std::string cell;
  Int mtrop;
  std::vector<std::pair<std::string, Int>> indices;  // per component
  Int index_sum;
  Status status = Status::Pass;
  std::vector<std::string> failures;
};

/// m_Trop(P) = sum of the component indices, with m_Trop(P) >= r and all
/// indices 1 when m_Trop(P) = r.
STReport validate_st_formula(const HKComplex& complex, const std::string& cell);

}  // namespace tropskel
