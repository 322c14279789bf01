#pragma once

#include "tropskel/fan.hpp"

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace tropskel {

struct Term {
  IntVec exponent;
  Rat valuation;
  std::string tag;  // optional residue annotation, e.g. the sign of the coefficient
};

/// Sum of a_u x^u, recorded as exponents u with val(a_u).
class LaurentPoly {
 public:
  LaurentPoly(std::size_t ambient_rank, std::vector<Term> terms);

  std::size_t ambient_rank() const noexcept { return rank_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  /// val(a_u) + <u, w>
  Rat term_value(std::size_t i, const Vec& w) const;

 private:
  std::size_t rank_;
  std::vector<Term> terms_;
};

struct WeightedCell {
  std::string id;
  Polyhedron polyhedron;
  std::optional<Int> multiplicity;   // std::nullopt = unknown
  std::vector<std::string> sources;  // dense cells a projected cell came from
};

enum class Provenance { Input, Derived };

struct Stratum {
  std::vector<WeightedCell> cells;
  Provenance provenance = Provenance::Input;
};

/// Tropicalization inside the partial compactification: one list of cells per
/// cone of the fan, each in the coordinates of that cone's quotient map.
class ExtendedTropicalComplex {
 public:
  ExtendedTropicalComplex(Fan fan, std::map<std::string, Stratum> strata);

  const Fan& fan() const noexcept { return fan_; }
  const std::map<std::string, Stratum>& strata() const noexcept { return strata_; }
  bool has_stratum(const std::string& id) const { return strata_.count(id) > 0; }
  /// Throws MissingStratumData when the complex holds no data for the cone.
  const Stratum& stratum(const std::string& id) const;
  const std::vector<WeightedCell>& dense() const { return stratum(Fan::kZeroId).cells; }
  std::size_t stratum_rank(const std::string& id) const;
  /// True when every cone of the fan has a stratum entry.
  bool complete() const;

 private:
  Fan fan_;
  std::map<std::string, Stratum> strata_;
};

/// Cells of the corner locus of min(val(a_u) + <u, w>), one per dual edge,
/// with multiplicity the lattice length of that edge. Ids are "P1", "P2", ...
/// in canonical order.
std::vector<WeightedCell> trop_hypersurface(const LaurentPoly& f);

struct InitialForm {
  LaurentPoly form;
  Rat minimum;
};

InitialForm initial_form(const LaurentPoly& f, const Vec& w);
/// Only points of the dense stratum are supported; orbit points throw
/// OrbitPointUnsupported.
InitialForm initial_form(const LaurentPoly& f, const OrbitPoint& w);

/// Strata of the closure: for each cone sigma, the projections pi_sigma(P) of
/// the dense cells whose recession cone meets relint(sigma).
ExtendedTropicalComplex extend_to_orbits(const std::vector<WeightedCell>& dense, const Fan& fan);

/// Largest dimension of a cell containing the point.
int local_dimension(std::span<const WeightedCell> stratum, const Vec& point);

std::vector<Cone> recession_fan_support(std::span<const WeightedCell> cells);

bool in_support(std::span<const WeightedCell> cells, const Vec& point);

struct BalancingReport {
  std::size_t ridges_checked = 0;
  std::vector<Polyhedron> unbalanced;

  bool balanced() const noexcept { return unbalanced.empty(); }
};

/// Weighted balancing of a pure codimension-one complex around every
/// codimension-two face.
BalancingReport check_balancing(std::span<const WeightedCell> cells);

}  // namespace tropskel
