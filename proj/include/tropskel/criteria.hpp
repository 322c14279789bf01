#pragma once

#include "tropskel/tropical.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace tropskel {

enum class Status { Pass, Fail, Vacuous, InsufficientData };

std::string status_name(Status s);

/// One evaluated (tau, sigma, cell) condition.
struct Finding {
  std::string tau;   // empty when the check has no base cone
  std::string cone;
  std::string cell;
  int computed_dim = 0;
  int required_dim = 0;
  Vec sample;        // point of rho(P) in relint(sigma), or the sampled relint point
  std::string hypothesis;
  bool ok = true;
};

struct Verdict {
  std::string criterion;
  Status status = Status::Pass;
  std::vector<Finding> witnesses;  // failing findings, sorted by (cone, cell, tau)
  std::vector<Finding> checks;     // every finding evaluated
  std::vector<std::string> notes;
  std::optional<Status> proper_shortcut;
};

/// Dimensions d_sigma supplied by the user; they replace the derived values.
using DimensionOverrides = std::map<std::string, int>;

struct CriteriaOptions {
  unsigned jobs = 1;
  DimensionOverrides dims;
};

/// Dimension of the support of a stratum, -1 when empty. Cells of lower
/// dimension must be covered by the top-dimensional ones.
int stratum_dimension(std::span<const WeightedCell> cells, const std::string& label = "");

/// d_sigma for every cone of the fan (overrides first, then stratum data).
std::map<std::string, int> stratum_dimensions(const ExtendedTropicalComplex& x, const DimensionOverrides& dims = {});

bool is_d_maximal(const Polyhedron& p, const Vec& point, std::span<const WeightedCell> stratum);

Verdict check_proper(const ExtendedTropicalComplex& x, const std::string& sigma, const CriteriaOptions& opts = {});
/// check_proper on every nonzero cone; PASS when each is PASS or VACUOUS.
Verdict check_proper_all(const ExtendedTropicalComplex& x, const CriteriaOptions& opts = {});
Verdict check_skeleton_closed(const ExtendedTropicalComplex& x, const CriteriaOptions& opts = {});
Verdict check_continuity(const ExtendedTropicalComplex& x, const CriteriaOptions& opts = {});
Verdict check_limit_hypothesis(const std::string& cell, const std::string& sigma, const ExtendedTropicalComplex& x);

struct Component {
  std::string label;
  std::vector<Cone> support;
  std::optional<IntMatrix> lattice;
};

struct ComponentFanData {
  OrbitPoint base;
  std::vector<Component> components;
};

struct RelevantCells {
  std::string component;
  std::vector<std::string> cells;
};

std::vector<RelevantCells> relevant_cells(std::span<const WeightedCell> stratum, const OrbitPoint& point,
                                          const ComponentFanData& data);

/// dim pi_sigma(P), computed from linear spans.
int projected_dimension(const Polyhedron& p, const std::vector<IntVec>& sigma_rays);

}  // namespace tropskel
