#pragma once

#include "tropskel/rational.hpp"

#include <optional>
#include <vector>

namespace tropskel {

enum class Relation { Equal, AtLeast, Greater };

/// <normal, x> (= | >= | >) rhs
struct LinearConstraint {
  Vec normal;
  Rat rhs;
  Relation relation = Relation::AtLeast;

  bool satisfied_by(const Vec& x) const;
};

class LinearSystem {
 public:
  explicit LinearSystem(std::size_t dimension) : dimension_(dimension) {}

  std::size_t dimension() const noexcept { return dimension_; }
  const std::vector<LinearConstraint>& constraints() const noexcept { return constraints_; }

  LinearSystem& add(LinearConstraint c);
  LinearSystem& add_equality(Vec normal, Rat rhs) { return add({std::move(normal), std::move(rhs), Relation::Equal}); }
  LinearSystem& add_inequality(Vec normal, Rat rhs, bool strict = false) {
    return add({std::move(normal), std::move(rhs), strict ? Relation::Greater : Relation::AtLeast});
  }

  bool satisfied_by(const Vec& x) const;

 private:
  std::size_t dimension_;
  std::vector<LinearConstraint> constraints_;
};

/// Exact feasibility by Gaussian elimination of the equalities followed by
/// Fourier-Motzkin elimination carrying strictness. The witness is chosen
/// deterministically: midpoint of each feasible interval, bound +/- 1 for
/// half-open ones, 0 when unconstrained.
std::optional<Vec> solve_feasibility(const LinearSystem& system);

/// Projects the solution set onto the variables with keep[i] == true. The
/// result lives in the kept coordinates, in their original order.
LinearSystem project(const LinearSystem& system, const std::vector<bool>& keep);

}  // namespace tropskel
