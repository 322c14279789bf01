#pragma once

#include "tropskel/feasibility.hpp"
#include "tropskel/matrix.hpp"

#include <span>
#include <string>
#include <vector>

namespace tropskel {

/// <normal, x> = rhs (equalities) or <normal, x> >= rhs (inequalities).
struct Constraint {
  Vec normal;
  Rat rhs;

  friend bool operator==(const Constraint&, const Constraint&) = default;
  friend bool operator<(const Constraint& a, const Constraint& b) {
    if (a.normal != b.normal) return a.normal < b.normal;
    return a.rhs < b.rhs;
  }
};

/// Exact rational polyhedron in H-representation, always held in canonical
/// form:
///  - implicit equalities are promoted and the equalities are the reduced
///    echelon basis of the affine hull, each scaled to a primitive integer
///    row with positive leading entry;
///  - inequalities are reduced modulo the equalities, scaled to primitive
///    integer normals, irredundant, and sorted.
/// Two polyhedra are equal as sets iff their canonical forms are identical.
class Polyhedron {
 public:
  /// Whole space of rank 0 (a single point).
  Polyhedron() = default;

  static Polyhedron from_constraints(std::size_t ambient_rank, std::vector<Constraint> equalities,
                                     std::vector<Constraint> inequalities);
  static Polyhedron whole_space(std::size_t ambient_rank);
  static Polyhedron empty(std::size_t ambient_rank);
  static Polyhedron point(const Vec& p);

  std::size_t ambient_rank() const noexcept { return ambient_rank_; }
  const std::vector<Constraint>& equalities() const noexcept { return equalities_; }
  const std::vector<Constraint>& inequalities() const noexcept { return inequalities_; }
  bool is_empty() const noexcept { return empty_; }
  /// Dimension of the affine hull; -1 for the empty set.
  int dimension() const noexcept;
  bool is_cone() const noexcept;

  bool contains(const Vec& x) const;
  bool contains_in_relative_interior(const Vec& x) const;

  /// Weak system describing the polyhedron (inequalities made strict when
  /// `strict_inequalities` is set, which describes the relative interior).
  LinearSystem system(bool strict_inequalities = false) const;

  std::string to_string() const;

  friend bool operator==(const Polyhedron&, const Polyhedron&) = default;
  friend bool operator<(const Polyhedron& a, const Polyhedron& b);

 private:
  std::size_t ambient_rank_ = 0;
  bool empty_ = false;
  std::vector<Constraint> equalities_;
  std::vector<Constraint> inequalities_;
};

/// A nonempty polyhedron all of whose right-hand sides vanish.
class Cone {
 public:
  explicit Cone(Polyhedron p);

  static Cone from_rays(std::size_t ambient_rank, const std::vector<IntVec>& rays);
  static Cone zero(std::size_t ambient_rank);

  const Polyhedron& polyhedron() const noexcept { return polyhedron_; }
  std::size_t ambient_rank() const noexcept { return polyhedron_.ambient_rank(); }
  int dimension() const noexcept { return polyhedron_.dimension(); }
  bool is_pointed() const;
  /// Primitive generators of the one-dimensional faces, sorted. Only
  /// meaningful for pointed cones.
  std::vector<IntVec> rays() const;

  friend bool operator==(const Cone&, const Cone&) = default;
  friend bool operator<(const Cone& a, const Cone& b) { return a.polyhedron_ < b.polyhedron_; }

 private:
  Polyhedron polyhedron_;
};

Polyhedron canonicalize(std::size_t ambient_rank, std::vector<Constraint> equalities,
                        std::vector<Constraint> inequalities);

Cone recession_cone(const Polyhedron& p);
Vec relint_point(const Polyhedron& p);
Cone local_cone(const Polyhedron& p, const Vec& point);
/// Image of p under x -> map * x, with map of shape (target rank) x (ambient rank of p).
Polyhedron linear_image(const Polyhedron& p, const RatMatrix& map);
Polyhedron intersect(const Polyhedron& a, const Polyhedron& b);
Polyhedron translate(const Polyhedron& p, const Vec& offset);

/// True iff the union of `cover` contains the union of `covered`.
bool union_covers(std::span<const Polyhedron> cover, std::span<const Polyhedron> covered);

/// All nonempty faces including p itself, by decreasing dimension.
std::vector<Polyhedron> faces(const Polyhedron& p);

/// Rational basis of the direction space of the affine hull.
std::vector<Vec> direction_basis(const Polyhedron& p);
/// Basis (rows) of the saturated lattice Z^n intersected with the direction space.
IntMatrix direction_lattice(const Polyhedron& p);
/// Basis of the lineality space {v : p + R v = p}.
std::vector<Vec> lineality_basis(const Polyhedron& p);

}  // namespace tropskel
