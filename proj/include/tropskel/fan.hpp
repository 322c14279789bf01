#pragma once

#include "tropskel/polyhedron.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace tropskel {

/// Input description of one cone: either ray generators or an H-representation.
struct RawCone {
  std::string id;
  std::optional<std::vector<IntVec>> rays;
  std::optional<Polyhedron> hrep;
};

/// Pointed rational fan, closed under taking faces. The zero cone always has
/// id "0"; faces that were not named in the input get ids "face(<id>,<k>)".
class Fan {
 public:
  static constexpr const char* kZeroId = "0";

  static Fan from_cones(std::size_t ambient_rank, const std::vector<RawCone>& cones);
  /// The fan consisting of the zero cone only.
  static Fan trivial(std::size_t ambient_rank);

  std::size_t ambient_rank() const noexcept { return rank_; }
  std::size_t size() const noexcept { return entries_.size(); }
  /// Cone ids ordered by (dimension, id).
  std::vector<std::string> ids() const;
  bool contains(const std::string& id) const { return index_.count(id) > 0; }

  const Cone& cone(const std::string& id) const { return entry(id).cone; }
  int dimension(const std::string& id) const { return entry(id).cone.dimension(); }
  const std::vector<IntVec>& rays(const std::string& id) const { return entry(id).rays; }

  /// tau is a face of sigma (tau == sigma allowed).
  bool is_face(const std::string& tau, const std::string& sigma) const;
  std::vector<std::string> faces_of(const std::string& sigma) const;
  std::vector<std::string> cones_containing(const std::string& tau) const;
  std::optional<std::string> find(const Cone& c) const;

 private:
  struct Entry {
    std::string id;
    Cone cone;
    std::vector<IntVec> rays;
    std::set<std::string> faces;
  };
  const Entry& entry(const std::string& id) const;

  std::size_t rank_ = 0;
  std::vector<Entry> entries_;
  std::map<std::string, std::size_t> index_;
};

/// Integer projection N -> N(sigma) = N / (span(sigma) cap N).
struct QuotientMap {
  std::string cone;
  std::size_t source_rank = 0;
  IntMatrix matrix;  // (n - dim sigma) x n, Hermite normal form

  std::size_t target_rank() const noexcept { return matrix.rows(); }
  RatMatrix rational() const { return to_rat(matrix); }
  Vec apply(const Vec& x) const { return rational().apply(x); }
};

QuotientMap quotient_map(const Fan& fan, const std::string& id);

/// Some point of c in relint(sigma), if c meets the relative interior.
std::optional<Vec> relint_meets(const Cone& c, const Fan& fan, const std::string& id);

/// Star of tau: the fan {pi_tau(sigma) : tau face of sigma} in N(tau).
/// Cones keep their original ids except tau itself, which becomes "0".
struct StarFan {
  Fan fan;
  std::map<std::string, std::string> original;  // star id -> id in the parent fan
  QuotientMap projection;
};

StarFan star_fan(const Fan& fan, const std::string& tau);

/// Point of the orbit stratum N_R(sigma), in the coordinates of its quotient map.
struct OrbitPoint {
  std::string cone = Fan::kZeroId;
  Vec coords;

  friend bool operator==(const OrbitPoint&, const OrbitPoint&) = default;
};

/// Limit of x + t v (t -> infinity) for v in relint(sigma).
OrbitPoint orbit_limit(const Fan& fan, const std::string& sigma, const Vec& x);

}  // namespace tropskel
