#include "tropskel/fan.hpp"

#include "tropskel/error.hpp"
#include "tropskel/lattice.hpp"

#include <algorithm>

namespace tropskel {

namespace {

Cone make_cone(std::size_t n, const RawCone& raw) {
  if (raw.rays) {
    for (const auto& r : *raw.rays)
      if (r.size() != n)
        throw Error(ErrorCode::DimensionMismatch, "cone " + raw.id + " has a ray of length " + std::to_string(r.size()));
    return Cone::from_rays(n, *raw.rays);
  }
  if (!raw.hrep) throw Error(ErrorCode::InvalidInput, "cone " + raw.id + " has neither rays nor an H-representation");
  if (raw.hrep->ambient_rank() != n)
    throw Error(ErrorCode::DimensionMismatch, "cone " + raw.id + " has the wrong ambient rank");
  if (!raw.hrep->is_cone()) throw Error(ErrorCode::InvalidInput, "cone " + raw.id + " is not a cone");
  return Cone(*raw.hrep);
}

}  // namespace

Fan Fan::trivial(std::size_t n) { return from_cones(n, {}); }

Fan Fan::from_cones(std::size_t n, const std::vector<RawCone>& raw) {
  std::map<Cone, std::string> registry;
  std::vector<std::pair<std::string, Cone>> order;
  std::set<std::string> used;

  auto add = [&](const std::string& id, const Cone& c) {
    registry.emplace(c, id);
    order.emplace_back(id, c);
    used.insert(id);
  };

  std::vector<std::pair<std::string, Cone>> inputs;
  for (const auto& r : raw) {
    if (r.id.empty()) throw Error(ErrorCode::InvalidInput, "cone with empty id");
    if (used.count(r.id)) throw Error(ErrorCode::InvalidInput, "duplicate cone id " + r.id);
    Cone c = make_cone(n, r);
    if (!c.is_pointed()) throw Error(ErrorCode::NotPointed, "cone " + r.id + " contains a line");
    const bool is_zero = c.dimension() == 0;
    if (is_zero != (r.id == kZeroId))
      throw Error(ErrorCode::InvalidInput, "the id \"0\" is reserved for the zero cone (cone " + r.id + ")");
    if (auto it = registry.find(c); it != registry.end())
      throw Error(ErrorCode::InvalidInput, "cones " + it->second + " and " + r.id + " coincide");
    add(r.id, c);
    inputs.emplace_back(r.id, std::move(c));
  }
  const Cone zero = Cone::zero(n);
  if (!registry.count(zero)) add(kZeroId, zero);

  for (const auto& [id, c] : inputs) {
    std::size_t k = 0;
    for (const Polyhedron& f : faces(c.polyhedron())) {
      Cone face(f);
      if (registry.count(face)) continue;
      std::string name;
      do {
        name = "face(" + id + "," + std::to_string(k++) + ")";
      } while (used.count(name));
      add(name, face);
    }
  }

  Fan fan;
  fan.rank_ = n;
  for (auto& [id, c] : order) {
    Entry e{id, c, c.rays(), {}};
    for (const Polyhedron& f : faces(c.polyhedron())) e.faces.insert(registry.at(Cone(f)));
    fan.entries_.push_back(std::move(e));
  }
  std::sort(fan.entries_.begin(), fan.entries_.end(), [](const Entry& a, const Entry& b) {
    if (a.cone.dimension() != b.cone.dimension()) return a.cone.dimension() < b.cone.dimension();
    return a.id < b.id;
  });
  for (std::size_t i = 0; i < fan.entries_.size(); ++i) fan.index_[fan.entries_[i].id] = i;

  for (std::size_t i = 0; i < fan.entries_.size(); ++i)
    for (std::size_t j = i + 1; j < fan.entries_.size(); ++j) {
      const Entry& a = fan.entries_[i];
      const Entry& b = fan.entries_[j];
      if (b.faces.count(a.id)) continue;
      const Cone meet(intersect(a.cone.polyhedron(), b.cone.polyhedron()));
      auto it = registry.find(meet);
      if (it == registry.end() || !a.faces.count(it->second) || !b.faces.count(it->second))
        throw Error(ErrorCode::NotAFan, "cones " + a.id + " and " + b.id + " do not meet in a common face");
    }
  return fan;
}

const Fan::Entry& Fan::entry(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw Error(ErrorCode::UnknownCone, "no cone with id " + id);
  return entries_[it->second];
}

std::vector<std::string> Fan::ids() const {
  std::vector<std::string> out;
  for (const auto& e : entries_) out.push_back(e.id);
  return out;
}

bool Fan::is_face(const std::string& tau, const std::string& sigma) const {
  entry(tau);
  return entry(sigma).faces.count(tau) > 0;
}

std::vector<std::string> Fan::faces_of(const std::string& sigma) const {
  const Entry& e = entry(sigma);
  std::vector<std::string> out;
  for (const auto& other : entries_)
    if (e.faces.count(other.id)) out.push_back(other.id);
  return out;
}

std::vector<std::string> Fan::cones_containing(const std::string& tau) const {
  entry(tau);
  std::vector<std::string> out;
  for (const auto& e : entries_)
    if (e.faces.count(tau)) out.push_back(e.id);
  return out;
}

std::optional<std::string> Fan::find(const Cone& c) const {
  for (const auto& e : entries_)
    if (e.cone == c) return e.id;
  return std::nullopt;
}

QuotientMap quotient_map(const Fan& fan, const std::string& id) {
  const auto& rays = fan.rays(id);
  IntMatrix generators(rays.size(), fan.ambient_rank());
  for (std::size_t i = 0; i < rays.size(); ++i)
    for (std::size_t j = 0; j < fan.ambient_rank(); ++j) generators(i, j) = rays[i][j];
  return {id, fan.ambient_rank(), quotient_matrix(generators)};
}

std::optional<Vec> relint_meets(const Cone& c, const Fan& fan, const std::string& id) {
  const Cone& sigma = fan.cone(id);
  if (c.ambient_rank() != sigma.ambient_rank())
    throw Error(ErrorCode::DimensionMismatch, "relint_meets: cone and fan have different ranks");
  // The relative interior of a convex subset of sigma lies in a single face
  // of sigma, so one relative-interior point of the intersection decides.
  const Polyhedron meet = intersect(c.polyhedron(), sigma.polyhedron());
  const Vec w = relint_point(meet);
  if (!sigma.polyhedron().contains_in_relative_interior(w)) return std::nullopt;
  return w;
}

StarFan star_fan(const Fan& fan, const std::string& tau) {
  QuotientMap q = quotient_map(fan, tau);
  const RatMatrix map = q.rational();
  std::vector<RawCone> cones;
  std::map<std::string, std::string> original;
  for (const auto& id : fan.cones_containing(tau)) {
    const std::string star_id = id == tau ? std::string(Fan::kZeroId) : id;
    cones.push_back({star_id, std::nullopt, linear_image(fan.cone(id).polyhedron(), map)});
    original[star_id] = id;
  }
  return {Fan::from_cones(q.target_rank(), cones), std::move(original), std::move(q)};
}

OrbitPoint orbit_limit(const Fan& fan, const std::string& sigma, const Vec& x) {
  return {sigma, quotient_map(fan, sigma).apply(x)};
}

}  // namespace tropskel
