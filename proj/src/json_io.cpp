#include "tropskel/json_io.hpp"

#include "tropskel/error.hpp"

#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace tropskel::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with field '") + key + "'");
  auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field '") + key + "'");
  return *it;
}

std::size_t size_from_json(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(std::string(what) + " must be a non-negative integer");
  return j.get<std::size_t>();
}

std::string string_from_json(const Json& j, const char* what) {
  if (!j.is_string()) bad(std::string(what) + " must be a string");
  return j.get<std::string>();
}

Int int_from_json(const Json& j) {
  const Rat r = rat_from_json(j);
  if (!is_integer(r)) bad("expected an integer, got " + to_string(r));
  return numerator_of(r);
}

const Json& array(const Json& j, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array");
  return j;
}

std::vector<Constraint> constraints_from_json(const Json& j, std::size_t rank, const char* what) {
  std::vector<Constraint> out;
  for (const auto& row : array(j, what)) {
    if (!row.is_array() || row.size() != rank + 1)
      throw Error(ErrorCode::DimensionMismatch, std::string(what) + " rows need " + std::to_string(rank + 1) +
                                                    " entries (coefficients then right-hand side)");
    Vec a(rank);
    for (std::size_t i = 0; i < rank; ++i) a[i] = rat_from_json(row[i]);
    out.push_back({std::move(a), rat_from_json(row[rank])});
  }
  return out;
}

Json constraints_to_json(const std::vector<Constraint>& cs) {
  Json out = Json::array();
  for (const auto& c : cs) {
    Json row = to_json(c.normal);
    row.push_back(to_json(c.rhs));
    out.push_back(std::move(row));
  }
  return out;
}

IntVec int_vec_from_json(const Json& j, std::optional<std::size_t> rank, const char* what) {
  array(j, what);
  if (rank && j.size() != *rank)
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " needs " + std::to_string(*rank) + " entries");
  IntVec v;
  for (const auto& x : j) v.push_back(int_from_json(x));
  return v;
}

Vec vec_from_json(const Json& j, std::optional<std::size_t> rank, const char* what) {
  array(j, what);
  if (rank && j.size() != *rank)
    throw Error(ErrorCode::DimensionMismatch, std::string(what) + " needs " + std::to_string(*rank) + " entries");
  Vec v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

Cone cone_from_json(const Json& j, std::size_t rank) {
  if (j.contains("rays")) {
    std::vector<IntVec> rays;
    for (const auto& r : array(j["rays"], "rays")) rays.push_back(int_vec_from_json(r, rank, "ray"));
    return Cone::from_rays(rank, rays);
  }
  return Cone(polyhedron_from_json(j, rank));
}

}  // namespace

Json load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) bad("cannot open " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const Json::exception& e) {
    bad(path.string() + ": " + e.what());
  }
}

Json parse(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    bad(e.what());
  }
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Rat rat_from_json(const Json& j) {
  if (j.is_number_integer()) return j.is_number_unsigned() ? Rat(j.get<unsigned long long>()) : Rat(j.get<long long>());
  if (j.is_number_float()) bad("floating-point literal " + j.dump() + " where an exact rational is required");
  if (j.is_string()) return parse_rat(j.get<std::string>());
  bad("expected a rational, got " + j.dump());
}

Json to_json(const Rat& r) {
  if (is_integer(r)) {
    const Int n = numerator_of(r);
    if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
      return Json(static_cast<long long>(n));
  }
  return Json(to_string(r));
}

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

Json to_json(const IntVec& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_json(Rat(x)));
  return out;
}

IntMatrix int_matrix_from_json(const Json& j) {
  array(j, "matrix");
  std::vector<IntVec> rows;
  for (const auto& r : j) rows.push_back(int_vec_from_json(r, rows.empty() ? std::nullopt : std::optional(rows[0].size()),
                                                           "matrix row"));
  return IntMatrix::from_rows(rows, rows.empty() ? 0 : rows[0].size());
}

Json to_json(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(to_json(m.row(i)));
  return out;
}

Polyhedron polyhedron_from_json(const Json& j, std::optional<std::size_t> rank) {
  std::size_t n;
  if (j.contains("ambient_rank")) {
    n = size_from_json(j["ambient_rank"], "ambient_rank");
    if (rank && n != *rank)
      throw Error(ErrorCode::DimensionMismatch,
                  "polyhedron of rank " + std::to_string(n) + " where rank " + std::to_string(*rank) + " is expected");
  } else if (rank) {
    n = *rank;
  } else {
    bad("polyhedron without ambient_rank");
  }
  auto eq = j.contains("eq") ? constraints_from_json(j["eq"], n, "eq") : std::vector<Constraint>{};
  auto ineq = j.contains("ineq") ? constraints_from_json(j["ineq"], n, "ineq") : std::vector<Constraint>{};
  return Polyhedron::from_constraints(n, std::move(eq), std::move(ineq));
}

Json to_json(const Polyhedron& p) {
  Json out;
  out["ambient_rank"] = p.ambient_rank();
  if (p.is_empty()) {
    out["eq"] = Json::array();
    Json row = Json::array();
    for (std::size_t i = 0; i < p.ambient_rank(); ++i) row.push_back(0);
    row.push_back(1);
    out["ineq"] = Json::array({row});
    return out;
  }
  out["eq"] = constraints_to_json(p.equalities());
  out["ineq"] = constraints_to_json(p.inequalities());
  return out;
}

Fan fan_from_json(const Json& j) {
  const std::size_t n = size_from_json(field(j, "ambient_rank"), "ambient_rank");
  std::vector<RawCone> cones;
  for (const auto& c : array(field(j, "cones"), "cones")) {
    RawCone raw{string_from_json(field(c, "id"), "cone id"), std::nullopt, std::nullopt};
    if (c.contains("rays")) {
      std::vector<IntVec> rays;
      for (const auto& r : array(c["rays"], "rays")) rays.push_back(int_vec_from_json(r, n, "ray"));
      raw.rays = std::move(rays);
    } else {
      raw.hrep = polyhedron_from_json(c, n);
    }
    cones.push_back(std::move(raw));
  }
  return Fan::from_cones(n, cones);
}

Json to_json(const Fan& f) {
  Json cones = Json::array();
  for (const auto& id : f.ids()) {
    Json rays = Json::array();
    for (const auto& r : f.rays(id)) rays.push_back(to_json(r));
    cones.push_back({{"id", id}, {"dim", f.dimension(id)}, {"rays", rays}});
  }
  return {{"ambient_rank", f.ambient_rank()}, {"cones", cones}};
}

LaurentPoly poly_from_json(const Json& j) {
  const std::size_t n = size_from_json(field(j, "ambient_rank"), "ambient_rank");
  std::vector<Term> terms;
  for (const auto& t : array(field(j, "terms"), "terms")) {
    Term term{int_vec_from_json(field(t, "exp"), n, "exp"), t.contains("val") ? rat_from_json(t["val"]) : Rat(0), ""};
    if (t.contains("tag")) term.tag = string_from_json(t["tag"], "tag");
    terms.push_back(std::move(term));
  }
  return LaurentPoly(n, std::move(terms));
}

Json to_json(const LaurentPoly& f) {
  Json terms = Json::array();
  for (const auto& t : f.terms()) {
    Json term{{"exp", to_json(t.exponent)}, {"val", to_json(t.valuation)}};
    if (!t.tag.empty()) term["tag"] = t.tag;
    terms.push_back(std::move(term));
  }
  return {{"ambient_rank", f.ambient_rank()}, {"terms", terms}};
}

std::vector<WeightedCell> cells_from_json(const Json& j, std::size_t rank, const std::string& default_prefix) {
  std::vector<WeightedCell> out;
  std::set<std::string> ids;
  for (const auto& c : array(j, "cells")) {
    WeightedCell cell{c.contains("id") ? string_from_json(c["id"], "cell id")
                                       : default_prefix + std::to_string(out.size() + 1),
                      polyhedron_from_json(c, rank), std::nullopt, {}};
    if (c.contains("mult") && !c["mult"].is_null()) {
      cell.multiplicity = int_from_json(c["mult"]);
      if (*cell.multiplicity < 1) throw Error(ErrorCode::InvalidInput, "multiplicity of " + cell.id + " must be >= 1");
    }
    if (c.contains("sources"))
      for (const auto& s : array(c["sources"], "sources")) cell.sources.push_back(string_from_json(s, "source"));
    if (!ids.insert(cell.id).second) throw Error(ErrorCode::InvalidInput, "duplicate cell id " + cell.id);
    out.push_back(std::move(cell));
  }
  return out;
}

Json to_json(const WeightedCell& c) {
  Json out{{"id", c.id}, {"dim", c.polyhedron.dimension()}};
  const Json p = to_json(c.polyhedron);
  out["eq"] = p["eq"];
  out["ineq"] = p["ineq"];
  out["mult"] = c.multiplicity ? to_json(Rat(*c.multiplicity)) : Json(nullptr);
  if (!c.sources.empty()) out["sources"] = c.sources;
  return out;
}

Json cells_to_json(const std::vector<WeightedCell>& cells) {
  Json out = Json::array();
  for (const auto& c : cells) out.push_back(to_json(c));
  return out;
}

ExtendedTropicalComplex complex_from_json(const Json& j, const std::optional<Fan>& fan_override) {
  const std::size_t n = size_from_json(field(j, "ambient_rank"), "ambient_rank");
  Fan fan = fan_override ? *fan_override : j.contains("fan") ? fan_from_json(j["fan"]) : Fan::trivial(n);
  if (fan.ambient_rank() != n)
    throw Error(ErrorCode::DimensionMismatch, "fan of rank " + std::to_string(fan.ambient_rank()) +
                                                  " for a complex of rank " + std::to_string(n));
  const Json& strata_json = field(j, "strata");
  if (!strata_json.is_object()) bad("strata must be an object keyed by cone id");
  std::map<std::string, Stratum> strata;
  for (const auto& [id, cells] : strata_json.items()) {
    if (!fan.contains(id)) throw Error(ErrorCode::UnknownCone, "stratum for unknown cone " + id);
    const std::size_t rank = n - static_cast<std::size_t>(fan.dimension(id));
    Stratum s{cells_from_json(cells, rank, id == Fan::kZeroId ? "P" : id + ":"), Provenance::Input};
    if (j.contains("provenance") && j["provenance"].contains(id)) {
      const std::string p = string_from_json(j["provenance"][id], "provenance");
      if (p == "derived") s.provenance = Provenance::Derived;
      else if (p != "input") bad("provenance must be 'input' or 'derived'");
    }
    strata[id] = std::move(s);
  }
  return ExtendedTropicalComplex(std::move(fan), std::move(strata));
}

Json to_json(const ExtendedTropicalComplex& x) {
  Json strata = Json::object(), provenance = Json::object();
  for (const auto& [id, s] : x.strata()) {
    strata[id] = cells_to_json(s.cells);
    provenance[id] = s.provenance == Provenance::Input ? "input" : "derived";
  }
  return {{"ambient_rank", x.fan().ambient_rank()}, {"fan", to_json(x.fan())}, {"strata", strata},
          {"provenance", provenance}};
}

std::vector<WeightedCell> dense_from_json(const Json& j) {
  const std::size_t n = size_from_json(field(j, "ambient_rank"), "ambient_rank");
  const Json& strata = field(j, "strata");
  if (!strata.is_object() || !strata.contains(Fan::kZeroId)) bad("complex has no stratum \"0\"");
  return cells_from_json(strata[Fan::kZeroId], n, "P");
}

OrbitPoint orbit_point_from_json(const Json& j) {
  OrbitPoint p;
  if (j.is_array()) {
    p.coords = vec_from_json(j, std::nullopt, "point");
    return p;
  }
  if (j.contains("cone")) p.cone = string_from_json(j["cone"], "cone");
  p.coords = vec_from_json(field(j, "coords"), std::nullopt, "coords");
  return p;
}

Json to_json(const OrbitPoint& p) { return {{"cone", p.cone}, {"coords", to_json(p.coords)}}; }

ComponentFanData components_from_json(const Json& j) {
  ComponentFanData data{orbit_point_from_json(field(j, "base")), {}};
  const std::size_t rank = data.base.coords.size();
  for (const auto& c : array(field(j, "components"), "components")) {
    Component comp{string_from_json(field(c, "label"), "label"), {}, std::nullopt};
    for (const auto& cone : array(field(c, "support"), "support")) comp.support.push_back(cone_from_json(cone, rank));
    if (c.contains("lattice")) comp.lattice = int_matrix_from_json(c["lattice"]);
    data.components.push_back(std::move(comp));
  }
  return data;
}

Json to_json(const Finding& f) {
  Json out;
  if (!f.tau.empty()) out["tau"] = f.tau;
  out["cone"] = f.cone;
  out["cell"] = f.cell;
  out["computed_dim"] = f.computed_dim;
  out["required_dim"] = f.required_dim;
  out["sample"] = to_json(f.sample);
  out["hypothesis"] = f.hypothesis;
  out["ok"] = f.ok;
  return out;
}

Json to_json(const Verdict& v) {
  Json witnesses = Json::array(), checks = Json::array();
  for (const auto& f : v.witnesses) witnesses.push_back(to_json(f));
  for (const auto& f : v.checks) checks.push_back(to_json(f));
  Json out{{"criterion", v.criterion}, {"status", status_name(v.status)}, {"witnesses", witnesses},
           {"checks", checks}, {"notes", v.notes}};
  if (v.proper_shortcut) out["proper_shortcut"] = status_name(*v.proper_shortcut);
  return out;
}

HKInput hk_from_json(const Json& j) {
  HKInput in;
  std::optional<std::size_t> rank;
  if (j.contains("ambient_rank")) rank = size_from_json(j["ambient_rank"], "ambient_rank");
  for (const auto& c : array(field(j, "cells"), "cells")) {
    SigmaCell cell;
    cell.id = string_from_json(field(c, "id"), "cell id");
    if (c.contains("eq") || c.contains("ineq")) {
      if (!rank) bad("cell geometry needs a top-level ambient_rank");
      cell.polyhedron = polyhedron_from_json(c, rank);
    }
    if (c.contains("dim")) {
      const Json& d = c["dim"];
      if (!d.is_number_integer()) bad("dim must be an integer");
      cell.dim = d.get<int>();
    } else if (cell.polyhedron) {
      cell.dim = cell.polyhedron->dimension();
    } else {
      bad("cell " + cell.id + " needs a dim");
    }
    for (const auto& l : array(field(c, "components"), "components"))
      cell.components.push_back(string_from_json(l, "component"));
    if (c.contains("lattices")) {
      if (!c["lattices"].is_object()) bad("lattices must map component labels to matrices");
      for (const auto& [label, m] : c["lattices"].items()) cell.lattices[label] = int_matrix_from_json(m);
    }
    in.cells.push_back(std::move(cell));
  }
  if (j.contains("faces"))
    for (const auto& f : array(j["faces"], "faces")) {
      if (!f.is_array() || f.size() != 2) bad("faces entries are [facet, cell] pairs");
      in.faces.push_back({string_from_json(f[0], "facet"), string_from_json(f[1], "cell")});
    }
  if (j.contains("inclusions"))
    for (const auto& i : array(j["inclusions"], "inclusions")) {
      Inclusion inc{string_from_json(field(i, "facet"), "facet"), string_from_json(field(i, "from"), "from"),
                    string_from_json(field(i, "to"), "to"), std::nullopt};
      if (i.contains("cell")) inc.cell = string_from_json(i["cell"], "cell");
      in.inclusions.push_back(std::move(inc));
    }
  if (j.contains("mtrop")) {
    if (!j["mtrop"].is_object()) bad("mtrop must map cell ids to positive integers");
    for (const auto& [id, m] : j["mtrop"].items()) in.mtrop[id] = int_from_json(m);
  }
  if (j.contains("support")) {
    if (!rank) bad("support needs a top-level ambient_rank");
    std::vector<Polyhedron> support;
    for (const auto& p : array(j["support"], "support")) support.push_back(polyhedron_from_json(p, rank));
    in.support = std::move(support);
  }
  return in;
}

Json to_json(const HKComplex& hk) {
  Json cells = Json::array(), boundary = Json::array();
  for (const auto& c : hk.cells()) cells.push_back({{"cell", c.cell}, {"component", c.component}, {"dim", c.dim}});
  for (const auto& [a, b] : hk.boundary())
    boundary.push_back({{"facet", {hk.cells()[a].cell, hk.cells()[a].component}},
                        {"cell", {hk.cells()[b].cell, hk.cells()[b].component}}});
  return {{"cells", cells}, {"boundary", boundary}, {"f_vector", hk.f_vector()},
          {"connected_components", hk.connected_components()}};
}

Json to_json(const STReport& r) {
  Json indices = Json::object();
  for (const auto& [l, idx] : r.indices) indices[l] = to_json(Rat(idx));
  return {{"cell", r.cell},           {"mtrop", to_json(Rat(r.mtrop))}, {"indices", indices},
          {"index_sum", to_json(Rat(r.index_sum))}, {"status", status_name(r.status)}, {"failures", r.failures}};
}

}  // namespace tropskel::io
