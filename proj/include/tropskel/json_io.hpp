#pragma once

#include "tropskel/criteria.hpp"
#include "tropskel/hk.hpp"

#include <json.hpp>

#include <filesystem>
#include <optional>
#include <string>

namespace tropskel::io {

using Json = nlohmann::json;

/// Parses a file; malformed JSON raises ParseError.
Json load(const std::filesystem::path& path);
Json parse(const std::string& text);
/// Two-space indented dump with a trailing newline.
std::string dump(const Json& j);

/// Integers (JSON numbers or strings) and "p/q" strings; floats are rejected.
Rat rat_from_json(const Json& j);
Json to_json(const Rat& r);
Json to_json(const Vec& v);
Json to_json(const IntVec& v);

Polyhedron polyhedron_from_json(const Json& j, std::optional<std::size_t> rank = std::nullopt);
Json to_json(const Polyhedron& p);

Fan fan_from_json(const Json& j);
Json to_json(const Fan& f);

LaurentPoly poly_from_json(const Json& j);
Json to_json(const LaurentPoly& f);

std::vector<WeightedCell> cells_from_json(const Json& j, std::size_t rank, const std::string& default_prefix);
Json to_json(const WeightedCell& c);
Json cells_to_json(const std::vector<WeightedCell>& cells);

/// Complex file: {"ambient_rank", "fan"?, "strata": {id: [cells]}, "provenance"?}.
/// `fan` replaces the file's fan; without either, the trivial fan is used.
ExtendedTropicalComplex complex_from_json(const Json& j, const std::optional<Fan>& fan = std::nullopt);
Json to_json(const ExtendedTropicalComplex& x);
/// The dense cells of a complex file (or of a bare hypersurface output).
std::vector<WeightedCell> dense_from_json(const Json& j);

OrbitPoint orbit_point_from_json(const Json& j);
Json to_json(const OrbitPoint& p);
ComponentFanData components_from_json(const Json& j);

Json to_json(const Verdict& v);
Json to_json(const Finding& f);

HKInput hk_from_json(const Json& j);
Json to_json(const HKComplex& hk);
Json to_json(const STReport& r);

IntMatrix int_matrix_from_json(const Json& j);
Json to_json(const IntMatrix& m);

}  // namespace tropskel::io
