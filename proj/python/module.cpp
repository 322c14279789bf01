#include <tropskel/error.hpp>
#include <tropskel/json_io.hpp>
#include <tropskel/lattice.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace tropskel;
using io::Json;

namespace {

ExtendedTropicalComplex complex_from(const std::string& complex_json, const std::optional<std::string>& fan_json) {
  std::optional<Fan> fan;
  if (fan_json) fan = io::fan_from_json(io::parse(*fan_json));
  auto x = io::complex_from_json(io::parse(complex_json), fan);
  if (x.strata().size() == 1 && x.has_stratum(Fan::kZeroId) && x.fan().size() > 1)
    return extend_to_orbits(x.dense(), x.fan());
  return x;
}

std::string hypersurface(const std::string& poly_json) {
  const LaurentPoly f = io::poly_from_json(io::parse(poly_json));
  const ExtendedTropicalComplex x(Fan::trivial(f.ambient_rank()),
                                  {{Fan::kZeroId, {trop_hypersurface(f), Provenance::Input}}});
  return io::to_json(x).dump();
}

std::string extend(const std::string& complex_json, const std::string& fan_json) {
  return io::to_json(extend_to_orbits(io::dense_from_json(io::parse(complex_json)),
                                      io::fan_from_json(io::parse(fan_json))))
      .dump();
}

std::string check(const std::string& kind, const std::string& complex_json, const std::optional<std::string>& fan_json,
                  const std::optional<std::string>& cone, const std::optional<std::string>& cell,
                  const std::map<std::string, int>& dims, unsigned jobs) {
  const auto x = complex_from(complex_json, fan_json);
  const CriteriaOptions opts{jobs, dims};
  if (kind == "proper") {
    if (cone) return io::to_json(check_proper(x, *cone, opts)).dump();
    return io::to_json(check_proper_all(x, opts)).dump();
  }
  if (kind == "closed") return io::to_json(check_skeleton_closed(x, opts)).dump();
  if (kind == "continuity") return io::to_json(check_continuity(x, opts)).dump();
  if (kind == "limit") {
    if (!cone || !cell) throw Error(ErrorCode::InvalidInput, "the limit check needs a cell and a cone");
    return io::to_json(check_limit_hypothesis(*cell, *cone, x)).dump();
  }
  throw Error(ErrorCode::InvalidInput, "unknown criterion " + kind);
}

std::string hk(const std::string& hk_json) {
  const HKComplex c = build_hk(io::hk_from_json(io::parse(hk_json)));
  Json j = io::to_json(c);
  Json reports = Json::array();
  for (const auto& cell : c.sigma_cells())
    if (c.is_maximal(cell.id) && c.mtrop().count(cell.id)) reports.push_back(io::to_json(validate_st_formula(c, cell.id)));
  j["st_formula"] = reports;
  return j.dump();
}

std::string snf(const std::string& matrix_json) {
  const SmithForm s = smith_normal_form(io::int_matrix_from_json(io::parse(matrix_json)));
  return Json{{"left", io::to_json(s.left)}, {"diagonal", io::to_json(s.diagonal)}, {"right", io::to_json(s.right)}}
      .dump();
}

std::optional<std::string> lattice_index_of(const std::string& matrix_json) {
  auto idx = lattice_index(io::int_matrix_from_json(io::parse(matrix_json)));
  if (!idx) return std::nullopt;
  return idx->str();
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact tropical-skeleton criteria (JSON-string interface)";
  py::register_exception<Error>(m, "TropskelError");
  m.def("hypersurface", &hypersurface, py::arg("polynomial"));
  m.def("extend", &extend, py::arg("complex"), py::arg("fan"));
  m.def("check", &check, py::arg("kind"), py::arg("complex"), py::arg("fan") = py::none(),
        py::arg("cone") = py::none(), py::arg("cell") = py::none(), py::arg("dims") = std::map<std::string, int>{},
        py::arg("jobs") = 1u, py::call_guard<py::gil_scoped_release>());
  m.def("hk", &hk, py::arg("data"));
  m.def("smith_normal_form", &snf, py::arg("matrix"));
  m.def("lattice_index", &lattice_index_of, py::arg("matrix"));
}
