#include <tropskel/error.hpp>
#include <tropskel/json_io.hpp>

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

using namespace tropskel;
using io::Json;

namespace {

struct Config {
  bool json = false;
  bool explain = false;
  bool strict = false;
  unsigned jobs = 1;
  std::string output;
};

void write_artifact(const Config& cfg, const Json& j) {
  if (cfg.output.empty()) return;
  std::ofstream out(cfg.output);
  if (!out) throw Error(ErrorCode::InvalidInput, "cannot write " + cfg.output);
  out << io::dump(j);
}

std::string mult_text(const std::optional<Int>& m) { return m ? m->str() : "?"; }

void print_cells(std::ostream& os, const std::vector<WeightedCell>& cells, const std::string& indent) {
  for (const auto& c : cells)
    os << indent << c.id << "  dim " << c.polyhedron.dimension() << "  mult " << mult_text(c.multiplicity) << "  "
       << c.polyhedron.to_string() << "\n";
}

DimensionOverrides parse_dims(const std::vector<std::string>& items) {
  DimensionOverrides out;
  for (const auto& item : items) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0)
      throw Error(ErrorCode::InvalidInput, "--dims entries look like cone=dim, got '" + item + "'");
    try {
      std::size_t used = 0;
      const int d = std::stoi(item.substr(eq + 1), &used);
      if (used != item.size() - eq - 1) throw std::invalid_argument(item);
      out[item.substr(0, eq)] = d;
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::InvalidInput, "--dims value in '" + item + "' is not an integer");
    }
  }
  return out;
}

ExtendedTropicalComplex load_complex(const std::string& path, const std::string& fan_path) {
  const Json j = io::load(path);
  std::optional<Fan> fan;
  if (!fan_path.empty()) fan = io::fan_from_json(io::load(fan_path));
  auto x = io::complex_from_json(j, fan);
  // A bare dense stratum is extended across the orbits of the fan.
  if (x.strata().size() == 1 && x.has_stratum(Fan::kZeroId) && x.fan().size() > 1)
    return extend_to_orbits(x.dense(), x.fan());
  return x;
}

void strict_validate(const ExtendedTropicalComplex& x) {
  const auto& dense = x.dense();
  const int facet_dim = static_cast<int>(x.fan().ambient_rank()) - 1;
  const bool hypersurface =
      !dense.empty() && std::all_of(dense.begin(), dense.end(), [&](const WeightedCell& c) {
        return c.multiplicity && c.polyhedron.dimension() == facet_dim;
      });
  if (hypersurface) {
    const auto report = check_balancing(dense);
    if (!report.balanced())
      throw Error(ErrorCode::DataInconsistent, "dense stratum is not balanced around " +
                                                   report.unbalanced.front().to_string());
  }
  const auto derived = extend_to_orbits(dense, x.fan());
  for (const auto& [id, s] : x.strata()) {
    if (id == Fan::kZeroId) continue;
    std::vector<Polyhedron> given, expected;
    for (const auto& c : s.cells) given.push_back(c.polyhedron);
    for (const auto& c : derived.stratum(id).cells) expected.push_back(c.polyhedron);
    if (!union_covers(given, expected) || !union_covers(expected, given))
      throw Error(ErrorCode::DataInconsistent, "stratum " + id + " differs from the projections of the dense cells");
  }
}

void print_finding(std::ostream& os, const Finding& f, bool explain) {
  os << "  witness";
  if (!f.tau.empty()) os << " tau=" << f.tau;
  os << " cone=" << f.cone << " cell=" << f.cell << ": dim " << f.computed_dim << " != " << f.required_dim
     << " at " << to_string(f.sample) << "\n";
  if (explain) os << "    hypothesis: " << f.hypothesis << "\n";
}

void print_verdict(std::ostream& os, const Verdict& v, const Config& cfg) {
  os << "criterion " << v.criterion << ": " << status_name(v.status) << "\n";
  os << "  checks performed: " << v.checks.size() << "\n";
  for (const auto& f : v.witnesses) print_finding(os, f, cfg.explain);
  for (const auto& n : v.notes) os << "  note: " << n << "\n";
  if (v.proper_shortcut)
    os << "proper-intersection shortcut: " << (*v.proper_shortcut == Status::Fail ? "FAIL" : "PASS") << "\n";
}

int exit_code(Status s) { return s == Status::Fail ? 1 : s == Status::InsufficientData ? 2 : 0; }

int emit_verdict(const Verdict& v, const Config& cfg) {
  const Json j = io::to_json(v);
  write_artifact(cfg, j);
  if (cfg.json) std::cout << io::dump(j);
  else print_verdict(std::cout, v, cfg);
  return exit_code(v.status);
}

int cmd_hypersurface(const std::string& path, const Config& cfg) {
  const LaurentPoly f = io::poly_from_json(io::load(path));
  const auto cells = trop_hypersurface(f);
  const ExtendedTropicalComplex x(Fan::trivial(f.ambient_rank()), {{Fan::kZeroId, {cells, Provenance::Input}}});
  const Json j = io::to_json(x);
  write_artifact(cfg, j);
  if (cfg.json) {
    std::cout << io::dump(j);
    return 0;
  }
  std::cout << "cells: " << cells.size() << "\n";
  print_cells(std::cout, cells, "  ");
  return 0;
}

int cmd_extend(const std::string& complex_path, const std::string& fan_path, const Config& cfg) {
  const auto dense = io::dense_from_json(io::load(complex_path));
  const Fan fan = io::fan_from_json(io::load(fan_path));
  const auto x = extend_to_orbits(dense, fan);
  if (cfg.strict) strict_validate(x);
  const Json j = io::to_json(x);
  write_artifact(cfg, j);
  if (cfg.json) {
    std::cout << io::dump(j);
    return 0;
  }
  for (const auto& id : fan.ids()) {
    const auto& cells = x.stratum(id).cells;
    std::cout << "cone " << id << " (dim " << fan.dimension(id) << ", stratum rank " << x.stratum_rank(id) << "): ";
    if (cells.empty()) {
      std::cout << "empty\n";
      continue;
    }
    std::cout << cells.size() << (cells.size() == 1 ? " cell" : " cells") << ", dimension "
              << stratum_dimension(cells, id) << "\n";
    print_cells(std::cout, cells, "  ");
  }
  return 0;
}

int cmd_proper(const ExtendedTropicalComplex& x, const std::string& cone, const Config& cfg) {
  CriteriaOptions opts{cfg.jobs, {}};
  if (!cone.empty()) return emit_verdict(check_proper(x, cone, opts), cfg);

  Verdict all;
  all.criterion = "proper";
  Json per_cone = Json::object();
  bool any_checked = false;
  for (const auto& id : x.fan().ids()) {
    if (id == Fan::kZeroId) continue;
    const Verdict v = check_proper(x, id, opts);
    per_cone[id] = status_name(v.status);
    any_checked = any_checked || v.status != Status::Vacuous;
    all.checks.insert(all.checks.end(), v.checks.begin(), v.checks.end());
    all.witnesses.insert(all.witnesses.end(), v.witnesses.begin(), v.witnesses.end());
    for (const auto& n : v.notes) all.notes.push_back(id + ": " + n);
  }
  std::stable_sort(all.witnesses.begin(), all.witnesses.end(), [](const Finding& a, const Finding& b) {
    return std::tie(a.cone, a.cell, a.tau) < std::tie(b.cone, b.cell, b.tau);
  });
  all.status = !all.witnesses.empty() ? Status::Fail : any_checked ? Status::Pass : Status::Vacuous;

  Json j = io::to_json(all);
  j["cones"] = per_cone;
  write_artifact(cfg, j);
  if (cfg.json) {
    std::cout << io::dump(j);
  } else {
    print_verdict(std::cout, all, cfg);
    for (const auto& [id, s] : per_cone.items()) std::cout << "  cone " << id << ": " << s.get<std::string>() << "\n";
  }
  return exit_code(all.status);
}

int cmd_hk(const std::string& path, const Config& cfg) {
  const HKComplex hk = build_hk(io::hk_from_json(io::load(path)));
  Json j = io::to_json(hk);
  Json reports = Json::array();
  Status status = Status::Pass;
  std::vector<std::string> unchecked;
  for (const auto& cell : hk.sigma_cells()) {
    if (!hk.is_maximal(cell.id)) continue;
    if (!hk.mtrop().count(cell.id)) {
      if (cfg.strict) throw Error(ErrorCode::InvalidInput, "no m_Trop supplied for maximal cell " + cell.id);
      unchecked.push_back(cell.id);
      continue;
    }
    const STReport r = validate_st_formula(hk, cell.id);
    if (r.status == Status::Fail) status = Status::Fail;
    reports.push_back(io::to_json(r));
  }
  j["st_formula"] = reports;
  j["status"] = status_name(status);
  j["unchecked"] = unchecked;
  write_artifact(cfg, j);
  if (cfg.json) {
    std::cout << io::dump(j);
    return exit_code(status);
  }
  std::cout << "f-vector: (";
  const auto f = hk.f_vector();
  for (std::size_t i = 0; i < f.size(); ++i) std::cout << (i ? ", " : "") << f[i];
  std::cout << ")\nconnected components: " << hk.connected_components() << "\n";
  for (const auto& r : reports) {
    std::cout << "st-formula " << r["cell"].get<std::string>() << ": " << r["status"].get<std::string>() << " (m_Trop "
              << r["mtrop"].dump() << ", index sum " << r["index_sum"].dump() << ")\n";
    for (const auto& fail : r["failures"]) std::cout << "  " << fail.get<std::string>() << "\n";
    if (cfg.explain)
      std::cout << "    hypothesis: m_Trop(P) equals the sum of the lattice indices of the components over P\n";
  }
  for (const auto& id : unchecked) std::cout << "st-formula " << id << ": not checked (no m_Trop)\n";
  return exit_code(status);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact polyhedral criteria for tropical skeletons and toric orbit closures"};
  app.require_subcommand(1);
  Config cfg;
  auto common = [&](CLI::App* sub) {
    sub->add_flag("--json", cfg.json, "Print machine-readable JSON");
    sub->add_flag("--explain", cfg.explain, "Print the failed hypothesis for each witness");
    sub->add_flag("--strict", cfg.strict, "Cross-check input data for consistency");
    sub->add_option("--jobs", cfg.jobs, "Worker threads")->check(CLI::PositiveNumber);
    sub->add_option("-o,--output", cfg.output, "Write the JSON result to a file");
  };

  std::string poly_path, complex_path, fan_path, hk_path, cone, cell;
  std::vector<std::string> dims;

  auto* hyp = app.add_subcommand("hypersurface", "Tropicalize a Laurent polynomial");
  hyp->add_option("polynomial", poly_path, "Polynomial JSON")->required();
  common(hyp);

  auto* ext = app.add_subcommand("extend", "Extend a dense complex across the orbits of a fan");
  ext->add_option("complex", complex_path, "Complex JSON")->required();
  ext->add_option("fan", fan_path, "Fan JSON")->required();
  common(ext);

  auto* check = app.add_subcommand("check", "Decide a criterion");
  check->require_subcommand(1);
  auto add_check = [&](const char* name, const char* help) {
    auto* sub = check->add_subcommand(name, help);
    sub->add_option("complex", complex_path, "Complex JSON")->required();
    sub->add_option("--fan", fan_path, "Fan JSON (replaces the complex's fan)");
    common(sub);
    return sub;
  };
  auto* proper = add_check("proper", "Proper intersection with torus orbits");
  proper->add_option("--cone", cone, "Check a single cone");
  auto* closed = add_check("closed", "Closedness criterion for the tropical skeleton");
  closed->add_option("--dims", dims, "Stratum dimensions, cone=dim")->delimiter(',');
  auto* continuity = add_check("continuity", "Continuity criterion for the section of tropicalization");
  continuity->add_option("--dims", dims, "Stratum dimensions, cone=dim")->delimiter(',');
  auto* limit = add_check("limit", "Limit-point hypotheses for one cell and cone");
  limit->add_option("--cell", cell, "Dense cell id")->required();
  limit->add_option("--cone", cone, "Cone id")->required();

  auto* hk = app.add_subcommand("hk", "Assemble and validate a Helm-Katz complex");
  hk->add_option("file", hk_path, "HK JSON")->required();
  common(hk);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*hyp) return cmd_hypersurface(poly_path, cfg);
    if (*ext) return cmd_extend(complex_path, fan_path, cfg);
    if (*hk) return cmd_hk(hk_path, cfg);
    const auto x = load_complex(complex_path, fan_path);
    if (cfg.strict) strict_validate(x);
    CriteriaOptions opts{cfg.jobs, parse_dims(dims)};
    if (*proper) return cmd_proper(x, cone, cfg);
    if (*closed) return emit_verdict(check_skeleton_closed(x, opts), cfg);
    if (*continuity) return emit_verdict(check_continuity(x, opts), cfg);
    if (*limit) return emit_verdict(check_limit_hypothesis(cell, cone, x), cfg);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
