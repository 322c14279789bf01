#include <doctest.h>

#include "support.hpp"

#include <tropskel/error.hpp>

using namespace tropskel;
using namespace support;

namespace {

ExtendedTropicalComplex counter_complex() { return extend_to_orbits(trop_hypersurface(counter_poly()), octant_fan()); }
ExtendedTropicalComplex line_complex() { return extend_to_orbits(trop_hypersurface(line_poly()), p2_fan()); }
ExtendedTropicalComplex whole_space(const Fan& f) {
  return extend_to_orbits({{"N", Polyhedron::whole_space(f.ambient_rank()), Int(1), {}}}, f);
}

}  // namespace

TEST_CASE("d-maximality in the sigma23 stratum") {
  const auto x = counter_complex();
  const auto& s = x.stratum("sigma23").cells;
  CHECK(is_d_maximal(poly(1, {}, {{1, 0}}), vec({0}), s));
  CHECK(is_d_maximal(poly(1, {}, {{-1, 0}}), vec({0}), s));
  CHECK_FALSE(is_d_maximal(poly(1, {{1, 0}}, {}), vec({0}), s));
  CHECK(is_d_maximal(cell(x.dense(), "P1").polyhedron, relint_point(cell(x.dense(), "P1").polyhedron), x.dense()));
  CHECK_THROWS_WITH_AS(is_d_maximal(poly(1, {}, {}), vec({0}), std::vector<WeightedCell>{}),
                       doctest::Contains("POINT_NOT_IN_SUPPORT"), Error);
}

TEST_CASE("proper intersection on the worked example") {
  const auto x = counter_complex();
  const std::map<std::string, Status> expected{{"sigma1", Status::Pass},    {"sigma2", Status::Vacuous},
                                               {"sigma3", Status::Pass},    {"sigma12", Status::Vacuous},
                                               {"sigma13", Status::Vacuous}, {"sigma23", Status::Fail},
                                               {"sigma", Status::Fail}};
  for (const auto& [id, status] : expected) CHECK_MESSAGE(check_proper(x, id).status == status, id);
  const Verdict s1 = check_proper(x, "sigma1");
  REQUIRE(s1.checks.size() == 1);
  CHECK(s1.checks[0].cell == "P1");
  CHECK(s1.checks[0].computed_dim == 1);
  const Verdict s23 = check_proper(x, "sigma23");
  REQUIRE(!s23.witnesses.empty());
  CHECK(s23.witnesses[0].cell == "P1");
  CHECK(s23.witnesses[0].computed_dim == 1);
  CHECK(s23.witnesses[0].required_dim == 0);
  CHECK(s23.notes.empty());
  CHECK_THROWS_WITH_AS(check_proper(x, "nope"), doctest::Contains("UNKNOWN_CONE"), Error);
}

TEST_CASE("proper intersection needs a pure dense stratum") {
  const Fan f = octant_fan();
  const ExtendedTropicalComplex x(
      f, {{"0", {{{"A", poly(3, {{1, 0, 0, 0}}, {}), std::nullopt, {}}, {"B", poly(3, {{1, 0, 0, 1}, {0, 1, 0, 0}}, {}),
                                                                            std::nullopt, {}}},
                 Provenance::Input}}});
  CHECK_THROWS_WITH_AS(check_proper(x, "sigma1"), doctest::Contains("NOT_EQUIDIMENSIONAL"), Error);
  // A lower-dimensional cell inside a top cell is fine.
  const ExtendedTropicalComplex y(
      f, {{"0", {{{"A", poly(3, {{1, 0, 0, 0}}, {}), std::nullopt, {}}, {"B", poly(3, {{1, 0, 0, 0}, {0, 1, 0, 0}}, {}),
                                                                            std::nullopt, {}}},
                 Provenance::Input}}});
  CHECK(check_proper(y, "sigma2").status == Status::Pass);
}

TEST_CASE("condition disagreement is reported, not fatal") {
  // The whole space subdivided with one cell cone{(1,1,0),(1,0,1),(0,1,1)}:
  // X = T meets every orbit properly, yet rho(P) meets sigma12 only in a ray.
  const Fan f = Fan::from_cones(3, {{"s", std::vector<IntVec>{ivec({1, 0, 0}), ivec({0, 1, 0})}, std::nullopt}});
  const Polyhedron c = Cone::from_rays(3, {ivec({1, 1, 0}), ivec({1, 0, 1}), ivec({0, 1, 1})}).polyhedron();
  const ExtendedTropicalComplex x(f, {{"0", {{{"C", c, std::nullopt, {}}}, Provenance::Input}}});
  const Verdict v = check_proper(x, "s");
  CHECK(v.status == Status::Pass);
  CHECK(v.notes.size() == 1);
}

TEST_CASE("skeleton closedness on the worked example") {
  const Verdict v = check_skeleton_closed(counter_complex());
  CHECK(v.status == Status::Fail);
  REQUIRE(v.witnesses.size() == 2);
  CHECK(v.witnesses[0].tau == "0");
  CHECK(v.witnesses[0].cone == "sigma23");
  CHECK(v.witnesses[0].cell == "P2");
  CHECK(v.witnesses[0].computed_dim == 0);
  CHECK(v.witnesses[0].required_dim == 1);
  CHECK(v.witnesses[1].tau == "sigma3");
  CHECK(v.witnesses[1].cone == "sigma23");
  CHECK(v.witnesses[1].computed_dim == 0);
  CHECK(v.witnesses[1].required_dim == 1);
}

TEST_CASE("skeleton closedness passes on the line and on the fan itself") {
  CHECK(check_skeleton_closed(line_complex()).status == Status::Pass);
  CHECK(check_skeleton_closed(whole_space(octant_fan())).status == Status::Pass);
  CHECK(check_skeleton_closed(whole_space(p2_fan())).status == Status::Pass);
}

TEST_CASE("stratum dimension overrides") {
  const auto x = counter_complex();
  CriteriaOptions o;
  o.dims["sigma23"] = 0;
  CHECK_THROWS_WITH_AS(check_skeleton_closed(x, o), doctest::Contains("NOT_EQUIDIMENSIONAL"), Error);
  const ExtendedTropicalComplex partial(x.fan(), {{"0", x.stratum("0")}});
  CHECK_THROWS_WITH_AS(check_skeleton_closed(partial), doctest::Contains("MISSING_STRATUM_DATA"), Error);
  // Supplying every dimension is enough for the continuity check.
  CriteriaOptions all;
  for (const auto& [id, d] : stratum_dimensions(x)) all.dims[id] = d;
  CHECK(check_continuity(partial, all).status == Status::Fail);
}

TEST_CASE("continuity") {
  const Verdict v = check_continuity(counter_complex());
  CHECK(v.status == Status::Fail);
  REQUIRE(v.witnesses.size() == 1);
  CHECK(v.witnesses[0].cell == "P2");
  CHECK(v.witnesses[0].cone == "sigma23");
  CHECK(v.proper_shortcut == Status::Fail);

  const Verdict line = check_continuity(line_complex());
  CHECK(line.status == Status::Pass);
  CHECK(line.proper_shortcut == Status::Pass);

  const auto cells = trop_hypersurface(counter_poly());
  const Verdict trivial = check_continuity(extend_to_orbits(cells, Fan::trivial(3)));
  CHECK(trivial.status == Status::Pass);
  CHECK(trivial.checks.empty());
}

TEST_CASE("limit hypotheses") {
  const auto x = counter_complex();
  CHECK(check_limit_hypothesis("P1", "sigma23", x).status == Status::Pass);
  const Verdict p2 = check_limit_hypothesis("P2", "sigma23", x);
  CHECK(p2.status == Status::Fail);
  REQUIRE(p2.witnesses.size() == 1);
  CHECK(p2.witnesses[0].computed_dim == 0);
  CHECK(p2.witnesses[0].required_dim == 1);
  CHECK(check_limit_hypothesis("P2", "sigma2", x).status == Status::Vacuous);
  CHECK_THROWS_WITH_AS(check_limit_hypothesis("P1", "nope", x), doctest::Contains("UNKNOWN_CONE"), Error);
  CHECK_THROWS_WITH_AS(check_limit_hypothesis("P9", "sigma1", x), doctest::Contains("UNKNOWN_CELL"), Error);
  const auto w = whole_space(octant_fan());
  for (const auto& ray : {"sigma1", "sigma2", "sigma3"}) CHECK(check_limit_hypothesis("N", ray, w).status == Status::Pass);
}

TEST_CASE("relevant cells") {
  const auto x = counter_complex();
  const OrbitPoint origin{"0", vec({0, 0, 0})};
  auto cones_of = [](const std::vector<WeightedCell>& cells, std::initializer_list<const char*> ids) {
    std::vector<Cone> out;
    for (const char* id : ids) out.push_back(Cone(cell(cells, id).polyhedron));
    return out;
  };
  const ComponentFanData one{origin, {{"Z", cones_of(x.dense(), {"P1", "P2", "P3"}), std::nullopt}}};
  const auto all = relevant_cells(x.dense(), origin, one);
  REQUIRE(all.size() == 1);
  CHECK(all[0].cells == std::vector<std::string>{"P1", "P2", "P3"});

  const ComponentFanData two{origin,
                             {{"Z1", cones_of(x.dense(), {"P1", "P2"}), std::nullopt},
                              {"Z2", cones_of(x.dense(), {"P2", "P3"}), std::nullopt}}};
  const auto split = relevant_cells(x.dense(), origin, two);
  CHECK(split[0].cells == std::vector<std::string>{"P1", "P2"});
  CHECK(split[1].cells == std::vector<std::string>{"P2", "P3"});

  const ComponentFanData short_one{origin, {{"Z", cones_of(x.dense(), {"P1"}), std::nullopt}}};
  CHECK_THROWS_WITH_AS(relevant_cells(x.dense(), origin, short_one), doctest::Contains("DATA_INCONSISTENT"), Error);
  const ComponentFanData moved{{"0", vec({1, 0, 0})}, one.components};
  CHECK_THROWS_WITH_AS(relevant_cells(x.dense(), origin, moved), doctest::Contains("BASE_POINT_MISMATCH"), Error);

  // A point inside P1 with the span of P1 as the only component.
  const Vec w = relint_point(cell(x.dense(), "P1").polyhedron);
  const ComponentFanData span{{"0", w}, {{"Z", {Cone(poly(3, {{0, 1, -1, 0}}, {}))}, std::nullopt}}};
  CHECK(relevant_cells(x.dense(), {"0", w}, span)[0].cells == std::vector<std::string>{"P1"});
}

TEST_CASE("relevance is monotone in the support") {
  const auto x = counter_complex();
  const OrbitPoint origin{"0", vec({0, 0, 0})};
  const auto& d = x.dense();
  std::vector<Cone> support;
  std::size_t previous = 0;
  for (const char* id : {"P2", "P1", "P3"}) {
    support.push_back(Cone(cell(d, id).polyhedron));
    const ComponentFanData data{origin, {{"Z1", support, std::nullopt}, {"Z2", {}, std::nullopt}}};
    const auto r = relevant_cells(d, origin, data);
    CHECK(r[0].cells.size() >= previous);
    previous = r[0].cells.size();
  }
  CHECK(previous == 3);
}

TEST_CASE("parallel evaluation is deterministic") {
  const auto x = counter_complex();
  CriteriaOptions serial, parallel;
  parallel.jobs = 4;
  CHECK(io::to_json(check_skeleton_closed(x, serial)) == io::to_json(check_skeleton_closed(x, parallel)));
  CHECK(io::to_json(check_continuity(x, serial)) == io::to_json(check_continuity(x, parallel)));
  CHECK(io::to_json(check_proper(x, "sigma23", serial)) == io::to_json(check_proper(x, "sigma23", parallel)));
}
