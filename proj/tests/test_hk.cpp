#include <doctest.h>

#include "support.hpp"

#include <tropskel/error.hpp>

using namespace tropskel;
using namespace support;

namespace {

HKInput line_input() {
  HKInput in;
  in.cells = {{"v", 0, {"C"}, {}, {}}, {"r1", 1, {"C"}, {}, {}}, {"r2", 1, {"C"}, {}, {}}, {"r3", 1, {"C"}, {}, {}}};
  in.faces = {{"v", "r1"}, {"v", "r2"}, {"v", "r3"}};
  in.inclusions = {{"v", "C", "C", std::nullopt}};
  in.mtrop = {{"r1", 1}, {"r2", 1}, {"r3", 1}};
  return in;
}

}  // namespace

TEST_CASE("tropical line") {
  const HKComplex hk = build_hk(line_input());
  CHECK(hk.f_vector() == std::vector<std::size_t>{1, 3});
  CHECK(hk.connected_components() == 1);
  for (const auto& r : {"r1", "r2", "r3"}) {
    const STReport st = validate_st_formula(hk, r);
    CHECK(st.status == Status::Pass);
    CHECK(st.index_sum == 1);
  }
  // The natural map is onto and keeps dimensions.
  std::set<std::string> hit;
  for (std::size_t i = 0; i < hk.cells().size(); ++i) {
    hit.insert(hk.image(i));
    CHECK(hk.cells()[i].dim == hk.sigma_cell(hk.image(i)).dim);
  }
  CHECK(hit.size() == 4);
}

TEST_CASE("double cover of a segment") {
  HKInput in;
  in.cells = {{"a", 0, {"A"}, {}, {}}, {"b", 0, {"B"}, {}, {}}, {"e", 1, {"C1", "C2"}, {}, {}}};
  in.faces = {{"a", "e"}, {"b", "e"}};
  in.inclusions = {{"a", "C1", "A", std::nullopt}, {"a", "C2", "A", std::nullopt}, {"b", "C1", "B", std::nullopt},
                   {"b", "C2", "B", std::nullopt}};
  const HKComplex hk = build_hk(in);
  CHECK(hk.f_vector() == std::vector<std::size_t>{2, 2});
  CHECK(hk.connected_components() == 1);
  CHECK(hk.boundary().size() == 4);
}

TEST_CASE("point with k components") {
  HKInput in;
  in.cells = {{"p", 0, {"A", "B", "C"}, {}, {}}};
  const HKComplex hk = build_hk(in);
  CHECK(hk.f_vector() == std::vector<std::size_t>{3});
  CHECK(hk.connected_components() == 3);
}

TEST_CASE("cell counts match component counts") {
  std::mt19937_64 rng(51);
  for (int trial = 0; trial < 30; ++trial) {
    HKInput in;
    std::size_t expected0 = 0, expected1 = 0;
    const int vertices = static_cast<int>(uniform(rng, 1, 4));
    for (int v = 0; v < vertices; ++v) {
      const int k = static_cast<int>(uniform(rng, 1, 3));
      SigmaCell c{"v" + std::to_string(v), 0, {}, {}, {}};
      for (int i = 0; i < k; ++i) c.components.push_back("V" + std::to_string(i));
      expected0 += k;
      in.cells.push_back(c);
    }
    for (int e = 0; e + 1 < vertices; ++e) {
      const int k = static_cast<int>(uniform(rng, 1, 3));
      SigmaCell c{"e" + std::to_string(e), 1, {}, {}, {}};
      for (int i = 0; i < k; ++i) {
        c.components.push_back("E" + std::to_string(i));
        in.inclusions.push_back({"v" + std::to_string(e), "E" + std::to_string(i), "V0", c.id});
        in.inclusions.push_back({"v" + std::to_string(e + 1), "E" + std::to_string(i), "V0", c.id});
      }
      expected1 += k;
      in.faces.push_back({"v" + std::to_string(e), c.id});
      in.faces.push_back({"v" + std::to_string(e + 1), c.id});
      in.cells.push_back(c);
    }
    const HKComplex hk = build_hk(in);
    const auto f = hk.f_vector();
    CHECK(f[0] == expected0);
    if (vertices > 1) CHECK(f[1] == expected1);
  }
}

TEST_CASE("validation errors") {
  HKInput missing = line_input();
  missing.inclusions.clear();
  CHECK_THROWS_WITH_AS(build_hk(missing), doctest::Contains("MISSING_INCLUSION"), Error);
  HKInput graded = line_input();
  graded.cells.push_back({"big", 2, {"C"}, {}, {}});
  graded.faces.push_back({"v", "big"});
  CHECK_THROWS_WITH_AS(build_hk(graded), doctest::Contains("NOT_GRADED"), Error);
  HKInput empty = line_input();
  empty.cells[0].components.clear();
  CHECK_THROWS_AS(build_hk(empty), Error);
  HKInput wrong_target = line_input();
  wrong_target.inclusions[0].to = "D";
  CHECK_THROWS_WITH_AS(build_hk(wrong_target), doctest::Contains("DATA_INCONSISTENT"), Error);
}

TEST_CASE("st formula") {
  HKInput one;
  one.cells = {{"P", 1, {"C"}, {}, {}}};
  one.mtrop = {{"P", 1}};
  CHECK(validate_st_formula(build_hk(one), "P").status == Status::Pass);

  HKInput two;
  two.cells = {{"P", 1, {"C1", "C2"}, {}, {{"C1", imat({{1}})}, {"C2", imat({{-1}})}}}};
  two.mtrop = {{"P", 2}};
  CHECK(validate_st_formula(build_hk(two), "P").status == Status::Pass);

  HKInput doubled;
  doubled.cells = {{"P", 1, {"C"}, {}, {{"C", imat({{2}})}}}};
  doubled.mtrop = {{"P", 1}};
  const STReport r = validate_st_formula(build_hk(doubled), "P");
  CHECK(r.status == Status::Fail);
  CHECK(r.index_sum == 2);

  // m_Trop = 2 = index sum with one component is consistent.
  doubled.mtrop = {{"P", 2}};
  CHECK(validate_st_formula(build_hk(doubled), "P").status == Status::Pass);

  HKInput flat;
  flat.cells = {{"P", 2, {"C"}, {}, {{"C", imat({{1, 0}})}}}};
  flat.mtrop = {{"P", 1}};
  CHECK_THROWS_WITH_AS(validate_st_formula(build_hk(flat), "P"), doctest::Contains("INDEX_INFINITE"), Error);
}

TEST_CASE("m = r forces unimodular components") {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 40; ++trial) {
    const int r = static_cast<int>(uniform(rng, 1, 3));
    HKInput in;
    SigmaCell c{"P", 2, {}, {}, {}};
    Int sum = 0;
    for (int i = 0; i < r; ++i) {
      const std::string l = "C" + std::to_string(i);
      c.components.push_back(l);
      const IntMatrix m = imat({{uniform(rng, 1, 2), uniform(rng, -2, 2)}, {0, uniform(rng, 1, 2)}});
      c.lattices[l] = m;
      sum += *lattice_index(m);
    }
    in.cells = {c};
    in.mtrop = {{"P", r}};
    const HKComplex hk = build_hk(in);
    const STReport st = validate_st_formula(hk, "P");
    CHECK((st.status == Status::Pass) == (sum == r));
    if (st.status == Status::Pass)
      for (const auto& [l, m] : c.lattices) CHECK(unimodular_check(hk, "P", m));
  }
}

TEST_CASE("unimodularity in the span of a cell") {
  HKInput in;
  SigmaCell seg{"P", 1, {"C"}, poly(2, {{1, -1, 0}}, {{1, 0, 0}, {-1, 0, -1}}), {}};
  in.cells = {seg};
  const HKComplex hk = build_hk(in);
  CHECK(unimodular_check(hk, "P", std::nullopt));
  CHECK(unimodular_check(hk, "P", imat({{1, 1}})));
  CHECK_FALSE(unimodular_check(hk, "P", imat({{2, 2}})));
  CHECK(component_index(hk, "P", imat({{2, 2}})) == 2);
  CHECK_THROWS_WITH_AS(component_index(hk, "P", imat({{1, 0}})), doctest::Contains("DATA_INCONSISTENT"), Error);
}

TEST_CASE("support cross-check") {
  HKInput in;
  in.cells = {{"v", 0, {"C"}, Polyhedron::point(vec({0, 0})), {}},
              {"r", 1, {"C"}, poly(2, {{0, 1, 0}}, {{1, 0, 0}}), {}}};
  in.faces = {{"v", "r"}};
  in.inclusions = {{"v", "C", "C", std::nullopt}};
  in.support = std::vector<Polyhedron>{poly(2, {{0, 1, 0}}, {{1, 0, 0}})};
  CHECK_NOTHROW(build_hk(in));
  in.support = std::vector<Polyhedron>{poly(2, {{0, 1, 0}}, {})};
  CHECK_THROWS_WITH_AS(build_hk(in), doctest::Contains("DATA_INCONSISTENT"), Error);
}
