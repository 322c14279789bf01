#include <doctest.h>

#include "support.hpp"

#include <tropskel/error.hpp>
#include <tropskel/feasibility.hpp>

using namespace tropskel;
using namespace support;

namespace {

Vec random_point(std::mt19937_64& rng, std::size_t n) {
  Vec p;
  for (std::size_t i = 0; i < n; ++i) p.push_back(Rat(uniform(rng, -8, 8), uniform(rng, 1, 3)));
  return p;
}

Vec random_normal(std::mt19937_64& rng, std::size_t n) {
  Vec a;
  for (std::size_t i = 0; i < n; ++i) a.push_back(Rat(uniform(rng, -3, 3)));
  return a;
}

}  // namespace

TEST_CASE("systems built around a point are feasible") {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = uniform(rng, 1, 4);
    const Vec p = random_point(rng, n);
    LinearSystem s(n);
    const int m = static_cast<int>(uniform(rng, 1, 7));
    for (int k = 0; k < m; ++k) {
      const Vec a = random_normal(rng, n);
      const Rat ap = dot(a, p);
      switch (uniform(rng, 0, 2)) {
        case 0: s.add_equality(a, ap); break;
        case 1: s.add_inequality(a, ap - Rat(uniform(rng, 0, 2))); break;
        default: s.add_inequality(a, ap - Rat(uniform(rng, 1, 2)), true); break;
      }
    }
    const auto w = solve_feasibility(s);
    REQUIRE(w.has_value());
    CHECK(s.satisfied_by(*w));
  }
}

TEST_CASE("contradictory slabs are infeasible") {
  std::mt19937_64 rng(22);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = uniform(rng, 1, 4);
    const Vec p = random_point(rng, n);
    LinearSystem s(n);
    for (int k = 0; k < 3; ++k) s.add_inequality(random_normal(rng, n), dot(random_normal(rng, n), p) - 10);
    Vec a = random_normal(rng, n);
    if (is_zero(a)) a[0] = 1;
    const Rat b = Rat(uniform(rng, -5, 5));
    const bool strict = uniform(rng, 0, 1) == 1;
    // <a,x> >= b and <a,x> <= b - 1 (or <a,x> > b and <a,x> <= b)
    s.add_inequality(a, b, strict);
    s.add_inequality(Rat(-1) * a, strict ? -b : -(b - 1));
    CHECK_FALSE(solve_feasibility(s).has_value());
  }
}

TEST_CASE("grid oracle agrees on small systems") {
  // Any grid point satisfying a system proves feasibility.
  std::mt19937_64 rng(23);
  int grid_hits = 0;
  for (int trial = 0; trial < 150; ++trial) {
    LinearSystem s(2);
    for (int k = 0; k < 4; ++k)
      s.add_inequality(random_normal(rng, 2), Rat(uniform(rng, -4, 4)), uniform(rng, 0, 3) == 0);
    bool grid = false;
    for (long x = -24; x <= 24 && !grid; ++x)
      for (long y = -24; y <= 24 && !grid; ++y) grid = s.satisfied_by(Vec{Rat(x, 4), Rat(y, 4)});
    const auto w = solve_feasibility(s);
    if (grid) {
      ++grid_hits;
      CHECK(w.has_value());
    }
    if (w) CHECK(s.satisfied_by(*w));
  }
  CHECK(grid_hits > 30);
}

TEST_CASE("strict inequalities") {
  LinearSystem s(1);
  s.add_inequality(vec({1}), Rat(0), true);
  s.add_inequality(vec({-1}), Rat(0));
  CHECK_FALSE(solve_feasibility(s).has_value());
  LinearSystem t(1);
  t.add_inequality(vec({1}), Rat(0), true);
  t.add_inequality(vec({-1}), Rat(-1), true);
  const auto w = solve_feasibility(t);
  REQUIRE(w.has_value());
  CHECK((*w)[0] == Rat(1, 2));
}

TEST_CASE("projection") {
  // x + y = 1, x >= 0, y >= 0 projected onto x is [0, 1].
  LinearSystem s(2);
  s.add_equality(vec({1, 1}), Rat(1));
  s.add_inequality(vec({1, 0}), Rat(0));
  s.add_inequality(vec({0, 1}), Rat(0));
  const LinearSystem p = project(s, {true, false});
  CHECK(p.dimension() == 1);
  CHECK(p.satisfied_by(vec({0})));
  CHECK(p.satisfied_by(vec({1})));
  CHECK_FALSE(p.satisfied_by(vec({2})));
  CHECK_FALSE(p.satisfied_by(vec({-1})));
}

TEST_CASE("dimension mismatch") {
  LinearSystem s(2);
  CHECK_THROWS_AS(s.add_equality(vec({1}), Rat(0)), Error);
}
