#include <doctest.h>

#include "support.hpp"

#include <tropskel/error.hpp>

using namespace tropskel;
using namespace support;

TEST_CASE("canonical form identifies equal sets") {
  // {x2 = x3, x1 >= 0} written three ways.
  const Polyhedron a = poly(3, {{0, 1, -1, 0}}, {{1, 0, 0, 0}});
  const Polyhedron b = poly(3, {{0, -2, 2, 0}}, {{3, 0, 0, 0}, {2, 1, -1, -1}});
  const Polyhedron c = poly(3, {}, {{0, 1, -1, 0}, {0, -1, 1, 0}, {1, 0, 0, 0}, {1, 0, 0, 5}});
  CHECK(a == b);
  CHECK_FALSE(a == c);  // c has the extra x1 >= 5
  CHECK(a.equalities() == std::vector<Constraint>{{vec({0, 1, -1}), Rat(0)}});
  CHECK(a.inequalities() == std::vector<Constraint>{{vec({1, 0, 0}), Rat(0)}});
  CHECK(a.dimension() == 2);
  CHECK(a.is_cone());
  CHECK(a.to_string() == "{x2 - x3 = 0, x1 >= 0}");
}

TEST_CASE("implicit equalities and emptiness") {
  const Polyhedron seg = poly(2, {}, {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, -1}});
  CHECK(seg.dimension() == 1);
  CHECK(seg.equalities().size() == 1);
  const Polyhedron e = poly(2, {}, {{1, 0, 1}, {-1, 0, 0}});
  CHECK(e.is_empty());
  CHECK(e.dimension() == -1);
  CHECK(e == Polyhedron::empty(2));
  CHECK(Polyhedron::whole_space(0).dimension() == 0);
}

TEST_CASE("faces of the cube") {
  const Polyhedron cube = poly(3, {}, {{1, 0, 0, 0}, {-1, 0, 0, -1}, {0, 1, 0, 0}, {0, -1, 0, -1}, {0, 0, 1, 0},
                                       {0, 0, -1, -1}});
  const auto fs = faces(cube);
  CHECK(fs.size() == 27);
  std::map<int, int> by_dim;
  for (const auto& f : fs) ++by_dim[f.dimension()];
  CHECK(by_dim[3] == 1);
  CHECK(by_dim[2] == 6);
  CHECK(by_dim[1] == 12);
  CHECK(by_dim[0] == 8);
}

TEST_CASE("relative interior points") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = uniform(rng, 1, 3);
    std::vector<std::vector<long>> ineq;
    for (int k = 0; k < 4; ++k) {
      std::vector<long> row;
      for (std::size_t i = 0; i <= n; ++i) row.push_back(uniform(rng, -3, 3));
      ineq.push_back(row);
    }
    const Polyhedron p = poly(n, {}, ineq);
    if (p.is_empty()) continue;
    const Vec w = relint_point(p);
    CHECK(p.contains(w));
    CHECK(p.contains_in_relative_interior(w));
    for (const auto& f : faces(p))
      if (!(f == p)) CHECK_FALSE(f.contains_in_relative_interior(w));
  }
  CHECK_THROWS_AS(relint_point(Polyhedron::empty(2)), Error);
}

TEST_CASE("recession cones") {
  const Polyhedron q = poly(2, {}, {{1, 0, 1}, {0, 1, 2}});
  CHECK(recession_cone(q).polyhedron() == poly(2, {}, {{1, 0, 0}, {0, 1, 0}}));
  const Polyhedron strip = poly(2, {}, {{0, 1, 0}, {0, -1, -1}, {1, 0, 0}});
  CHECK(recession_cone(strip).polyhedron() == poly(2, {{0, 1, 0}}, {{1, 0, 0}}));
  CHECK(recession_cone(Polyhedron::point(vec({3, 4}))).dimension() == 0);
}

TEST_CASE("linear images") {
  const RatMatrix q = RatMatrix::from_rows({vec({1, 0, 0})}, 3);
  CHECK(linear_image(poly(3, {{0, 1, -1, 0}}, {{1, 0, 0, 0}}), q) == poly(1, {}, {{1, 0}}));
  CHECK(linear_image(poly(3, {{1, 0, 0, 0}}, {{0, -1, 1, 0}}), q) == poly(1, {{1, 0}}, {}));
  const RatMatrix q2 = RatMatrix::from_rows({vec({1, 1})}, 2);
  CHECK(linear_image(poly(2, {}, {{1, 0, 0}, {-1, 0, -1}, {0, 1, 0}, {0, -1, -1}}), q2) ==
        poly(1, {}, {{1, 0}, {-1, -2}}));
  const RatMatrix none(0, 2);
  CHECK(linear_image(poly(2, {}, {{1, 0, 0}}), none) == Polyhedron::whole_space(0));
}

TEST_CASE("local cones") {
  const Polyhedron sq = poly(2, {}, {{1, 0, 0}, {-1, 0, -1}, {0, 1, 0}, {0, -1, -1}});
  CHECK(local_cone(sq, vec({0, 0})).polyhedron() == poly(2, {}, {{1, 0, 0}, {0, 1, 0}}));
  CHECK(local_cone(sq, vec({0, 1})).polyhedron() == poly(2, {}, {{1, 0, 0}, {0, -1, 0}}));
  CHECK(local_cone(sq, Vec{Rat(1, 2), Rat(1, 2)}).polyhedron() == Polyhedron::whole_space(2));
  CHECK_THROWS_AS(local_cone(sq, vec({2, 2})), Error);
}

TEST_CASE("union covers") {
  const Polyhedron line = poly(1, {}, {});
  const Polyhedron pos = poly(1, {}, {{1, 0}});
  const Polyhedron neg = poly(1, {}, {{-1, 0}});
  const Polyhedron zero = poly(1, {{1, 0}}, {});
  std::vector<Polyhedron> halves{pos, neg};
  CHECK(union_covers(halves, std::vector<Polyhedron>{line}));
  CHECK(union_covers(halves, std::vector<Polyhedron>{zero}));
  CHECK_FALSE(union_covers(std::vector<Polyhedron>{pos}, std::vector<Polyhedron>{line}));
  // A square split along its diagonal.
  const Polyhedron sq = poly(2, {}, {{1, 0, 0}, {-1, 0, -1}, {0, 1, 0}, {0, -1, -1}});
  const Polyhedron lower = poly(2, {}, {{1, 0, 0}, {-1, 0, -1}, {0, 1, 0}, {1, -1, 0}});
  const Polyhedron upper = poly(2, {}, {{1, 0, 0}, {0, -1, -1}, {-1, 1, 0}});
  CHECK(union_covers(std::vector<Polyhedron>{lower, upper}, std::vector<Polyhedron>{sq}));
  CHECK_FALSE(union_covers(std::vector<Polyhedron>{lower}, std::vector<Polyhedron>{sq}));
  CHECK(union_covers(std::vector<Polyhedron>{}, std::vector<Polyhedron>{Polyhedron::empty(2)}));
}

TEST_CASE("cones") {
  const Cone c = Cone::from_rays(3, {ivec({1, 0, 0}), ivec({0, 1, 0})});
  CHECK(c.dimension() == 2);
  CHECK(c.is_pointed());
  CHECK(c.rays() == std::vector<IntVec>{ivec({0, 1, 0}), ivec({1, 0, 0})});
  CHECK(Cone::from_rays(2, {ivec({1, 0}), ivec({-1, 0})}).is_pointed() == false);
  CHECK_THROWS_AS(Cone(poly(1, {}, {{1, 1}})), Error);
  CHECK(Cone::zero(2).dimension() == 0);
}

TEST_CASE("direction lattices") {
  const Polyhedron seg = poly(2, {{1, -1, 0}}, {{1, 0, 0}, {-1, 0, -1}});
  CHECK(direction_lattice(seg) == imat({{1, 1}}));
  CHECK(lineality_basis(poly(2, {}, {{1, 0, 0}})).size() == 1);
}
