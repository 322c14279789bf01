#include <doctest.h>

#include "support.hpp"

#include <tropskel/error.hpp>

using namespace tropskel;
using namespace support;

namespace {

bool is_smith_diagonal(const IntMatrix& d) {
  const std::size_t k = std::min(d.rows(), d.cols());
  for (std::size_t i = 0; i < d.rows(); ++i)
    for (std::size_t j = 0; j < d.cols(); ++j)
      if (i != j && d(i, j) != 0) return false;
  for (std::size_t i = 0; i < k; ++i) {
    if (d(i, i) < 0) return false;
    if (i + 1 < k && d(i, i) != 0 && d(i + 1, i + 1) % d(i, i) != 0) return false;
    if (i + 1 < k && d(i, i) == 0 && d(i + 1, i + 1) != 0) return false;
  }
  return true;
}

Int abs_int(const Int& x) { return x < 0 ? Int(-x) : x; }

}  // namespace

TEST_CASE("smith normal form reconstructs random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t r = uniform(rng, 1, 4), c = uniform(rng, 1, 4);
    const IntMatrix m = random_matrix(rng, r, c, -6, 6);
    const SmithForm s = smith_normal_form(m);
    REQUIRE(s.left * m * s.right == s.diagonal);
    CHECK(is_smith_diagonal(s.diagonal));
    CHECK(abs_int(cofactor_det(s.left)) == 1);
    CHECK(abs_int(cofactor_det(s.right)) == 1);
  }
}

TEST_CASE("lattice index equals |det| for square matrices") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = uniform(rng, 1, 4);
    const IntMatrix m = random_matrix(rng, n, n, -5, 5);
    const Int det = cofactor_det(m);
    const auto idx = lattice_index(m);
    if (det == 0) {
      CHECK_FALSE(idx.has_value());
    } else {
      REQUIRE(idx.has_value());
      CHECK(*idx == abs_int(det));
    }
    CHECK(integer_determinant(m) == det);
  }
}

TEST_CASE("lattice index of non-square generators") {
  CHECK(*lattice_index(imat({{2, 0}, {0, 2}, {1, 1}})) == 2);
  CHECK(*lattice_index(imat({{1, 0}, {0, 1}, {5, 7}})) == 1);
  CHECK_FALSE(lattice_index(imat({{1, 1}, {2, 2}})).has_value());
  CHECK(*lattice_index(imat({{2}})) == 2);
}

TEST_CASE("hermite normal form") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 80; ++trial) {
    const IntMatrix m = random_matrix(rng, uniform(rng, 1, 4), uniform(rng, 1, 4), -6, 6);
    const IntMatrix h = hermite_normal_form(m);
    CHECK(h.rows() == rank(to_rat(m)));
    std::size_t last = 0;
    for (std::size_t i = 0; i < h.rows(); ++i) {
      std::size_t p = 0;
      while (h(i, p) == 0) ++p;
      if (i > 0) CHECK(p > last);
      last = p;
      CHECK(h(i, p) > 0);
      for (std::size_t k = 0; k < i; ++k) CHECK((h(k, p) >= 0 && h(k, p) < h(i, p)));
    }
    // Same row lattice in both directions.
    for (std::size_t i = 0; i < m.rows(); ++i) CHECK(lattice_coordinates(h, m.row(i)).has_value());
    if (h.rows() > 0) CHECK(factor_through(h, m).has_value());
  }
  CHECK(hermite_normal_form(imat({{0, 0}})).rows() == 0);
}

TEST_CASE("integer kernel is saturated") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t r = uniform(rng, 1, 3), c = uniform(rng, 2, 5);
    const IntMatrix m = random_matrix(rng, r, c, -4, 4);
    const IntMatrix k = integer_kernel(m);
    CHECK(k.rows() == c - rank(to_rat(m)));
    if (k.rows() == 0) continue;
    const IntMatrix zero(r, k.rows());
    CHECK(m * k.transpose() == zero);
    // Saturated: all elementary divisors are 1.
    const SmithForm s = smith_normal_form(k);
    for (std::size_t i = 0; i < k.rows(); ++i) CHECK(s.diagonal(i, i) == 1);
  }
}

TEST_CASE("quotient matrices kill exactly the span") {
  const IntMatrix q = quotient_matrix(imat({{0, 1, 0}, {0, 0, 1}}));
  CHECK(q == imat({{1, 0, 0}}));
  const IntMatrix q2 = quotient_matrix(imat({{1, 1}}));
  CHECK(q2.rows() == 1);
  CHECK(q2 * imat({{1}, {1}}) == imat({{0}}));
  CHECK(quotient_matrix(IntMatrix(0, 3)) == IntMatrix::identity(3));
}

TEST_CASE("lattice coordinates and factoring") {
  const IntMatrix basis = imat({{1, 1, 0}, {0, 0, 1}});
  CHECK(*lattice_coordinates(basis, ivec({3, 3, -2})) == ivec({3, -2}));
  CHECK_FALSE(lattice_coordinates(basis, ivec({1, 0, 0})).has_value());
  CHECK_FALSE(lattice_coordinates(imat({{2, 2}}), ivec({1, 1})).has_value());
  const auto r = factor_through(imat({{2, 2, 4}}), basis);
  REQUIRE(r.has_value());
  CHECK(*r * basis == imat({{2, 2, 4}}));
}
