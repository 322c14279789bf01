#pragma once

#include "tropskel/matrix.hpp"

#include <optional>

namespace tropskel {

/// left * input * right == diagonal, with left and right unimodular and the
/// diagonal entries nonnegative and forming a divisibility chain.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
};

SmithForm smith_normal_form(const IntMatrix& m);

/// Row-style Hermite normal form with zero rows removed: echelon shape,
/// positive pivots, entries above each pivot reduced into [0, pivot).
IntMatrix hermite_normal_form(IntMatrix m);

/// Index [Z^k : L] of the lattice spanned by the rows of `rows` (r x k).
/// std::nullopt stands for an infinite index (L not of full rank k).
std::optional<Int> lattice_index(const IntMatrix& rows);

/// Rows form a basis (in Hermite normal form) of {x in Z^n : m x = 0}.
IntMatrix integer_kernel(const IntMatrix& m);

/// Integer matrix Q ((n-k) x n) whose real kernel is the span of the given
/// generators (rows, in Z^n) and which maps Z^n onto Z^(n-k). Rows are in
/// Hermite normal form, which fixes one chart per quotient.
IntMatrix quotient_matrix(const IntMatrix& generators);

/// Integer matrix R with target == R * source, when one exists.
std::optional<IntMatrix> factor_through(const IntMatrix& target, const IntMatrix& source);

Int integer_determinant(const IntMatrix& m);

/// Integral coordinates of v in the lattice basis given by the rows of
/// `basis`; std::nullopt when v is not in the lattice.
std::optional<IntVec> lattice_coordinates(const IntMatrix& basis, const IntVec& v);

}  // namespace tropskel
