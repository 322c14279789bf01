#include "tropskel/lattice.hpp"

namespace tropskel {

namespace {

Int abs_value(const Int& x) { return x < 0 ? Int(-x) : x; }

// x*a + y*b == g == gcd(a, b) >= 0
void extended_gcd(const Int& a, const Int& b, Int& g, Int& x, Int& y) {
  Int old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  g = old_r;
  x = old_s;
  y = old_t;
}

void negate_row(IntMatrix& m, std::size_t i) {
  for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = -m(i, j);
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& m) {
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix d = m;
  IntMatrix u = IntMatrix::identity(rows);
  IntMatrix v = IntMatrix::identity(cols);

  for (std::size_t t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      bool found = false;
      std::size_t pi = t, pj = t;
      Int best;
      for (std::size_t i = t; i < rows; ++i)
        for (std::size_t j = t; j < cols; ++j) {
          if (d(i, j) == 0) continue;
          Int a = abs_value(d(i, j));
          if (!found || a < best) {
            found = true;
            best = a;
            pi = i;
            pj = j;
          }
        }
      if (!found) return {std::move(u), std::move(d), std::move(v)};
      d.swap_rows(t, pi);
      u.swap_rows(t, pi);
      d.swap_cols(t, pj);
      v.swap_cols(t, pj);

      bool clean = true;
      for (std::size_t i = t + 1; i < rows; ++i) {
        if (d(i, t) == 0) continue;
        Int q = d(i, t) / d(t, t);
        d.add_row(i, t, Int(-q));
        u.add_row(i, t, Int(-q));
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < cols; ++j) {
        if (d(t, j) == 0) continue;
        Int q = d(t, j) / d(t, t);
        d.add_col(j, t, Int(-q));
        v.add_col(j, t, Int(-q));
        if (d(t, j) != 0) clean = false;
      }
      if (!clean) continue;

      // Enforce the divisibility chain on the remaining block.
      bool divides = true;
      for (std::size_t i = t + 1; i < rows && divides; ++i)
        for (std::size_t j = t + 1; j < cols; ++j)
          if (d(i, j) % d(t, t) != 0) {
            d.add_row(t, i, Int(1));
            u.add_row(t, i, Int(1));
            divides = false;
            break;
          }
      if (!divides) continue;

      if (d(t, t) < 0) {
        negate_row(d, t);
        negate_row(u, t);
      }
      break;
    }
  }
  return {std::move(u), std::move(d), std::move(v)};
}

IntMatrix hermite_normal_form(IntMatrix a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    for (std::size_t i = r + 1; i < rows; ++i) {
      if (a(i, c) == 0) continue;
      Int g, x, y;
      extended_gcd(a(r, c), a(i, c), g, x, y);
      const Int p = a(r, c) / g, q = a(i, c) / g;
      for (std::size_t j = 0; j < cols; ++j) {
        Int top = x * a(r, j) + y * a(i, j);
        Int bottom = -q * a(r, j) + p * a(i, j);
        a(r, j) = std::move(top);
        a(i, j) = std::move(bottom);
      }
    }
    if (a(r, c) == 0) continue;
    if (a(r, c) < 0) negate_row(a, r);
    for (std::size_t i = 0; i < r; ++i) {
      if (a(i, c) == 0) continue;
      a.add_row(i, r, Int(-floor_div(a(i, c), a(r, c))));
    }
    ++r;
  }
  IntMatrix out(r, cols);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < cols; ++j) out(i, j) = a(i, j);
  return out;
}

std::optional<Int> lattice_index(const IntMatrix& rows) {
  const std::size_t k = rows.cols();
  if (k == 0) return Int(1);
  const SmithForm s = smith_normal_form(rows);
  Int index = 1;
  for (std::size_t i = 0; i < k; ++i) {
    if (i >= rows.rows() || s.diagonal(i, i) == 0) return std::nullopt;
    index *= s.diagonal(i, i);
  }
  return index;
}

IntMatrix integer_kernel(const IntMatrix& m) {
  const std::size_t n = m.cols();
  if (m.rows() == 0) return IntMatrix::identity(n);
  const SmithForm s = smith_normal_form(m);
  std::size_t r = 0;
  while (r < std::min(m.rows(), n) && s.diagonal(r, r) != 0) ++r;
  IntMatrix basis(n - r, n);
  for (std::size_t j = r; j < n; ++j)
    for (std::size_t i = 0; i < n; ++i) basis(j - r, i) = s.right(i, j);
  return hermite_normal_form(std::move(basis));
}

IntMatrix quotient_matrix(const IntMatrix& generators) { return integer_kernel(generators); }

std::optional<IntMatrix> factor_through(const IntMatrix& target, const IntMatrix& source) {
  // target = R * source  <=>  target^T = source^T * R^T; solve column by column.
  if (target.cols() != source.cols())
    throw Error(ErrorCode::DimensionMismatch, "factor_through: column counts differ");
  IntMatrix r(target.rows(), source.rows());
  for (std::size_t i = 0; i < target.rows(); ++i) {
    auto coords = lattice_coordinates(source, target.row(i));
    if (!coords) return std::nullopt;
    for (std::size_t j = 0; j < source.rows(); ++j) r(i, j) = (*coords)[j];
  }
  return r;
}

Int integer_determinant(const IntMatrix& m) {
  const Rat det = determinant(to_rat(m));
  return numerator_of(det);
}

std::optional<IntVec> lattice_coordinates(const IntMatrix& basis, const IntVec& v) {
  // Solve c * basis == v over Z via the Smith form of basis (r x n):
  // U B V = D  =>  c B = v  <=>  (c U^{-1}) D = v V.
  if (v.size() != basis.cols())
    throw Error(ErrorCode::DimensionMismatch, "lattice_coordinates: vector length differs");
  const std::size_t r = basis.rows(), n = basis.cols();
  if (r == 0) {
    for (const Int& x : v)
      if (x != 0) return std::nullopt;
    return IntVec{};
  }
  const SmithForm s = smith_normal_form(basis);
  IntMatrix row_v(1, n);
  for (std::size_t j = 0; j < n; ++j) row_v(0, j) = v[j];
  const IntMatrix w = row_v * s.right;
  IntMatrix y(1, r);
  for (std::size_t j = 0; j < n; ++j) {
    const Int d = j < r ? s.diagonal(j, j) : Int(0);
    if (d == 0) {
      if (w(0, j) != 0) return std::nullopt;
      continue;
    }
    if (w(0, j) % d != 0) return std::nullopt;
    y(0, j) = w(0, j) / d;
  }
  // c = y * U
  const IntMatrix c = y * s.left;
  return c.row(0);
}

}  // namespace tropskel
