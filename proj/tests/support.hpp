#pragma once

#include <algorithm>
#include <tropskel/json_io.hpp>
#include <tropskel/lattice.hpp>

#include <random>
#include <string>

namespace support {

using namespace tropskel;

inline Vec vec(std::initializer_list<long> xs) {
  Vec out;
  for (long x : xs) out.push_back(Rat(x));
  return out;
}

inline IntVec ivec(std::initializer_list<long> xs) {
  IntVec out;
  for (long x : xs) out.push_back(Int(x));
  return out;
}

// Rows are [a_1, ..., a_n, b] for <a, x> = b and <a, x> >= b.
inline Polyhedron poly(std::size_t n, std::vector<std::vector<long>> eq, std::vector<std::vector<long>> ineq) {
  auto convert = [n](const std::vector<std::vector<long>>& rows) {
    std::vector<Constraint> out;
    for (const auto& r : rows) {
      Vec a;
      for (std::size_t i = 0; i < n; ++i) a.push_back(Rat(r[i]));
      out.push_back({a, Rat(r[n])});
    }
    return out;
  };
  return Polyhedron::from_constraints(n, convert(eq), convert(ineq));
}

inline IntMatrix imat(std::vector<std::vector<long>> rows) {
  IntMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

inline std::string data_path(const std::string& name) { return std::string(TROPSKEL_TEST_DATA) + "/" + name; }
inline io::Json data(const std::string& name) { return io::load(data_path(name)); }

inline Fan octant_fan() { return io::fan_from_json(data("octant_fan.json")); }
inline Fan p2_fan() { return io::fan_from_json(data("p2_fan.json")); }
inline LaurentPoly counter_poly() { return io::poly_from_json(data("counter_poly.json")); }
inline LaurentPoly line_poly() { return io::poly_from_json(data("line_poly.json")); }

inline const WeightedCell& cell(const std::vector<WeightedCell>& cells, const std::string& id) {
  for (const auto& c : cells)
    if (c.id == id) return c;
  throw std::out_of_range("no cell " + id);
}

// Laplace expansion; independent of the elimination code under test.
inline Int cofactor_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Int total = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t k = 0, c = 0; k < n; ++k)
        if (k != j) minor(i - 1, c++) = m(i, k);
    const Int term = m(0, j) * cofactor_det(minor);
    total += (j % 2 == 0) ? term : Int(-term);
  }
  return total;
}

inline long uniform(std::mt19937_64& rng, long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(rng);
}

inline IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long lo, long hi) {
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = uniform(rng, lo, hi);
  return m;
}

// Valuations in {0, +-1, +-1/2}; distinct exponents with entries in [-1, 2].
inline LaurentPoly random_poly(std::mt19937_64& rng, std::size_t n, std::size_t terms) {
  static const Rat vals[] = {Rat(0), Rat(1), Rat(-1), Rat(1, 2), Rat(-1, 2)};
  std::vector<Term> out;
  std::set<IntVec> seen;
  std::size_t available = 1;
  for (std::size_t i = 0; i < n && available < terms; ++i) available *= 4;
  terms = std::min(terms, available);
  while (out.size() < terms) {
    IntVec e(n);
    for (auto& x : e) x = uniform(rng, -1, 2);
    if (!seen.insert(e).second) continue;
    out.push_back({e, vals[uniform(rng, 0, 4)], ""});
  }
  return LaurentPoly(n, out);
}

}  // namespace support
