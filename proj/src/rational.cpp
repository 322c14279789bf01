#include "tropskel/rational.hpp"

#include "tropskel/error.hpp"

#include <cctype>

namespace tropskel {

namespace {

bool is_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view s = trim(text);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  std::string_view num = s;
  std::string_view den = "1";
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    num = s.substr(0, slash);
    den = s.substr(slash + 1);
  }
  if (!is_digits(num) || !is_digits(den))
    throw Error(ErrorCode::ParseError, "not an exact rational: \"" + std::string(text) + "\"");
  Int n{std::string(num)};
  Int d{std::string(den)};
  if (d == 0) throw Error(ErrorCode::ParseError, "zero denominator in \"" + std::string(text) + "\"");
  Rat r(n, d);
  return negative ? Rat(-r) : r;
}

std::string to_string(const Rat& value) {
  std::string out = numerator_of(value).str();
  if (!is_integer(value)) out += "/" + denominator_of(value).str();
  return out;
}

std::string to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

std::string to_string(const IntVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += v[i].str();
  }
  return out + ")";
}

Int gcd(const Int& a, const Int& b) { return boost::multiprecision::gcd(a, b); }

Int lcm(const Int& a, const Int& b) {
  if (a == 0 || b == 0) return Int(0);
  return boost::multiprecision::lcm(a, b);
}

Int floor_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) != (b < 0))) q -= 1;
  return q;
}

Rat dot(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "dot product of vectors of different length");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
  return s;
}

bool is_zero(const Vec& v) {
  for (const Rat& x : v)
    if (x != 0) return false;
  return true;
}

Rat primitive_scale(const Vec& v) {
  Int den = 1;
  for (const Rat& x : v)
    if (x != 0) den = lcm(den, denominator_of(x));
  Int g = 0;
  for (const Rat& x : v)
    if (x != 0) g = gcd(g, numerator_of(x) * (den / denominator_of(x)));
  if (g == 0) return Rat(1);
  return Rat(den, g);
}

IntVec primitive(const Vec& v) { return to_int_vec(primitive_scale(v) * v); }

Vec to_vec(const IntVec& v) { return Vec(v.begin(), v.end()); }

IntVec to_int_vec(const Vec& v) {
  IntVec out;
  out.reserve(v.size());
  for (const Rat& x : v) {
    if (!is_integer(x)) throw Error(ErrorCode::InvalidInput, "expected an integral vector, got " + to_string(v));
    out.push_back(numerator_of(x));
  }
  return out;
}

Vec operator+(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector sum size mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

Vec operator-(const Vec& a, const Vec& b) {
  if (a.size() != b.size()) throw Error(ErrorCode::DimensionMismatch, "vector difference size mismatch");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

Vec operator*(const Rat& s, const Vec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = s * v[i];
  return out;
}

}  // namespace tropskel
