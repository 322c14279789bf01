#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <string>
#include <string_view>
#include <vector>

namespace tropskel {

using Int = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                          boost::multiprecision::et_off>;
/// Exact rational, always in lowest terms with a positive denominator.
using Rat = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                          boost::multiprecision::et_off>;

using Vec = std::vector<Rat>;
using IntVec = std::vector<Int>;

/// Accepts "p" or "p/q" with optional leading sign; anything else
/// (decimal points, exponents, empty denominators) is a ParseError.
Rat parse_rat(std::string_view text);

std::string to_string(const Rat& value);
std::string to_string(const Vec& v);
std::string to_string(const IntVec& v);

inline Int numerator_of(const Rat& r) { return boost::multiprecision::numerator(r); }
inline Int denominator_of(const Rat& r) { return boost::multiprecision::denominator(r); }
inline bool is_integer(const Rat& r) { return denominator_of(r) == 1; }

Int gcd(const Int& a, const Int& b);
Int lcm(const Int& a, const Int& b);
Int floor_div(const Int& a, const Int& b);

Rat dot(const Vec& a, const Vec& b);
bool is_zero(const Vec& v);

/// Positive factor s such that s*v is a primitive integer vector. Returns 1
/// for the zero vector.
Rat primitive_scale(const Vec& v);
IntVec primitive(const Vec& v);

Vec to_vec(const IntVec& v);
IntVec to_int_vec(const Vec& v);  // requires integral entries

Vec operator+(const Vec& a, const Vec& b);
Vec operator-(const Vec& a, const Vec& b);
Vec operator*(const Rat& s, const Vec& v);

}  // namespace tropskel
