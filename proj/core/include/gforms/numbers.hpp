#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace gforms {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

Integer gcd(const Integer& a, const Integer& b);
Integer lcm(const Integer& a, const Integer& b);

/// Floor division and the matching nonnegative remainder (for b > 0).
Integer floor_div(const Integer& a, const Integer& b);
Integer floor_mod(const Integer& a, const Integer& b);

std::int64_t mod64(std::int64_t a, std::int64_t m);

inline Integer numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline Integer denominator(const Rational& q) { return boost::multiprecision::denominator(q); }
inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

/// "p/q" when q != 1, otherwise "p".
std::string to_string(const Integer& n);
std::string to_string(const Rational& q);

/// Accepts "p", "-p", "p/q"; throws InputError on anything else or q == 0.
Rational parse_rational(std::string_view text);
Integer parse_integer(std::string_view text);

}  // namespace gforms
