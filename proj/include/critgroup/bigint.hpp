#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace critgroup {

using BigInt = boost::multiprecision::cpp_int;

inline std::string to_string(const BigInt& x) { return x.str(); }

// Parses an optionally '-'-prefixed decimal integer. Throws std::invalid_argument
// on anything else (no whitespace, no '+', no hex).
BigInt parse_bigint(std::string_view text);

inline BigInt abs(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

// Non-negative gcd; gcd(0, 0) == 0.
inline BigInt gcd(const BigInt& a, const BigInt& b) {
  return boost::multiprecision::gcd(abs(a), abs(b));
}

// Extended gcd: returns g = gcd(|a|, |b|) >= 0 and sets x, y with a*x + b*y == g.
BigInt ext_gcd(const BigInt& a, const BigInt& b, BigInt& x, BigInt& y);

// Quotient a / b that is exact by contract. Throws std::logic_error otherwise.
BigInt exact_div(const BigInt& a, const BigInt& b);

}  // namespace critgroup
