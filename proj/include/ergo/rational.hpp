#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace ergo {

/// Exact rational with arbitrary-precision numerator and denominator.
using Rational = boost::multiprecision::mpq_rational;

/// A rational or +infinity (nullopt).
using Extended = std::optional<Rational>;

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;

/// Accepts "p", "-p", "p/q" and finite decimals such as "-0.125" or "3.".
/// Throws Error(ParseError) on anything else or on a zero denominator.
Rational parse_rational(std::string_view text);

/// "p" when the denominator is one, "p/q" otherwise (always reduced).
std::string to_string(const Rational& value);

std::string to_string(const Extended& value);

Rational pow(const Rational& base, unsigned exponent);

inline Extended ext_add(const Extended& a, const Extended& b) {
  if (!a || !b) return std::nullopt;
  return *a + *b;
}

inline bool ext_less(const Extended& a, const Extended& b) {
  if (!a) return false;
  if (!b) return true;
  return *a < *b;
}

inline Extended ext_min(const Extended& a, const Extended& b) { return ext_less(b, a) ? b : a; }

}  // namespace ergo
