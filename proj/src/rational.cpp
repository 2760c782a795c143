#include "ergo/rational.hpp"

#include "ergo/error.hpp"

#include <cctype>

namespace ergo {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::EmptyRowOrColumn: return "EmptyRowOrColumn";
    case ErrorKind::LambdaOutOfRange: return "LambdaOutOfRange";
    case ErrorKind::BudgetExceeded: return "BudgetExceeded";
    case ErrorKind::IncompatibleOrder: return "IncompatibleOrder";
    case ErrorKind::NoAdmissiblePast: return "NoAdmissiblePast";
    case ErrorKind::NotASubAction: return "NotASubAction";
    case ErrorKind::NotInConstraintSet: return "NotInConstraintSet";
    case ErrorKind::NotCalibrated: return "NotCalibrated";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NoPathExists: return "NoPathExists";
    case ErrorKind::NotStabilized: return "NotStabilized";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
  }
  return "Unknown";
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

[[noreturn]] void bad(std::string_view text) {
  throw Error(ErrorKind::ParseError, "not a rational: '" + std::string(text) + "'");
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  bool negative = false;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  Rational value;
  if (auto slash = s.find('/'); slash != std::string_view::npos) {
    auto num = s.substr(0, slash);
    auto den = s.substr(slash + 1);
    if (!all_digits(num) || !all_digits(den)) bad(text);
    boost::multiprecision::mpz_int n{std::string(num)}, d{std::string(den)};
    if (d == 0) throw Error(ErrorKind::ParseError, "zero denominator in '" + std::string(text) + "'");
    value = Rational(n, d);
  } else if (auto dot = s.find('.'); dot != std::string_view::npos) {
    auto whole = s.substr(0, dot);
    auto frac = s.substr(dot + 1);
    if (whole.empty() && frac.empty()) bad(text);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac))) bad(text);
    std::string digits = std::string(whole) + std::string(frac);
    boost::multiprecision::mpz_int n(digits.empty() ? std::string("0") : digits);
    boost::multiprecision::mpz_int d = boost::multiprecision::pow(boost::multiprecision::mpz_int(10),
                                                                  static_cast<unsigned>(frac.size()));
    value = Rational(n, d);
  } else {
    if (!all_digits(s)) bad(text);
    value = Rational(boost::multiprecision::mpz_int(std::string(s)));
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& value) {
  if (denominator(value) == 1) return numerator(value).str();
  return numerator(value).str() + "/" + denominator(value).str();
}

std::string to_string(const Extended& value) { return value ? to_string(*value) : std::string("inf"); }

Rational pow(const Rational& base, unsigned exponent) {
  Rational result = 1;
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

}  // namespace ergo
