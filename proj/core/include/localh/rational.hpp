#pragma once

#include <boost/multiprecision/gmp.hpp>

#include <stdexcept>
#include <string>

namespace localh {

/// Arbitrary-precision rational scalar. GMP keeps values in canonical
/// reduced form (positive denominator, gcd(|num|, den) = 1), so equality
/// is structural and values hash/compare exactly.
using Rational = boost::multiprecision::mpq_rational;

/// Arbitrary-precision integer (polynomial coefficients, face counts).
using Int = boost::multiprecision::mpz_int;

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses "p/q" (or "p"), optional leading '-', q > 0. Rejects "1/0".
inline Rational parse_rational(const std::string& text) {
  if (text.empty()) throw ParseError("empty rational literal");
  const auto slash = text.find('/');
  const std::string num_part = text.substr(0, slash == std::string::npos ? text.size() : slash);
  auto check_digits = [&](const std::string& s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = (allow_sign && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!check_digits(num_part, true))
    throw ParseError("malformed rational literal: \"" + text + "\"");
  Int num(num_part);
  Int den(1);
  if (slash != std::string::npos) {
    const std::string den_part = text.substr(slash + 1);
    if (!check_digits(den_part, false))
      throw ParseError("malformed rational literal: \"" + text + "\"");
    den = Int(den_part);
    if (den == 0) throw ParseError("zero denominator in rational literal: \"" + text + "\"");
  }
  return Rational(num, den);
}

/// Renders canonically as "p/q", or "p" when the denominator is 1.
inline std::string rational_to_string(const Rational& value) {
  const Int num = numerator(value);
  const Int den = denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace localh
