#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace stickknot {

// Exact arbitrary-precision rational scalar used by the exact arithmetic mode.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

inline int sign_of(const Rational& r) { return r.sign(); }
inline int sign_of(double v) { return v > 0.0 ? 1 : (v < 0.0 ? -1 : 0); }

// Parses "p/q", an integer, or a plain decimal ("-1.25") into an exact rational.
// Exponents are deliberately rejected; catalog files use fractions or short decimals.
inline std::optional<Rational> try_parse_rational(const std::string& text) {
  if (text.empty()) return std::nullopt;
  const auto slash = text.find('/');
  if (slash != std::string::npos) {
    const std::string num = text.substr(0, slash);
    const std::string den = text.substr(slash + 1);
    if (num.empty() || den.empty()) return std::nullopt;
    try {
      BigInt n(num), d(den);
      if (d == 0) return std::nullopt;
      return Rational(n, d);
    } catch (const std::exception&) {
      return std::nullopt;
    }
  }
  std::string body = text;
  bool neg = false;
  if (body[0] == '+' || body[0] == '-') {
    neg = body[0] == '-';
    body = body.substr(1);
  }
  const auto dot = body.find('.');
  std::string digits = body;
  std::size_t frac_len = 0;
  if (dot != std::string::npos) {
    digits = body.substr(0, dot) + body.substr(dot + 1);
    frac_len = body.size() - dot - 1;
  }
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
    return std::nullopt;
  BigInt n(digits);
  BigInt d = 1;
  for (std::size_t i = 0; i < frac_len; ++i) d *= 10;
  Rational r(n, d);
  return neg ? -r : r;
}

inline Rational parse_rational(const std::string& text) {
  auto r = try_parse_rational(text);
  if (!r) throw std::invalid_argument("not a rational literal: '" + text + "'");
  return *r;
}

inline std::string rational_to_string(const Rational& r) {
  const BigInt num = numerator(r), den = denominator(r);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

}  // namespace stickknot
