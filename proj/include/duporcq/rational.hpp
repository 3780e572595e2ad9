#pragma once

#include <gmpxx.h>

#include <cctype>
#include <cstdlib>
#include <ostream>
#include <string>
#include <string_view>

#include "duporcq/errors.hpp"

namespace duporcq {

// Arbitrary precision rational, always kept in lowest terms with a positive
// denominator.
using Rational = mpq_class;

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw std::domain_error("zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Accepts "p", "p/q" and plain decimals such as "-0.72" or "1e-3".
inline Rational parse_rational(std::string_view text) {
  std::string s(text);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  size_t start = 0;
  while (start < s.size() && std::isspace(static_cast<unsigned char>(s[start]))) ++start;
  s = s.substr(start);
  if (s.empty()) throw ParseError("empty rational");

  auto valid_int = [](const std::string& t) {
    size_t k = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
    if (k == t.size()) return false;
    for (; k < t.size(); ++k)
      if (!std::isdigit(static_cast<unsigned char>(t[k]))) return false;
    return true;
  };
  auto strip_plus = [](std::string t) {
    if (!t.empty() && t[0] == '+') t.erase(0, 1);
    return t;
  };

  if (auto slash = s.find('/'); slash != std::string::npos) {
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!valid_int(num) || !valid_int(den)) throw ParseError("bad rational '" + s + "'");
    mpz_class n(strip_plus(num), 10), d(strip_plus(den), 10);
    if (d == 0) throw ParseError("zero denominator in '" + s + "'");
    Rational r(n, d);
    r.canonicalize();
    return r;
  }
  if (valid_int(s)) return Rational(mpz_class(strip_plus(s), 10));

  // Decimal with optional exponent, converted exactly.
  std::string mant = s;
  long exp10 = 0;
  if (auto e = s.find_first_of("eE"); e != std::string::npos) {
    mant = s.substr(0, e);
    std::string ex = s.substr(e + 1);
    if (!valid_int(ex)) throw ParseError("bad exponent in '" + s + "'");
    exp10 = std::strtol(ex.c_str(), nullptr, 10);
  }
  bool neg = false;
  if (!mant.empty() && (mant[0] == '-' || mant[0] == '+')) {
    neg = mant[0] == '-';
    mant.erase(0, 1);
  }
  auto dot = mant.find('.');
  std::string digits = mant;
  if (dot != std::string::npos) {
    digits = mant.substr(0, dot) + mant.substr(dot + 1);
    exp10 -= static_cast<long>(mant.size() - dot - 1);
  }
  if (digits.empty() || !valid_int(digits)) throw ParseError("bad rational '" + s + "'");
  mpz_class n(digits, 10), scale;
  mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exp10 < 0 ? -exp10 : exp10));
  Rational r = exp10 < 0 ? Rational(n, scale) : Rational(n * scale);
  r.canonicalize();
  return neg ? Rational(-r) : r;
}

// "p" or "p/q".
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline double to_double(const Rational& r) { return r.get_d(); }

inline int sign(const Rational& r) { return sgn(r); }

}  // namespace duporcq
