#pragma once

#include <complex>
#include <string>

#include "duporcq/rational.hpp"

namespace duporcq {

// Element of Q(i).
struct GaussRational {
  Rational re;
  Rational im;

  GaussRational() = default;
  GaussRational(long v) : re(v) {}  // NOLINT(google-explicit-constructor)
  GaussRational(const Rational& r) : re(r) {}  // NOLINT(google-explicit-constructor)
  GaussRational(const Rational& r, const Rational& i) : re(r), im(i) {}

  static GaussRational I() { return {Rational(0), Rational(1)}; }

  bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
  bool is_real() const { return sgn(im) == 0; }
  bool is_one() const { return re == 1 && sgn(im) == 0; }

  GaussRational conj() const { return {re, -im}; }
  Rational norm2() const { return re * re + im * im; }

  GaussRational inverse() const {
    Rational n = norm2();
    if (sgn(n) == 0) throw std::domain_error("division by zero in Q(i)");
    return {re / n, -im / n};
  }

  GaussRational operator-() const { return {-re, -im}; }
  GaussRational& operator+=(const GaussRational& o) {
    re += o.re;
    im += o.im;
    return *this;
  }
  GaussRational& operator-=(const GaussRational& o) {
    re -= o.re;
    im -= o.im;
    return *this;
  }
  GaussRational& operator*=(const GaussRational& o) {
    if (sgn(im) == 0 && sgn(o.im) == 0) {
      re *= o.re;
      return *this;
    }
    Rational r = re * o.re - im * o.im;
    Rational i = re * o.im + im * o.re;
    re = std::move(r);
    im = std::move(i);
    return *this;
  }
  GaussRational& operator/=(const GaussRational& o) {
    if (sgn(o.im) == 0) {
      if (sgn(o.re) == 0) throw std::domain_error("division by zero in Q(i)");
      re /= o.re;
      im /= o.re;
      return *this;
    }
    return *this *= o.inverse();
  }

  friend GaussRational operator+(GaussRational a, const GaussRational& b) { return a += b; }
  friend GaussRational operator-(GaussRational a, const GaussRational& b) { return a -= b; }
  friend GaussRational operator*(GaussRational a, const GaussRational& b) { return a *= b; }
  friend GaussRational operator/(GaussRational a, const GaussRational& b) { return a /= b; }
  friend bool operator==(const GaussRational& a, const GaussRational& b) {
    return a.re == b.re && a.im == b.im;
  }
  friend bool operator!=(const GaussRational& a, const GaussRational& b) { return !(a == b); }

  std::complex<double> to_complex() const { return {re.get_d(), im.get_d()}; }
};

inline GaussRational pow(GaussRational base, unsigned e) {
  GaussRational r(1);
  while (e) {
    if (e & 1U) r *= base;
    base *= base;
    e >>= 1U;
  }
  return r;
}

// Real parts print as "a/b", imaginary parts carry an "i" suffix factor:
// "3", "-1/2", "i", "-2/3*i", "(1/2+3*i)".
inline std::string to_string(const GaussRational& z) {
  if (z.is_real()) return to_string(z.re);
  auto imag = [](const Rational& v) {
    if (v == 1) return std::string("i");
    if (v == -1) return std::string("-i");
    return to_string(v) + "*i";
  };
  if (sgn(z.re) == 0) return imag(z.im);
  std::string im = imag(z.im);
  if (im[0] != '-') im = "+" + im;
  return "(" + to_string(z.re) + im + ")";
}

}  // namespace duporcq
