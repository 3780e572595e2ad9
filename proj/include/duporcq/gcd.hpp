#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "duporcq/mpoly.hpp"

namespace duporcq {

MPoly gcd(const MPoly& a, const MPoly& b);

namespace detail {

inline MPoly leading_coeff_in(const MPoly& p, const std::string& x) {
  return p.coefficient_of(x, p.degree(x));
}

// Pseudo-remainder of a by b in x: lc(b)^(deg a - deg b + 1) a = q b + r.
inline MPoly pseudo_remainder(const MPoly& a, const MPoly& b, const std::string& x) {
  const int db = b.degree(x);
  MPoly lb = leading_coeff_in(b, x);
  MPoly r = a;
  int steps = a.degree(x) - db + 1;
  MPoly xv = MPoly::var(x);
  while (!r.is_zero() && r.degree(x) >= db) {
    int dr = r.degree(x);
    MPoly lr = leading_coeff_in(r, x);
    r = lb * r - lr * pow(xv, static_cast<unsigned>(dr - db)) * b;
    --steps;
  }
  if (steps > 0) r = pow(lb, static_cast<unsigned>(steps)) * r;
  return r;
}

// gcd of the coefficients of p with respect to x.
inline MPoly content_in(const MPoly& p, const std::string& x) {
  MPoly g;
  for (const auto& c : p.coefficients(x)) {
    if (c.is_zero()) continue;
    g = gcd(g, c);
    if (g.is_constant()) return MPoly(1);
  }
  return g;
}

inline MPoly primitive_part_in(const MPoly& p, const std::string& x) {
  if (p.is_zero()) return p;
  return exact_quotient(p, content_in(p, x));
}

// Subresultant PRS gcd of two primitive polynomials of positive degree in x.
inline MPoly subresultant_gcd(MPoly a, MPoly b, const std::string& x) {
  if (a.degree(x) < b.degree(x)) std::swap(a, b);
  MPoly g(1), h(1);
  while (true) {
    const int delta = a.degree(x) - b.degree(x);
    MPoly r = pseudo_remainder(a, b, x);
    if (r.is_zero()) return primitive_part_in(b, x);
    if (r.degree(x) == 0) return MPoly(1);
    a = b;
    b = exact_quotient(r, g * pow(h, static_cast<unsigned>(delta)));
    g = leading_coeff_in(a, x);
    if (delta == 0) continue;
    h = exact_quotient(pow(g, static_cast<unsigned>(delta)), pow(h, static_cast<unsigned>(delta - 1)));
  }
}

}  // namespace detail

// Greatest common divisor over Q(i), normalized to a monic leading term
// (zero only when both inputs are zero).
inline MPoly gcd(const MPoly& a, const MPoly& b) {
  if (a.is_zero()) return b.monic();
  if (b.is_zero()) return a.monic();
  if (a.is_constant() || b.is_constant()) return MPoly(1);

  const auto& va = a.variables();
  const auto& vb = b.variables();
  std::string x;
  for (const auto& v : va)
    if (std::binary_search(vb.begin(), vb.end(), v)) {
      x = v;
      break;
    }
  if (x.empty()) {
    // No shared variable: only constants divide both.
    return MPoly(1);
  }
  // Variables present in only one input go into the content.
  for (const auto& v : va)
    if (!b.has_var(v)) return gcd(detail::content_in(a, v), b);
  for (const auto& v : vb)
    if (!a.has_var(v)) return gcd(a, detail::content_in(b, v));

  MPoly ca = detail::content_in(a, x), cb = detail::content_in(b, x);
  MPoly pa = exact_quotient(a, ca), pb = exact_quotient(b, cb);
  MPoly c = gcd(ca, cb);
  MPoly g = detail::subresultant_gcd(pa, pb, x);
  return (c * g).monic();
}

inline MPoly gcd(const std::vector<MPoly>& ps) {
  MPoly g;
  for (const auto& p : ps) {
    g = gcd(g, p);
    if (g.is_constant() && !g.is_zero()) break;
  }
  return g;
}

// Removes every power of f dividing p; returns the multiplicity through
// the optional out-parameter.
inline MPoly strip_factor(MPoly p, const MPoly& f, int* multiplicity = nullptr) {
  int k = 0;
  if (!f.is_constant() && !p.is_zero()) {
    while (auto q = divide_exact(p, f)) {
      p = *q;
      ++k;
    }
  }
  if (multiplicity) *multiplicity = k;
  return p;
}

}  // namespace duporcq
