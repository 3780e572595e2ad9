#pragma once

#include <string>
#include <vector>

#include "duporcq/mpoly.hpp"

namespace duporcq {

using PolyMatrix = std::vector<std::vector<MPoly>>;

// Fraction-free (Bareiss) determinant of a square polynomial matrix.
inline MPoly determinant(PolyMatrix m) {
  const size_t n = m.size();
  if (n == 0) return MPoly(1);
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant of a non-square matrix");
  MPoly prev(1);
  bool negate = false;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      size_t p = k + 1;
      while (p < n && m[p][k].is_zero()) ++p;
      if (p == n) return MPoly();
      std::swap(m[k], m[p]);
      negate = !negate;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        MPoly v = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        m[i][j] = exact_quotient(v, prev);
      }
      m[i][k] = MPoly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

// Sylvester matrix with p's coefficient rows first.
inline PolyMatrix sylvester_matrix(const MPoly& p, const MPoly& q, const std::string& var) {
  const int m = p.degree(var), n = q.degree(var);
  if (m <= 0 || n <= 0) throw ZeroDegree("resultant: input constant in '" + var + "'");
  auto cp = p.coefficients(var), cq = q.coefficients(var);
  const size_t size = static_cast<size_t>(m + n);
  PolyMatrix s(size, std::vector<MPoly>(size));
  for (int r = 0; r < n; ++r)
    for (int k = 0; k <= m; ++k) s[static_cast<size_t>(r)][static_cast<size_t>(r + k)] = cp[static_cast<size_t>(m - k)];
  for (int r = 0; r < m; ++r)
    for (int k = 0; k <= n; ++k)
      s[static_cast<size_t>(n + r)][static_cast<size_t>(r + k)] = cq[static_cast<size_t>(n - k)];
  return s;
}

// Res_var(p, q) with the convention Res_x(x - a, x - b) = a - b.
inline MPoly resultant(const MPoly& p, const MPoly& q, const std::string& var) {
  return determinant(sylvester_matrix(p, q, var));
}

}  // namespace duporcq
