#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "duporcq/gcd.hpp"
#include "duporcq/geometry.hpp"
#include "duporcq/mpoly.hpp"
#include "duporcq/quaternion.hpp"
#include "duporcq/resultant.hpp"

namespace duporcq {

// ---------------------------------------------------------------------------
// Numeric and exact displacements

template <class T>
struct StudyPoseT {
  std::array<T, 4> e{};
  std::array<T, 4> f{};

  T study() const { return e[0] * f[0] + e[1] * f[1] + e[2] * f[2] + e[3] * f[3]; }
  T norm() const { return e[0] * e[0] + e[1] * e[1] + e[2] * e[2] + e[3] * e[3]; }
  Quaternion<T> eq() const { return {e[0], e[1], e[2], e[3]}; }
  Quaternion<T> fq() const { return {f[0], f[1], f[2], f[3]}; }
};

using StudyPose = StudyPoseT<double>;

template <class T>
using Vec3T = std::array<T, 3>;

template <class T>
struct Displacement {
  std::array<Vec3T<T>, 3> R;  // rows
  Vec3T<T> t;

  Vec3T<T> apply(const Vec3T<T>& x) const {
    Vec3T<T> y;
    for (size_t i = 0; i < 3; ++i) y[i] = R[i][0] * x[0] + R[i][1] * x[1] + R[i][2] * x[2] + t[i];
    return y;
  }
};

namespace detail {
inline bool near_zero(double v, double scale) { return std::abs(v) <= 1e-12 * std::max(1.0, scale); }
inline bool near_zero(const Rational& v, const Rational&) { return sgn(v) == 0; }
inline double abs_scale(double v) { return std::abs(v); }
inline Rational abs_scale(const Rational& v) { return abs(v); }
}  // namespace detail

// x -> R x + t with R x = vec(e x e~) / N and t = vec(2 f e~) / N.
template <class T>
Displacement<T> displacement(const StudyPoseT<T>& pose) {
  T N = pose.norm();
  if (detail::near_zero(N, T(0))) throw ExceptionalPose("N = 0: pose lies on the exceptional quadric");
  T fn = pose.f[0] * pose.f[0] + pose.f[1] * pose.f[1] + pose.f[2] * pose.f[2] + pose.f[3] * pose.f[3];
  if (!detail::near_zero(pose.study(), detail::abs_scale(N) + detail::abs_scale(fn)))
    throw StudyViolation("S != 0: not on the Study quadric");
  Quaternion<T> e = pose.eq(), ec = e.conj();
  Displacement<T> d;
  for (size_t j = 0; j < 3; ++j) {
    Vec3T<T> basis{T(0), T(0), T(0)};
    basis[j] = T(1);
    auto col = (e * Quaternion<T>::pure(basis[0], basis[1], basis[2]) * ec).vec();
    for (size_t i = 0; i < 3; ++i) d.R[i][j] = col[i] / N;
  }
  auto tv = (T(2) * pose.fq() * ec).vec();
  for (size_t i = 0; i < 3; ++i) d.t[i] = tv[i] / N;
  return d;
}

// Q = ||e m + 2 f - M e||^2 - N r2 = N (||R m + t - M||^2 - r2).
template <class T>
T sphere_condition(const StudyPoseT<T>& pose, const Vec3T<T>& M, const Vec3T<T>& m, const T& r2) {
  Quaternion<T> e = pose.eq();
  Quaternion<T> c = e * Quaternion<T>::pure(m[0], m[1], m[2]) + T(2) * pose.fq() - Quaternion<T>::pure(M[0], M[1], M[2]) * e;
  return c.norm2() - pose.norm() * r2;
}

// ---------------------------------------------------------------------------
// Symbolic designs

inline const std::array<std::string, 4>& e_names() {
  static const std::array<std::string, 4> n{"e0", "e1", "e2", "e3"};
  return n;
}
inline const std::array<std::string, 4>& f_names() {
  static const std::array<std::string, 4> n{"f0", "f1", "f2", "f3"};
  return n;
}
inline const std::array<std::string, 5>& radius_names() {
  static const std::array<std::string, 5> n{"r12", "r22", "r32", "r42", "r52"};
  return n;
}

inline MPoly N_poly() {
  MPoly n;
  for (const auto& v : e_names()) n = n + MPoly::var(v) * MPoly::var(v);
  return n;
}

inline MPoly S_poly() {
  MPoly s;
  for (size_t k = 0; k < 4; ++k) s = s + MPoly::var(e_names()[k]) * MPoly::var(f_names()[k]);
  return s;
}

// Point with polynomial coordinates (x, y, z) / den.
struct PointExpr {
  MPoly x, y, z;
  MPoly den{1};

  static PointExpr of(const Point3& p) { return {MPoly(p.x), MPoly(p.y), MPoly(p.z), MPoly(1)}; }
  static PointExpr planar(MPoly x, MPoly y, MPoly den = MPoly(1)) {
    return {std::move(x), std::move(y), MPoly(), std::move(den)};
  }
};

struct LegExpr {
  PointExpr M;
  PointExpr m;
  MPoly r2;
};

using DesignExpr = std::array<LegExpr, 5>;

// Canonical design quantities as polynomials: symbols or specialized values.
struct ParamExpr {
  MPoly A4, B4, A5, B5, mu1, mu2, mu3;

  static ParamExpr symbolic() {
    return {MPoly::var("A4"),  MPoly::var("B4"),  MPoly::var("A5"), MPoly::var("B5"),
            MPoly::var("mu1"), MPoly::var("mu2"), MPoly::var("mu3")};
  }
  static ParamExpr symbolic_base(const AffineMap2& A) {
    ParamExpr p = symbolic();
    p.mu1 = MPoly(A.mu1);
    p.mu2 = MPoly(A.mu2);
    p.mu3 = MPoly(A.mu3);
    return p;
  }
  static ParamExpr of(const BaseParams& b, const AffineMap2& A) {
    return {MPoly(b.A4), MPoly(b.B4), MPoly(b.A5), MPoly(b.B5), MPoly(A.mu1), MPoly(A.mu2), MPoly(A.mu3)};
  }

  MPoly P() const { return B4 * A5 - A4 * B5; }
  MPoly U1() const { return (B4 - B5) * P() * (P() - B4 + B5); }
  MPoly U2() const { return P() + B5; }
  MPoly U3() const { return P() - B4; }
  MPoly A() const { return A5 - A4 + MPoly(1); }
  MPoly B() const { return B4 - B5; }

  MPoly::Assignment values_of(const BaseParams& b, const AffineMap2& A) const {
    return {{"A4", b.A4}, {"B4", b.B4}, {"A5", b.A5}, {"B5", b.B5}, {"mu1", A.mu1}, {"mu2", A.mu2}, {"mu3", A.mu3}};
  }
};

inline std::array<MPoly, 5> radius_symbols() {
  std::array<MPoly, 5> r;
  for (size_t k = 0; k < 5; ++k) r[k] = MPoly::var(radius_names()[k]);
  return r;
}

namespace detail {

// Intersection of lines ab and cd for points with unit denominators,
// reduced to lowest terms.
inline PointExpr meet_expr(const PointExpr& a, const PointExpr& b, const PointExpr& c, const PointExpr& d) {
  MPoly ux = b.x - a.x, uy = b.y - a.y, vx = d.x - c.x, vy = d.y - c.y;
  MPoly den = ux * vy - uy * vx;
  if (den.is_zero()) throw DegeneratePlatform("parallel lines in symbolic intersection");
  MPoly s = (c.x - a.x) * vy - (c.y - a.y) * vx;
  MPoly x = a.x * den + s * ux, y = a.y * den + s * uy;
  MPoly g = gcd(gcd(x, y), den);
  if (!g.is_zero() && !g.is_constant()) {
    x = exact_quotient(x, g);
    y = exact_quotient(y, g);
    den = exact_quotient(den, g);
  }
  return PointExpr::planar(x, y, den);
}

}  // namespace detail

// Canonical base with the kappa_2 (or kappa_3) image platform.
inline DesignExpr canonical_design_expr(const ParamExpr& p, int kappa = 2,
                                        const std::array<MPoly, 5>& radii = radius_symbols()) {
  auto lin = [&](const MPoly& x, const MPoly& y) {
    return PointExpr::planar(p.mu1 * x + p.mu2 * y, p.mu3 * y);
  };
  std::array<PointExpr, 5> M{PointExpr::planar(MPoly(0), MPoly(0)), PointExpr::planar(MPoly(1), MPoly(0)),
                             PointExpr::planar(p.P(), MPoly(0), p.B4 - p.B5), PointExpr::planar(p.A4, p.B4),
                             PointExpr::planar(p.A5, p.B5)};
  std::array<PointExpr, 5> m;
  if (kappa == 2) {
    m[3] = lin(MPoly(0), MPoly(0));
    m[4] = lin(MPoly(1), MPoly(0));
    m[0] = lin(p.A4, p.B4);
    m[1] = lin(p.A5, p.B5);
    m[2] = PointExpr::planar(p.B4 * (p.A5 * p.mu1 + p.B5 * p.mu2), p.B4 * p.B5 * p.mu3, p.U2());
  } else if (kappa == 3) {
    m[4] = lin(MPoly(0), MPoly(0));
    m[3] = lin(MPoly(1), MPoly(0));
    m[1] = lin(p.A4, p.B4);
    m[0] = lin(p.A5, p.B5);
    m[2] = detail::meet_expr(m[0], m[3], m[1], m[4]);
  } else {
    throw std::invalid_argument("kappa must be 2 or 3");
  }
  DesignExpr d;
  for (size_t k = 0; k < 5; ++k) d[k] = {M[k], m[k], radii[k]};
  return d;
}

// Rational design; radii either symbolic (r12..r52) or the stored values.
inline DesignExpr design_expr(const PentapodDesign& design, bool symbolic_radii = true) {
  DesignExpr d;
  auto sym = radius_symbols();
  for (size_t k = 0; k < 5; ++k)
    d[k] = {PointExpr::of(design.base[k]), PointExpr::of(design.platform[k]),
            symbolic_radii ? sym[k] : MPoly(design.radii2[k])};
  return d;
}

inline Quaternion<MPoly> e_quaternion() {
  return {MPoly::var("e0"), MPoly::var("e1"), MPoly::var("e2"), MPoly::var("e3")};
}
inline Quaternion<MPoly> f_quaternion() {
  return {MPoly::var("f0"), MPoly::var("f1"), MPoly::var("f2"), MPoly::var("f3")};
}

// Denominator of a leg: product of its two anchor denominators.
inline MPoly leg_denominator(const LegExpr& leg) { return leg.M.den * leg.m.den; }

// Sphere condition with denominators cleared: D^2 Q for D = den(M) den(m).
inline MPoly sphere_condition(const LegExpr& leg) {
  Quaternion<MPoly> e = e_quaternion(), f = f_quaternion();
  MPoly D = leg_denominator(leg);
  auto m = Quaternion<MPoly>::pure(leg.m.x * leg.M.den, leg.m.y * leg.M.den, leg.m.z * leg.M.den);
  auto M = Quaternion<MPoly>::pure(leg.M.x * leg.m.den, leg.M.y * leg.m.den, leg.M.z * leg.m.den);
  Quaternion<MPoly> c = e * m + (MPoly(2) * D) * f - M * e;
  return c.norm2() - D * D * N_poly() * leg.r2;
}

// Numerator of Q_1 - Q_i (i in 2..5); affine-linear in f.
inline MPoly delta(const DesignExpr& d, int i) {
  if (i < 2 || i > 5) throw std::out_of_range("delta index must be in 2..5");
  const auto& l1 = d[0];
  const auto& li = d[static_cast<size_t>(i - 1)];
  MPoly D1 = leg_denominator(l1), Di = leg_denominator(li);
  return sphere_condition(l1) * Di * Di - sphere_condition(li) * D1 * D1;
}

inline int f_degree(const MPoly& p) {
  int deg = 0;
  for (const auto& [e, c] : p.terms()) {
    int s = 0;
    for (size_t k = 0; k < p.variables().size(); ++k)
      if (p.variables()[k].size() == 2 && p.variables()[k][0] == 'f') s += e[k];
    deg = std::max(deg, s);
  }
  return p.is_zero() ? -1 : deg;
}

// Weights of the f-free combination for the canonical kappa_2 design.
inline std::array<MPoly, 4> canonical_Ke_weights(const ParamExpr& p) {
  return {p.B4 * p.B5 * (p.B4 - p.B5) * p.P() * p.U2(), p.U3(), p.B5 * p.U1() * p.U2(), -p.B4 * p.U1() * p.U2()};
}

// Weights w2..w5 with sum w_i Delta_i free of f, from the affine dependency
// of the anchor differences, reduced by their common factor.
inline std::array<MPoly, 4> affine_dependency_weights(const DesignExpr& d) {
  // Rows: base x, base y, platform x, platform y; columns i = 2..5.
  std::array<std::array<MPoly, 4>, 4> A;
  for (int row = 0; row < 4; ++row) {
    auto coord = [&](const PointExpr& p) { return row % 2 == 0 ? p.x : p.y; };
    auto pick = [&](const LegExpr& l) -> const PointExpr& { return row < 2 ? l.M : l.m; };
    const PointExpr& p1 = pick(d[0]);
    MPoly L = p1.den;
    for (size_t i = 1; i < 5; ++i) L = L * pick(d[i]).den;
    for (size_t i = 1; i < 5; ++i) {
      const PointExpr& pi = pick(d[i]);
      // (p1 - pi) scaled by L: (x1 den_i - x_i den_1) * L / (den_1 den_i)
      MPoly num = coord(p1) * pi.den - coord(pi) * p1.den;
      MPoly scale(1);
      for (size_t j = 1; j < 5; ++j)
        if (j != i) scale = scale * pick(d[j]).den;
      A[static_cast<size_t>(row)][i - 1] = num * scale;
    }
  }
  // Null vector from 3x3 cofactors of three rows.
  const int row_sets[4][3] = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
  std::array<MPoly, 4> c;
  bool found = false;
  for (const auto& rs : row_sets) {
    for (size_t col = 0; col < 4; ++col) {
      PolyMatrix sub;
      for (int r : rs) {
        std::vector<MPoly> row;
        for (size_t k = 0; k < 4; ++k)
          if (k != col) row.push_back(A[static_cast<size_t>(r)][k]);
        sub.push_back(row);
      }
      MPoly minor = determinant(sub);
      c[col] = (col % 2 == 0) ? minor : -minor;
    }
    if (!(c[0].is_zero() && c[1].is_zero() && c[2].is_zero() && c[3].is_zero())) {
      found = true;
      break;
    }
  }
  if (!found) throw NotFFree("anchor differences have no one-dimensional affine dependency");
  for (size_t r = 0; r < 4; ++r) {
    MPoly s;
    for (size_t k = 0; k < 4; ++k) s = s + A[r][k] * c[k];
    if (!s.is_zero()) throw NotFFree("no f-free combination of the Delta_i exists");
  }
  // Delta_i carries D1^2 Di^2 (Q1 - Qi); convert raw weights accordingly.
  std::array<MPoly, 4> w;
  for (size_t i = 0; i < 4; ++i) {
    w[i] = c[i];
    for (size_t j = 0; j < 4; ++j)
      if (j != i) {
        MPoly Dj = leg_denominator(d[j + 1]);
        w[i] = w[i] * Dj * Dj;
      }
  }
  MPoly g = gcd(std::vector<MPoly>(w.begin(), w.end()));
  if (!g.is_constant()) {
    for (auto& x : w) x = exact_quotient(x, g);
  }
  // Unit leading coefficient on the first nonzero weight.
  for (const auto& x : w)
    if (!x.is_zero()) {
      GaussRational inv = x.leading_coefficient().inverse();
      for (auto& y : w) y = y.scaled(inv);
      break;
    }
  return w;
}

inline MPoly combine_deltas(const DesignExpr& d, const std::array<MPoly, 4>& w) {
  MPoly K;
  for (int i = 2; i <= 5; ++i) {
    const MPoly& wi = w[static_cast<size_t>(i - 2)];
    if (!wi.is_zero()) K = K + wi * delta(d, i);
  }
  return K;
}

// f-free quadric K_e = sum w_i Delta_i.
inline MPoly compute_Ke(const DesignExpr& d, const std::array<MPoly, 4>& w) {
  MPoly K = combine_deltas(d, w);
  if (f_degree(K) > 0) throw NotFFree("f terms survive in the Delta combination");
  return K;
}

inline MPoly compute_Ke(const DesignExpr& d) { return compute_Ke(d, affine_dependency_weights(d)); }

// K_e of the canonical kappa_2 design with the closed-form weights.
inline MPoly compute_Ke_canonical(const ParamExpr& p, const std::array<MPoly, 5>& radii = radius_symbols()) {
  return compute_Ke(canonical_design_expr(p, 2, radii), canonical_Ke_weights(p));
}

// Coefficient of e_i e_j in a quadratic form of the Euler parameters.
inline MPoly e_coefficient(const MPoly& K, int i, int j) {
  MPoly c = K.coefficient_of(e_names()[static_cast<size_t>(i)], i == j ? 2 : 1);
  if (i != j) c = c.coefficient_of(e_names()[static_cast<size_t>(j)], 1);
  for (int k = 0; k < 4; ++k)
    if (k != i && k != j) c = c.coefficient_of(e_names()[static_cast<size_t>(k)], 0);
  return c;
}

inline bool is_e_quadratic(const MPoly& K) {
  for (const auto& [e, c] : K.terms()) {
    int s = 0;
    for (size_t k = 0; k < K.variables().size(); ++k)
      if (K.variables()[k].size() == 2 && K.variables()[k][0] == 'e') s += e[k];
    if (s != 2) return false;
  }
  return !K.is_zero();
}

// ---------------------------------------------------------------------------
// Rank-drop quadric T

// f-coefficient rows (4 entries) of S, Delta_2..Delta_5.
inline std::array<std::array<MPoly, 4>, 5> f_coefficient_matrix(const DesignExpr& d) {
  std::array<std::array<MPoly, 4>, 5> rows;
  std::array<MPoly, 5> eqs{S_poly(), delta(d, 2), delta(d, 3), delta(d, 4), delta(d, 5)};
  for (size_t r = 0; r < 5; ++r)
    for (size_t k = 0; k < 4; ++k) {
      MPoly c = eqs[r].coefficient_of(f_names()[k], 1);
      for (size_t j = 0; j < 4; ++j)
        if (j != k) c = c.coefficient_of(f_names()[j], 0);
      rows[r][k] = c;
    }
  return rows;
}

// Removes the factor common to all e-coefficients (parameters only).
inline MPoly e_primitive_part(const MPoly& p) {
  std::vector<MPoly> coeffs{p};
  for (const auto& v : e_names()) {
    std::vector<MPoly> next;
    for (const auto& c : coeffs)
      for (const auto& part : c.coefficients(v))
        if (!part.is_zero()) next.push_back(part);
    coeffs = std::move(next);
  }
  MPoly g = gcd(coeffs);
  return g.is_zero() || g.is_constant() ? p : exact_quotient(p, g);
}

struct RankDropQuadric {
  MPoly T;  // normalized: leading coefficient 1
  MPoly eps01, eps02, eps13, eps23;
  std::vector<MPoly> minors;
};

// T from the 4x4 minors of the f-coefficient matrix: their gcd with the
// factors of N removed.
inline RankDropQuadric rank_drop_T(const DesignExpr& d) {
  auto rows = f_coefficient_matrix(d);
  RankDropQuadric out;
  for (size_t skip = 0; skip < 5; ++skip) {
    PolyMatrix m;
    for (size_t r = 0; r < 5; ++r)
      if (r != skip) m.emplace_back(rows[r].begin(), rows[r].end());
    out.minors.push_back(determinant(m));
  }
  MPoly g = gcd(out.minors);
  g = strip_factor(g, N_poly());
  out.T = e_primitive_part(g).monic();
  out.eps01 = e_coefficient(out.T, 0, 1);
  out.eps02 = e_coefficient(out.T, 0, 2);
  out.eps13 = e_coefficient(out.T, 1, 3);
  out.eps23 = e_coefficient(out.T, 2, 3);
  return out;
}

struct Epsilons {
  MPoly e01, e02, e13, e23;
};

inline Epsilons closed_form_epsilons(const ParamExpr& p) {
  MPoly A = p.A(), B = p.B();
  return {p.mu3 * (MPoly(1) + p.mu1) * B, p.mu1 * A * (p.mu3 + MPoly(1)) - p.mu2 * B,
          p.mu1 * A * (p.mu3 - MPoly(1)) + p.mu2 * B, p.mu3 * (MPoly(1) - p.mu1) * B};
}

inline MPoly T_form(const ParamExpr& p) {
  auto eps = closed_form_epsilons(p);
  MPoly e0 = MPoly::var("e0"), e1 = MPoly::var("e1"), e2 = MPoly::var("e2"), e3 = MPoly::var("e3");
  return eps.e01 * e0 * e1 + eps.e02 * e0 * e2 + eps.e13 * e1 * e3 + eps.e23 * e2 * e3;
}

// ---------------------------------------------------------------------------
// Degeneracy forms F1, F2

inline MPoly F1_form(const MPoly& A, const MPoly& B, const MPoly& mu1, const MPoly& mu2, const MPoly& mu3) {
  MPoly e1 = MPoly::var("e1"), e2 = MPoly::var("e2");
  return (B * B * mu2 - A * B * (mu1 + mu3)) * (e2 * e2 - e1 * e1) +
         (MPoly(2) * A * A * mu1 - MPoly(2) * B * B * mu3 - MPoly(2) * A * B * mu2) * e1 * e2;
}

inline MPoly F2_form(const MPoly& mu1, const MPoly& mu2, const MPoly& mu3) {
  MPoly e1 = MPoly::var("e1"), e2 = MPoly::var("e2"), one(1);
  return (one + mu1) * (mu3 - one) * e1 * e1 + (one + mu3) * (mu1 - one) * e2 * e2 - MPoly(2) * mu2 * e1 * e2;
}

struct DegeneracyForms {
  MPoly F1, F2;
};

inline DegeneracyForms f1_f2(const ParamExpr& p) {
  return {F1_form(p.A(), p.B(), p.mu1, p.mu2, p.mu3), F2_form(p.mu1, p.mu2, p.mu3)};
}

// Symbolic argument that F1 cannot vanish identically for (A, B) != 0.
struct F1Analysis {
  MPoly coeff_e2sq;      // coefficient of e2^2
  MPoly coeff_e1e2;      // coefficient of e1 e2
  MPoly mu2_solution_num;  // mu2 = num / den
  MPoly mu2_solution_den;
  MPoly reduced;          // e1e2 coefficient after substitution, cleared of B
  bool reduced_is_mu3_times_definite = false;  // reduced = c * mu3 * (A^2 + B^2)
  bool B_zero_branch_forces_A_zero = false;
};

inline F1Analysis analyze_F1() {
  MPoly A = MPoly::var("A"), B = MPoly::var("B"), mu1 = MPoly::var("mu1"), mu2 = MPoly::var("mu2"),
        mu3 = MPoly::var("mu3");
  MPoly F1 = F1_form(A, B, mu1, mu2, mu3);
  F1Analysis r;
  r.coeff_e2sq = e_coefficient(F1, 2, 2);
  r.coeff_e1e2 = e_coefficient(F1, 1, 2);
  // coeff_e2sq is linear in mu2: a mu2 + b = 0.
  MPoly a = r.coeff_e2sq.coefficient_of("mu2", 1), b = r.coeff_e2sq.coefficient_of("mu2", 0);
  r.mu2_solution_num = -b;
  r.mu2_solution_den = a;
  // c(mu2) = alpha + gamma mu2, multiplied through by a.
  MPoly alpha = r.coeff_e1e2.coefficient_of("mu2", 0), gamma = r.coeff_e1e2.coefficient_of("mu2", 1);
  MPoly cleared = alpha * a + gamma * (-b);
  // Remove the powers of B contributed by a = B^2.
  r.reduced = strip_factor(cleared, B);
  MPoly definite = A * A + B * B;
  if (auto q = divide_exact(r.reduced, mu3)) {
    if (auto k = divide_exact(*q, definite)) r.reduced_is_mu3_times_definite = k->is_constant() && !k->is_zero();
  }
  // B = 0: the e2^2 coefficient vanishes, the e1e2 one becomes 2 A^2 mu1.
  MPoly c0 = r.coeff_e1e2.specialize({{"B", 0}});
  r.B_zero_branch_forces_A_zero = c0 == MPoly(2) * A * A * mu1;
  return r;
}

// ---------------------------------------------------------------------------
// Tangency ansatz W = K_e + nu N + (nu0 e0 + ... + nu3 e3)^2

struct AnsatzReport {
  std::vector<std::string> steps;
  bool contradiction = false;
};

namespace detail {

inline std::string wname(int i, int j) {
  std::array<int, 4> ex{0, 0, 0, 0};
  ex[static_cast<size_t>(i)]++;
  ex[static_cast<size_t>(j)]++;
  return "W_" + std::to_string(ex[0]) + std::to_string(ex[1]) + std::to_string(ex[2]) + std::to_string(ex[3]);
}

// Exact solve for a constant quadratic form: K + nu I must have rank one.
inline std::optional<std::pair<Rational, std::array<GaussRational, 4>>> solve_constant_ansatz(const MPoly& K) {
  std::array<std::array<GaussRational, 4>, 4> S;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      GaussRational c = e_coefficient(K, std::min(i, j), std::max(i, j)).constant_value();
      S[static_cast<size_t>(i)][static_cast<size_t>(j)] = i == j ? c : c / GaussRational(2);
    }
  MPoly nu = MPoly::var("nu");
  std::vector<MPoly> minors;
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      for (int c = 0; c < 4; ++c)
        for (int d = c + 1; d < 4; ++d) {
          auto ent = [&](int i, int j) {
            MPoly v(S[static_cast<size_t>(i)][static_cast<size_t>(j)]);
            return i == j ? v + nu : v;
          };
          minors.push_back(ent(a, c) * ent(b, d) - ent(a, d) * ent(b, c));
        }
  MPoly g = gcd(minors);
  if (g.is_zero() || g.is_constant()) return std::nullopt;
  // g = (nu - root)^k for a rank-one drop of a symmetric matrix.
  int k = g.degree("nu");
  GaussRational root = -g.coefficient_of("nu", k - 1).constant_value() / GaussRational(k);
  if (!root.is_real()) return std::nullopt;
  std::array<GaussRational, 4> v;
  bool nonzero = false;
  for (size_t i = 0; i < 4; ++i) {
    GaussRational d = S[i][i] + root.re;
    if (!d.is_zero()) nonzero = true;
    v[i] = -d;  // nu_i^2
  }
  if (!nonzero) return std::nullopt;
  return std::make_pair(root.re, v);
}

}  // namespace detail

// Follows the two branches forced by the mixed coefficients; throws
// AnsatzSolvable when a nonzero double plane exists.
inline AnsatzReport tangency_ansatz(const MPoly& Ke) {
  AnsatzReport rep;
  bool constant = true;
  for (const auto& v : Ke.variables())
    if (!(v.size() == 2 && v[0] == 'e')) constant = false;
  if (constant) {
    if (auto sol = detail::solve_constant_ansatz(Ke)) {
      std::string msg = "nu = " + to_string(sol->first) + ", nu_i^2 = (";
      for (size_t i = 0; i < 4; ++i) msg += (i ? ", " : "") + to_string(sol->second[i]);
      throw AnsatzSolvable("tangent double plane exists: " + msg + ")");
    }
    rep.steps.push_back("constant form: K_e + nu N never has rank one");
    rep.contradiction = true;
    return rep;
  }
  auto K = [&](int i, int j) { return e_coefficient(Ke, i, j); };
  const int mixed[4][2] = {{0, 1}, {0, 2}, {1, 3}, {2, 3}};
  for (const auto& ij : mixed) {
    if (!K(ij[0], ij[1]).is_zero()) {
      rep.steps.push_back(detail::wname(ij[0], ij[1]) + " has a K_e contribution; branch split does not apply");
      return rep;
    }
    rep.steps.push_back(detail::wname(ij[0], ij[1]) + " = 2 nu" + std::to_string(ij[0]) + " nu" + std::to_string(ij[1]));
  }
  rep.steps.push_back("=> nu0 = nu3 = 0 or nu1 = nu2 = 0");
  struct Branch {
    const char* name;
    int free_a, free_b;  // nu's left free
    int a_hi, a_lo, b_hi, b_lo;  // differences W(hi) - W(lo) = nu_free^2
  };
  const Branch branches[2] = {{"nu0 = nu3 = 0", 1, 2, 1, 0, 2, 3}, {"nu1 = nu2 = 0", 0, 3, 0, 1, 3, 2}};
  bool all = true;
  for (const auto& b : branches) {
    MPoly da = K(b.a_hi, b.a_hi) - K(b.a_lo, b.a_lo), db = K(b.b_hi, b.b_hi) - K(b.b_lo, b.b_lo);
    bool forced = da.is_zero() && db.is_zero();
    rep.steps.push_back(std::string(b.name) + ": " + detail::wname(b.a_hi, b.a_hi) + " - " +
                        detail::wname(b.a_lo, b.a_lo) + " = nu" + std::to_string(b.free_a) + "^2, " +
                        detail::wname(b.b_hi, b.b_hi) + " - " + detail::wname(b.b_lo, b.b_lo) + " = nu" +
                        std::to_string(b.free_b) + "^2" +
                        (forced ? " => all nu_i = 0" : " (K_e diagonal differences nonzero)"));
    all = all && forced;
  }
  if (all) {
    rep.steps.push_back("both branches force nu0 = nu1 = nu2 = nu3 = 0: no double plane");
    rep.contradiction = true;
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Resultant chain

struct ChainReport {
  MPoly R_Ke, R_T, R_N;
  MPoly R_KeT, R_KeN, R_TN;
  MPoly gcd;
};

namespace detail {

// Resultant that tolerates zero or var-free inputs.
inline MPoly safe_resultant(const MPoly& p, const MPoly& q, const std::string& var) {
  if (p.is_zero() || q.is_zero()) return MPoly();
  int dp = p.degree(var), dq = q.degree(var);
  if (dp == 0 && dq == 0) return MPoly(1);
  if (dp == 0) return pow(p, static_cast<unsigned>(dq));
  if (dq == 0) return pow(q, static_cast<unsigned>(dp));
  return resultant(p, q, var);
}

}  // namespace detail

inline ChainReport resultant_chain(const MPoly& Ke, const MPoly& T, const MPoly& N) {
  ChainReport r;
  r.R_Ke = detail::safe_resultant(T, N, "e0");
  r.R_T = detail::safe_resultant(Ke, N, "e0");
  r.R_N = detail::safe_resultant(Ke, T, "e0");
  r.R_KeT = detail::safe_resultant(r.R_Ke, r.R_T, "e3");
  r.R_KeN = detail::safe_resultant(r.R_Ke, r.R_N, "e3");
  r.R_TN = detail::safe_resultant(r.R_T, r.R_N, "e3");
  r.gcd = gcd(std::vector<MPoly>{r.R_KeT, r.R_KeN, r.R_TN});
  return r;
}

struct FactorReport {
  int F1_multiplicity = 0;
  int F2_multiplicity = 0;
  MPoly cofactor;
  bool cofactor_constant = false;
};

inline FactorReport factor_report(const MPoly& g, const MPoly& F1, const MPoly& F2) {
  FactorReport f;
  MPoly rest = g;
  if (!F1.is_zero() && !F1.is_constant()) rest = strip_factor(rest, F1.monic(), &f.F1_multiplicity);
  if (!F2.is_zero() && !F2.is_constant()) rest = strip_factor(rest, F2.monic(), &f.F2_multiplicity);
  f.cofactor = rest;
  f.cofactor_constant = rest.is_constant() && !rest.is_zero();
  return f;
}

}  // namespace duporcq
