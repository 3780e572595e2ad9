#pragma once

#include <Eigen/Dense>
#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "duporcq/geometry.hpp"
#include "duporcq/study.hpp"

namespace duporcq {

// ---------------------------------------------------------------------------
// Radius conditions

// K_e|_{e0=0} = (e1^2+e2^2+e3^2) G with G free of e.
inline MPoly derive_G(const MPoly& Ke) {
  MPoly sliced = Ke.specialize({{"e0", 0}});
  MPoly sphere = MPoly::var("e1") * MPoly::var("e1") + MPoly::var("e2") * MPoly::var("e2") +
                 MPoly::var("e3") * MPoly::var("e3");
  MPoly G = exact_quotient(sliced, sphere);
  for (const auto& v : e_names())
    if (G.has_var(v)) throw NotDivisible("quotient of K_e by e1^2+e2^2+e3^2 still depends on " + v);
  return G;
}

struct RadiiSolution {
  std::array<Rational, 5> r2;
};

// r4^2 = r1^2, r5^2 = r2^2 and r3^2 from G = 0.
inline RadiiSolution motion_radii(const PentapodDesign& design, const Rational& r1_2, const Rational& r2_2) {
  MPoly Ke = compute_Ke(design_expr(design, true));
  MPoly G = derive_G(Ke);
  MPoly::Assignment a{{"r12", r1_2}, {"r42", r1_2}, {"r22", r2_2}, {"r52", r2_2}};
  MPoly g = G.specialize(a);
  MPoly g3 = g.coefficient_of("r32", 1), g0 = g.coefficient_of("r32", 0);
  if (g3.is_zero() || !g3.is_constant() || !g0.is_constant())
    throw DegenerateBase("G cannot be solved for r3^2");
  Rational r3 = (-g0.constant_value() / g3.constant_value()).re;
  // Same value from K_e at distinct orientations.
  const std::array<std::array<long, 3>, 3> probes{{{1, 0, 0}, {0, 1, 2}, {3, -1, 1}}};
  for (const auto& e : probes) {
    MPoly k = Ke.specialize({{"e0", 0}, {"e1", e[0]}, {"e2", e[1]}, {"e3", e[2]}}).specialize(a);
    MPoly k3 = k.coefficient_of("r32", 1), k0 = k.coefficient_of("r32", 0);
    if (!k3.is_zero() && (-k0.constant_value() / k3.constant_value()).re != r3)
      throw NotDivisible("r3^2 depends on the orientation");
  }
  if (sgn(r3) < 0) throw Unrealizable("r3^2 = " + to_string(r3) + " < 0");
  return {{r1_2, r2_2, r3, r1_2, r2_2}};
}

// Exact check of given radii against the motion conditions.
inline void validate_motion_radii(const PentapodDesign& design, const std::array<Rational, 5>& r2) {
  if (r2[0] != r2[3]) throw InconsistentSystem("r1^2 != r4^2");
  if (r2[1] != r2[4]) throw InconsistentSystem("r2^2 != r5^2");
  auto sol = motion_radii(design, r2[0], r2[1]);
  if (sol.r2[2] != r2[2]) throw InconsistentSystem("r3^2 does not satisfy G = 0");
}

struct HCoefficients {
  MPoly h1, h2;
};

inline HCoefficients h_coefficients(const ParamExpr& p, const std::array<MPoly, 5>& r = radius_symbols()) {
  MPoly d25 = r[1] - r[4], d41 = r[3] - r[0];
  return {d25 * p.A4 + d41 * (p.A5 - MPoly(1)), d25 * p.B4 + d41 * p.B5};
}

// Determinant of h1 = h2 = 0 as a linear system in (r2^2 - r5^2, r4^2 - r1^2).
inline MPoly h_system_determinant(const ParamExpr& p) { return p.A4 * p.B5 - (p.A5 - MPoly(1)) * p.B4; }

// Numerators of Delta_3 and Delta_5 after solving S = Delta_2 = Delta_4 = 0
// for (f0, f1, f3) on the slice e0 = 0.
struct HDerivation {
  MPoly det;
  MPoly delta3_numerator;
  MPoly delta5_numerator;
};

inline HDerivation h_derivation(const DesignExpr& d) {
  MPoly::Assignment e0{{"e0", 0}};
  std::array<MPoly, 3> eqs{S_poly().specialize(e0), delta(d, 2).specialize(e0), delta(d, 4).specialize(e0)};
  const std::array<std::string, 3> solve{"f0", "f1", "f3"};
  auto split = [&](const MPoly& p) {
    std::array<MPoly, 3> coeff;
    MPoly rest = p;
    for (size_t k = 0; k < 3; ++k) {
      coeff[k] = p.coefficient_of(solve[k], 1);
      rest = rest.specialize({{solve[k], 0}});
    }
    return std::make_pair(coeff, rest);
  };
  PolyMatrix M(3, std::vector<MPoly>(3));
  std::array<MPoly, 3> rhs;
  for (size_t r = 0; r < 3; ++r) {
    auto [c, rest] = split(eqs[r]);
    for (size_t k = 0; k < 3; ++k) M[r][k] = c[k];
    rhs[r] = -rest;
  }
  HDerivation out;
  out.det = determinant(M);
  std::array<MPoly, 3> num;
  for (size_t k = 0; k < 3; ++k) {
    PolyMatrix Mk = M;
    for (size_t r = 0; r < 3; ++r) Mk[r][k] = rhs[r];
    num[k] = determinant(Mk);
  }
  auto substitute = [&](const MPoly& p) {
    auto [c, rest] = split(p.specialize(e0));
    MPoly s = rest * out.det;
    for (size_t k = 0; k < 3; ++k) s = s + c[k] * num[k];
    return s;
  };
  out.delta3_numerator = substitute(delta(d, 3));
  out.delta5_numerator = substitute(delta(d, 5));
  return out;
}

// Replaces r3^2 by its solution of G = 0 in p (linear in r3^2), cleared
// of the denominator g3.
inline MPoly eliminate_r3(const MPoly& p, const MPoly& G) {
  MPoly g3 = G.coefficient_of("r32", 1), g0 = G.coefficient_of("r32", 0);
  if (g3.is_zero()) throw DegenerateBase("G does not involve r3^2");
  return p.coefficient_of("r32", 0) * g3 - p.coefficient_of("r32", 1) * g0;
}

// ---------------------------------------------------------------------------
// Numeric sampler on the slice e0 = 0

using Vec3 = Eigen::Vector3d;

struct NumericLeg {
  Vec3 M, m;
  double r2 = 0;
};

inline Vec3 to_vec(const Point3& p) { return {to_double(p.x), to_double(p.y), to_double(p.z)}; }

inline std::vector<NumericLeg> numeric_legs(const PentapodDesign& d, const std::array<Rational, 5>& r2) {
  std::vector<NumericLeg> legs;
  for (size_t k = 0; k < 5; ++k) legs.push_back({to_vec(d.base[k]), to_vec(d.platform[k]), to_double(r2[k])});
  return legs;
}

inline double leg_residual(const StudyPose& pose, const NumericLeg& leg) {
  auto D = displacement(pose);
  Vec3T<double> p = D.apply({leg.m.x(), leg.m.y(), leg.m.z()});
  Vec3 d(p[0] - leg.M.x(), p[1] - leg.M.y(), p[2] - leg.M.z());
  return d.squaredNorm() - leg.r2;
}

struct MotionSample {
  double t1 = 0, t2 = 0;  // polar and azimuthal angle of (e1, e2, e3)
  StudyPose pose;
  std::vector<double> leg_residuals;
  double f0abs = 0;
  int fiber_dimension = 0;  // dimension of the affine solution set in f
};

struct SamplerOptions {
  double tol_rows = 1e-9;
  double tol_rank = 1e-9;
};

// Pose with e = (0, e1, e2, e3) normalized. Solves the affine system S and
// Q1 - Qi = 0 (i = 2..5) in f and intersects its solution set with leg 1's
// sphere; the root closest to `hint` (or to the origin) is returned.
inline MotionSample sample_pose(const std::vector<NumericLeg>& legs, const Vec3& dir,
                                const std::optional<Eigen::Vector4d>& hint = std::nullopt,
                                const SamplerOptions& opt = {}) {
  if (dir.norm() == 0) throw std::invalid_argument("orientation (e1, e2, e3) must be nonzero");
  Vec3 u = dir.normalized();
  Quaternion<double> e{0, u.x(), u.y(), u.z()};
  auto qpure = [](const Vec3& v) { return Quaternion<double>::pure(v.x(), v.y(), v.z()); };
  auto to4 = [](const Quaternion<double>& q) { return Eigen::Vector4d(q.w, q.x, q.y, q.z); };
  std::vector<Eigen::Vector4d> a;
  for (const auto& leg : legs) a.push_back(to4(e * qpure(leg.m) - qpure(leg.M) * e));

  Eigen::Matrix<double, 5, 4> A;
  Eigen::Matrix<double, 5, 1> b;
  A.row(0) = to4(e).transpose();
  b(0) = 0;
  for (int i = 1; i < 5; ++i) {
    auto ii = static_cast<size_t>(i);
    A.row(i) = 4 * (a[0] - a[ii]).transpose();
    b(i) = legs[0].r2 - legs[ii].r2 - a[0].squaredNorm() + a[ii].squaredNorm();
  }
  for (int i = 0; i < 5; ++i) {
    double n = A.row(i).norm();
    if (n > 0) {
      A.row(i) /= n;
      b(i) /= n;
    }
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 5, 4>> svd(A, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const auto& s = svd.singularValues();
  int rank = 0;
  for (int k = 0; k < 4; ++k)
    if (s(k) > opt.tol_rank * s(0)) ++rank;
  Eigen::Vector4d fp = Eigen::Vector4d::Zero();
  for (int k = 0; k < rank; ++k) fp += (svd.matrixU().col(k).dot(b) / s(k)) * svd.matrixV().col(k);
  Eigen::Matrix<double, 5, 1> res = A * fp - b;
  double scale = 1 + b.cwiseAbs().maxCoeff() + fp.norm();
  for (int i = 0; i < 5; ++i)
    if (std::abs(res(i)) > opt.tol_rows * scale)
      throw InconsistentSystem("row " + std::to_string(i) + " residual " + std::to_string(res(i)));

  Eigen::Vector4d f = fp;
  int dim = 4 - rank;
  if (dim > 0) {
    Eigen::Matrix<double, 4, Eigen::Dynamic> K = svd.matrixV().rightCols(dim);
    Eigen::Vector4d c = -a[0] / 2;
    Eigen::Vector4d p0 = fp + K * (K.transpose() * (c - fp));
    double rho2 = legs[0].r2 / 4 - (c - p0).squaredNorm();
    if (rho2 < -opt.tol_rows * (1 + legs[0].r2)) throw NoRealPose("leg 1 sphere misses the solution set");
    double rho = std::sqrt(std::max(rho2, 0.0));
    Eigen::Vector4d target = hint.value_or(Eigen::Vector4d::Zero());
    Eigen::VectorXd w = K.transpose() * (target - p0);
    if (w.norm() < 1e-14) w = Eigen::VectorXd::Unit(dim, 0);
    f = p0 + rho * (K * w.normalized());
    if (dim == 1) {
      Eigen::Vector4d other = p0 - rho * (K * w.normalized());
      if ((other - target).norm() < (f - target).norm()) f = other;
    }
  }
  MotionSample out;
  out.pose.e = {0, u.x(), u.y(), u.z()};
  out.pose.f = {f(0), f(1), f(2), f(3)};
  out.f0abs = std::abs(f(0));
  out.fiber_dimension = dim;
  out.t1 = std::acos(std::clamp(u.z(), -1.0, 1.0));
  out.t2 = std::atan2(u.y(), u.x());
  for (const auto& leg : legs) out.leg_residuals.push_back(leg_residual(out.pose, leg));
  return out;
}

// Spherical Fibonacci points on the upper hemisphere of (e1, e2, e3).
inline std::vector<Vec3> fibonacci_hemisphere(int count) {
  std::vector<Vec3> pts;
  const double golden = std::numbers::pi * (3 - std::sqrt(5.0));
  for (int k = 0; k < count; ++k) {
    double z = 1 - (k + 0.5) / count;
    double r = std::sqrt(std::max(0.0, 1 - z * z));
    double phi = golden * k;
    pts.emplace_back(r * std::cos(phi), r * std::sin(phi), z);
  }
  return pts;
}

struct SixthLeg {
  Vec3 M, m;
  std::optional<double> r2;  // taken from the reference sample when absent
};

struct SelfMotionReport {
  std::vector<MotionSample> samples;
  std::vector<double> sixth_residuals;
  double sixth_r2 = 0;
  int skipped = 0;
  double max_residual = 0;  // over the five legs, relative to 1 + max r^2
  double max_sixth_residual = 0;
  double max_f0 = 0;
  double tangent_angle = 0;  // smallest principal angle of the tangent witness
  std::vector<int> fiber_dimensions;
  std::vector<std::string> failures;

  bool ok(double tol_leg, double tol_f0) const {
    return failures.empty() && !samples.empty() && max_residual <= tol_leg && max_f0 <= tol_f0 &&
           max_sixth_residual <= tol_leg;
  }
};

namespace detail {

inline Eigen::Matrix<double, 8, 1> pose_vector(const MotionSample& s) {
  Eigen::Matrix<double, 8, 1> v;
  for (size_t k = 0; k < 4; ++k) {
    v(static_cast<int>(k)) = s.pose.e[k];
    v(static_cast<int>(k) + 4) = s.pose.f[k];
  }
  return v;
}

// Angle between two finite-difference tangents at the orientation u.
inline double tangent_angle(const std::vector<NumericLeg>& legs, const MotionSample& at, double h = 1e-5) {
  Vec3 u(at.pose.e[1], at.pose.e[2], at.pose.e[3]);
  Vec3 a = u.unitOrthogonal(), b = u.cross(a);
  Eigen::Vector4d hint(at.pose.f[0], at.pose.f[1], at.pose.f[2], at.pose.f[3]);
  auto tangent = [&](const Vec3& d) -> Eigen::Matrix<double, 8, 1> {
    return (pose_vector(sample_pose(legs, u + h * d, hint)) - pose_vector(sample_pose(legs, u - h * d, hint))) / (2 * h);
  };
  auto ta = tangent(a), tb = tangent(b);
  double c = std::abs(ta.dot(tb)) / (ta.norm() * tb.norm());
  return std::acos(std::clamp(c, 0.0, 1.0));
}

}  // namespace detail

// n samples: the reference orientation (0, 0, 1) followed by hemisphere
// points; orientations without a real pose are skipped and counted.
inline SelfMotionReport verify_selfmotion(const PentapodDesign& design, const std::array<Rational, 5>& radii2, int n,
                                          const std::optional<SixthLeg>& sixth = std::nullopt) {
  if (n < 1) throw std::invalid_argument("n must be at least 1");
  auto legs = numeric_legs(design, radii2);
  double rmax = 0;
  for (const auto& l : legs) rmax = std::max(rmax, l.r2);
  SelfMotionReport rep;
  auto accept = [&](const Vec3& dir, int index) {
    try {
      MotionSample s = sample_pose(legs, dir);
      rep.samples.push_back(s);
      return true;
    } catch (const NoRealPose&) {
      if (index == 0) rep.failures.push_back("sample 0: no real pose at the reference orientation");
      ++rep.skipped;
    } catch (const Error& ex) {
      rep.failures.push_back("sample " + std::to_string(index) + ": " + ex.what());
    }
    return false;
  };
  accept(Vec3(0, 0, 1), 0);
  int wanted = n - 1, pool = wanted;
  while (wanted > 0 && rep.failures.empty()) {
    auto before = rep.samples.size();
    int skipped_before = rep.skipped;
    auto pts = fibonacci_hemisphere(pool);
    int got = 0;
    for (size_t k = 0; k < pts.size() && got < wanted && rep.failures.empty(); ++k)
      if (accept(pts[k], static_cast<int>(k) + 1)) ++got;
    if (got == wanted || pool > 20 * n || !rep.failures.empty()) break;
    rep.samples.resize(before);
    rep.skipped = skipped_before;
    pool += wanted - got + 1;
  }
  for (const auto& s : rep.samples) {
    for (double r : s.leg_residuals) rep.max_residual = std::max(rep.max_residual, std::abs(r) / (1 + rmax));
    rep.max_f0 = std::max(rep.max_f0, s.f0abs);
    rep.fiber_dimensions.push_back(s.fiber_dimension);
  }
  if (sixth && !rep.samples.empty()) {
    NumericLeg l6{sixth->M, sixth->m, 0};
    rep.sixth_r2 = sixth->r2 ? *sixth->r2 : leg_residual(rep.samples.front().pose, l6);
    l6.r2 = rep.sixth_r2;
    for (const auto& s : rep.samples) {
      double r = leg_residual(s.pose, l6);
      rep.sixth_residuals.push_back(r);
      rep.max_sixth_residual = std::max(rep.max_sixth_residual, std::abs(r) / (1 + std::max(rmax, rep.sixth_r2)));
    }
  }
  if (rep.samples.size() > 2) {
    try {
      rep.tangent_angle = detail::tangent_angle(legs, rep.samples[rep.samples.size() / 2]);
    } catch (const Error& ex) {
      rep.failures.push_back(std::string("tangent witness: ") + ex.what());
    }
  }
  return rep;
}

// ---------------------------------------------------------------------------
// Translational sub-motion at e = (0:0:0:1)

struct PointQ {
  Rational x, y, z;

  friend PointQ operator-(const PointQ& a, const PointQ& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend PointQ operator+(const PointQ& a, const PointQ& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend PointQ operator*(const Rational& s, const PointQ& a) { return {s * a.x, s * a.y, s * a.z}; }
  Rational dot(const PointQ& o) const { return x * o.x + y * o.y + z * o.z; }
  bool is_zero() const { return sgn(x) == 0 && sgn(y) == 0 && sgn(z) == 0; }
  bool parallel_to(const PointQ& o) const {
    return sgn(y * o.z - z * o.y) == 0 && sgn(z * o.x - x * o.z) == 0 && sgn(x * o.y - y * o.x) == 0;
  }
  Vec3 to_vec() const { return {to_double(x), to_double(y), to_double(z)}; }
};

struct TranslationalSubmotion {
  std::array<PointQ, 5> differences;  // (M_i - R m_i) - (M_1 - R m_1)
  PointQ direction;
  PointQ center;
  Rational radius2;
  double max_residual = 0;
  double max_plane_offset = 0;
};

inline TranslationalSubmotion translational_submotion(const PentapodDesign& d, const std::array<Rational, 5>& r2,
                                                      int samples = 24) {
  // Half-turn about the z-axis: R (x, y, z) = (-x, -y, z).
  std::array<PointQ, 5> c;
  for (size_t k = 0; k < 5; ++k) {
    const auto& M = d.base[k];
    const auto& m = d.platform[k];
    c[k] = {M.x + m.x, M.y + m.y, M.z - m.z};
  }
  TranslationalSubmotion out;
  std::optional<PointQ> u;
  for (size_t k = 0; k < 5; ++k) {
    out.differences[k] = c[k] - c[0];
    if (out.differences[k].is_zero()) continue;
    if (!u) u = out.differences[k];
    else if (!u->parallel_to(out.differences[k])) throw RankTooHigh("difference vectors have rank 2");
  }
  if (!u) throw RankTooHigh("all difference vectors vanish");
  out.direction = *u;
  Rational uu = u->dot(*u);
  // <t - c1, u> = (r1^2 - ri^2 + li^2 |u|^2) / (2 li) for every leg with li != 0.
  std::optional<Rational> c0;
  for (size_t k = 1; k < 5; ++k) {
    Rational l = out.differences[k].dot(*u) / uu;
    if (sgn(l) == 0) {
      if (r2[k] != r2[0]) throw InconsistentSystem("coincident sphere centers with different radii");
      continue;
    }
    Rational v = (r2[0] - r2[k] + l * l * uu) / (2 * l);
    if (c0 && *c0 != v) throw InconsistentSystem("spheres do not share a circle");
    c0 = v;
  }
  if (!c0) throw RankTooHigh("sphere centers coincide");
  out.center = c[0] + (*c0 / uu) * *u;
  out.radius2 = r2[0] - *c0 * *c0 / uu;
  if (sgn(out.radius2) < 0) throw NoRealPose("translation circle has negative squared radius");

  Vec3 uv = u->to_vec().normalized(), a = uv.unitOrthogonal(), b = uv.cross(a);
  Vec3 t0 = out.center.to_vec();
  double rho = std::sqrt(to_double(out.radius2));
  auto legs = numeric_legs(d, r2);
  double rmax = 0;
  for (const auto& l : legs) rmax = std::max(rmax, l.r2);
  for (int k = 0; k < samples; ++k) {
    double th = 2 * std::numbers::pi * k / samples;
    Vec3 t = t0 + rho * (std::cos(th) * a + std::sin(th) * b);
    // f = t e / 2 with e = k.
    StudyPose pose{{0, 0, 0, 1}, {0, 0, 0, 0}};
    auto f = 0.5 * Quaternion<double>::pure(t.x(), t.y(), t.z()) * pose.eq();
    pose.f = {f.w, f.x, f.y, f.z};
    for (const auto& l : legs) out.max_residual = std::max(out.max_residual, std::abs(leg_residual(pose, l)) / (1 + rmax));
    out.max_plane_offset = std::max(out.max_plane_offset, std::abs((t - t0).dot(uv)));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Similarity bond

struct SimilarityBond {
  PlanarPoint m3, m3p, m3pp;  // platform: m3, m3', m3''
  PlanarPoint M3, M3p, M3pp;  // base
  PlanarPoint g, G;           // directions
  bool platform_collinear = false;
  bool base_collinear = false;
  bool parallel = false;
};

namespace detail {

// The two collinear triples through anchor 3 (index 2), as index pairs.
inline std::vector<std::pair<size_t, size_t>> triples_through_three(const Tuple5& P) {
  std::vector<std::pair<size_t, size_t>> out;
  for (size_t j = 0; j < 5; ++j)
    for (size_t k = j + 1; k < 5; ++k)
      if (j != 2 && k != 2 && collinear(P[j], P[k], P[2])) out.emplace_back(j, k);
  return out;
}

// Transfers the ratio of X3 on XjXk to the corresponding points of Y.
inline std::vector<PlanarPoint> transfer(const Tuple5& X, const Tuple5& Y) {
  std::vector<PlanarPoint> out;
  for (auto [j, k] : triples_through_three(X)) {
    Rational r = tv_ratio(X[j], X[k], X[2]);
    out.push_back(Y[j] + r * (Y[k] - Y[j]));
  }
  return out;
}

}  // namespace detail

inline SimilarityBond similarity_bond_direction(const PentapodDesign& d) {
  Tuple5 M = d.planar_base(), m = d.planar_platform();
  auto pm = detail::transfer(M, m);  // platform points from base triples
  auto pM = detail::transfer(m, M);  // base points from platform triples
  if (pm.size() != 2 || pM.size() != 2)
    throw ConstructionDegenerate("anchor 3 must lie on exactly two collinear triples in base and platform");
  SimilarityBond b;
  b.m3 = m[2];
  b.m3p = pm[0];
  b.m3pp = pm[1];
  b.M3 = M[2];
  b.M3p = pM[0];
  b.M3pp = pM[1];
  b.g = b.m3p - b.m3pp;
  b.G = b.M3p - b.M3pp;
  if (b.g == PlanarPoint{} || b.G == PlanarPoint{}) throw ConstructionDegenerate("constructed points coincide");
  b.platform_collinear = collinear(b.m3, b.m3p, b.m3pp);
  b.base_collinear = collinear(b.M3, b.M3p, b.M3pp);
  b.parallel = parallel(b.g, b.G);
  return b;
}

// ---------------------------------------------------------------------------
// Projected bonds: the slice e0 = 0 meets N = 0 in a conic without real points.

struct ProjectedBonds {
  std::array<MPoly, 4> parametrization;  // (e0, e1, e2, e3) in t
  bool on_exceptional_quadric = false;   // N o parametrization == 0
  std::vector<std::array<GaussRational, 4>> witnesses;
};

inline ProjectedBonds projected_bonds() {
  ProjectedBonds b;
  MPoly t = MPoly::var("t"), one(1), i(GaussRational::I());
  b.parametrization = {MPoly(), MPoly(2) * t, one - t * t, i * (one + t * t)};
  MPoly n;
  for (const auto& c : b.parametrization) n = n + c * c;
  b.on_exceptional_quadric = n.is_zero();
  b.witnesses.push_back({GaussRational(0), GaussRational(1), GaussRational::I(), GaussRational(0)});
  for (long k : {0L, 1L, 2L}) {
    std::array<GaussRational, 4> w;
    for (size_t c = 0; c < 4; ++c)
      w[c] = b.parametrization[c].is_zero() ? GaussRational(0)
                                           : b.parametrization[c].specialize({{"t", k}}).constant_value();
    b.witnesses.push_back(w);
  }
  return b;
}

// ---------------------------------------------------------------------------
// Architectural singularity

struct NumericHexapod {
  std::array<Vec3, 6> M, m;
};

inline NumericHexapod numeric_hexapod(const HexapodDesign& h) {
  NumericHexapod n;
  for (size_t k = 0; k < 5; ++k) {
    n.M[k] = to_vec(h.pentapod.base[k]);
    n.m[k] = to_vec(h.pentapod.platform[k]);
  }
  n.M[5] = to_vec(h.M6);
  n.m[5] = to_vec(h.m6);
  return n;
}

// Ratio of smallest to largest singular value of the Plücker matrix.
inline double plucker_condition(const NumericHexapod& h, const Eigen::Matrix3d& R, const Vec3& t) {
  Eigen::Matrix<double, 6, 6> P;
  for (int k = 0; k < 6; ++k) {
    auto kk = static_cast<size_t>(k);
    Vec3 d = R * h.m[kk] + t - h.M[kk];
    P.row(k).head<3>() = d.transpose();
    P.row(k).tail<3>() = h.M[kk].cross(d).transpose();
  }
  Eigen::JacobiSVD<Eigen::Matrix<double, 6, 6>> svd(P);
  const auto& s = svd.singularValues();
  return s(5) / s(0);
}

struct ArchSingularityReport {
  std::vector<double> ratios;
  double max_ratio = 0;
};

inline ArchSingularityReport arch_singularity_check(const NumericHexapod& h, int poses, unsigned seed = 1) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  ArchSingularityReport rep;
  for (int k = 0; k < poses; ++k) {
    Eigen::Quaterniond q(g(rng), g(rng), g(rng), g(rng));
    q.normalize();
    Vec3 t(g(rng), g(rng), g(rng));
    double r = plucker_condition(h, q.toRotationMatrix(), t);
    rep.ratios.push_back(r);
    rep.max_ratio = std::max(rep.max_ratio, r);
  }
  return rep;
}

}  // namespace duporcq
