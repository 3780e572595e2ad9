#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "duporcq/errors.hpp"
#include "duporcq/rational.hpp"

namespace duporcq {

struct PlanarPoint {
  Rational x;
  Rational y;

  friend PlanarPoint operator+(const PlanarPoint& a, const PlanarPoint& b) { return {a.x + b.x, a.y + b.y}; }
  friend PlanarPoint operator-(const PlanarPoint& a, const PlanarPoint& b) { return {a.x - b.x, a.y - b.y}; }
  friend PlanarPoint operator*(const Rational& s, const PlanarPoint& a) { return {s * a.x, s * a.y}; }
  friend bool operator==(const PlanarPoint& a, const PlanarPoint& b) { return a.x == b.x && a.y == b.y; }
  friend bool operator!=(const PlanarPoint& a, const PlanarPoint& b) { return !(a == b); }
};

struct Point3 {
  Rational x;
  Rational y;
  Rational z;

  friend bool operator==(const Point3& a, const Point3& b) { return a.x == b.x && a.y == b.y && a.z == b.z; }
  friend bool operator!=(const Point3& a, const Point3& b) { return !(a == b); }
};

inline Point3 lift(const PlanarPoint& p) { return {p.x, p.y, Rational(0)}; }

inline PlanarPoint to_planar(const Point3& p) {
  if (sgn(p.z) != 0) throw NonPlanar("point with z != 0 in a planar design");
  return {p.x, p.y};
}

using Tuple5 = std::array<PlanarPoint, 5>;

inline Rational cross(const PlanarPoint& a, const PlanarPoint& b) { return a.x * b.y - a.y * b.x; }

inline bool collinear(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& c) {
  return sgn(cross(b - a, c - a)) == 0;
}

inline bool parallel(const PlanarPoint& u, const PlanarPoint& v) { return sgn(cross(u, v)) == 0; }

// Intersection of the lines p + s*u and q + t*v; nullopt if parallel or a
// direction is zero.
inline std::optional<PlanarPoint> intersect_lines(const PlanarPoint& p, const PlanarPoint& u,
                                                  const PlanarPoint& q, const PlanarPoint& v) {
  Rational d = cross(u, v);
  if (sgn(d) == 0) return std::nullopt;
  Rational s = cross(q - p, v) / d;
  return p + s * u;
}

// Intersection of line ab with line cd.
inline std::optional<PlanarPoint> meet(const PlanarPoint& a, const PlanarPoint& b, const PlanarPoint& c,
                                       const PlanarPoint& d) {
  if (a == b || c == d) return std::nullopt;
  return intersect_lines(a, b - a, c, d - c);
}

// Affine ratio r with Z = X + r (Y - X).
inline Rational tv_ratio(const PlanarPoint& X, const PlanarPoint& Y, const PlanarPoint& Z) {
  if (X == Y) throw CoincidentBase("tv_ratio: X == Y");
  if (!collinear(X, Y, Z)) throw NotCollinear("tv_ratio: points are not collinear");
  PlanarPoint d = Y - X, w = Z - X;
  return sgn(d.x) != 0 ? Rational(w.x / d.x) : Rational(w.y / d.y);
}

// Nondegeneracy values of the canonical base.
struct BaseInvariants {
  Rational P;  // B4*A5 - A4*B5
  Rational U1;
  Rational U2;
  Rational U3;
};

inline BaseInvariants base_invariants(const Rational& A4, const Rational& B4, const Rational& A5,
                                      const Rational& B5) {
  BaseInvariants v;
  v.P = B4 * A5 - A4 * B5;
  v.U1 = (B4 - B5) * v.P * (v.P - B4 + B5);
  v.U2 = v.P + B5;
  v.U3 = v.P - B4;
  return v;
}

// Shape parameters of the canonical base M1=(0,0), M2=(1,0), M4=(A4,B4),
// M5=(A5,B5). Validated on construction.
struct BaseParams {
  Rational A4, B4, A5, B5;

  BaseParams(Rational a4, Rational b4, Rational a5, Rational b5)
      : A4(std::move(a4)), B4(std::move(b4)), A5(std::move(a5)), B5(std::move(b5)) {
    if (sgn(B4) == 0 || sgn(B5) == 0) throw DegenerateBase("B4*B5 = 0");
    if (B4 == B5) throw DegenerateBase("B4 = B5: M1M2 parallel to M4M5");
    auto inv = base_invariants(A4, B4, A5, B5);
    if (sgn(inv.U1) == 0) throw DegenerateBase("U1 = 0: M3 coincides with M1 or M2");
    if (sgn(inv.U2) == 0) throw DegenerateBase("U2 = 0: M1M5 parallel to M2M4");
    if (sgn(inv.U3) == 0) throw DegenerateBase("U3 = 0: M1M4 parallel to M2M5");
  }

  Rational A() const { return A5 - A4 + 1; }
  Rational B() const { return B4 - B5; }
};

struct CanonicalBase {
  Tuple5 points;
  Rational U1, U2, U3;
};

inline CanonicalBase canonical_base(const BaseParams& p) {
  auto inv = base_invariants(p.A4, p.B4, p.A5, p.B5);
  CanonicalBase b;
  b.points = {PlanarPoint{Rational(0), Rational(0)}, PlanarPoint{Rational(1), Rational(0)},
              PlanarPoint{inv.P / (p.B4 - p.B5), Rational(0)}, PlanarPoint{p.A4, p.B4},
              PlanarPoint{p.A5, p.B5}};
  b.U1 = inv.U1;
  b.U2 = inv.U2;
  b.U3 = inv.U3;
  return b;
}

// Upper triangular linear map [[mu1, mu2], [0, mu3]].
struct AffineMap2 {
  Rational mu1, mu2, mu3;

  AffineMap2(Rational m1, Rational m2, Rational m3) : mu1(std::move(m1)), mu2(std::move(m2)), mu3(std::move(m3)) {
    if (sgn(mu1) == 0 || sgn(mu3) == 0) throw InvalidAffineMap("mu1*mu3 = 0");
    if (sgn(mu1) < 0) throw InvalidAffineMap("mu1 must be positive");
  }
  static AffineMap2 identity() { return {Rational(1), Rational(0), Rational(1)}; }

  PlanarPoint operator()(const PlanarPoint& p) const { return {mu1 * p.x + mu2 * p.y, mu3 * p.y}; }
  bool is_identity() const { return mu1 == 1 && sgn(mu2) == 0 && mu3 == 1; }
};

// Platform of a kappa_2 (or kappa_3) design over the given base.
inline Tuple5 build_platform(const Tuple5& M, int kappa, const AffineMap2& A) {
  Tuple5 m;
  if (kappa == 2) {
    m[3] = A(M[0]);
    m[4] = A(M[1]);
    m[0] = A(M[3]);
    m[1] = A(M[4]);
    auto m3 = meet(m[1], m[3], m[0], m[4]);
    if (!m3) throw DegeneratePlatform("m2m4 parallel to m1m5");
    m[2] = *m3;
  } else if (kappa == 3) {
    m[4] = A(M[0]);
    m[3] = A(M[1]);
    m[1] = A(M[3]);
    m[0] = A(M[4]);
    auto m3 = meet(m[0], m[3], m[1], m[4]);
    if (!m3) throw DegeneratePlatform("m1m4 parallel to m2m5");
    m[2] = *m3;
  } else {
    throw std::invalid_argument("kappa must be 2 or 3");
  }
  for (int k = 0; k < 5; ++k)
    if (k != 2 && m[2] == m[static_cast<size_t>(k)]) throw DegeneratePlatform("m3 coincides with an anchor");
  return m;
}

// General affine map x -> L x + t.
struct Affine2 {
  Rational a, b, c, d;  // L = [[a, b], [c, d]]
  Rational tx, ty;

  PlanarPoint operator()(const PlanarPoint& p) const { return {a * p.x + b * p.y + tx, c * p.x + d * p.y + ty}; }
  Rational det() const { return a * d - b * c; }
  bool is_isometry() const {
    return a * a + c * c == 1 && b * b + d * d == 1 && sgn(a * b + c * d) == 0;
  }
  bool is_identity() const { return a == 1 && d == 1 && sgn(b) == 0 && sgn(c) == 0 && sgn(tx) == 0 && sgn(ty) == 0; }
  Affine2 inverse() const {
    Rational D = det();
    if (sgn(D) == 0) throw std::domain_error("singular affine map");
    Affine2 r{d / D, -b / D, -c / D, a / D, Rational(0), Rational(0)};
    PlanarPoint t = r(PlanarPoint{tx, ty});
    r.tx = -t.x;
    r.ty = -t.y;
    return r;
  }
};

// The unique invertible affine map sending src[k] to dst[k] for every k,
// if one exists.
template <size_t N>
std::optional<Affine2> affine_map_between(const std::array<PlanarPoint, N>& src,
                                          const std::array<PlanarPoint, N>& dst) {
  for (size_t i = 0; i < N; ++i)
    for (size_t j = i + 1; j < N; ++j)
      for (size_t k = j + 1; k < N; ++k) {
        PlanarPoint u = src[j] - src[i], v = src[k] - src[i];
        Rational D = cross(u, v);
        if (sgn(D) == 0) continue;
        PlanarPoint U = dst[j] - dst[i], V = dst[k] - dst[i];
        // L [u v] = [U V]  =>  L = [U V] [u v]^-1
        Affine2 T;
        T.a = (U.x * v.y - V.x * u.y) / D;
        T.b = (V.x * u.x - U.x * v.x) / D;
        T.c = (U.y * v.y - V.y * u.y) / D;
        T.d = (V.y * u.x - U.y * v.x) / D;
        T.tx = dst[i].x - (T.a * src[i].x + T.b * src[i].y);
        T.ty = dst[i].y - (T.c * src[i].x + T.d * src[i].y);
        if (sgn(T.det()) == 0) return std::nullopt;
        for (size_t n = 0; n < N; ++n)
          if (T(src[n]) != dst[n]) return std::nullopt;
        return T;
      }
  return std::nullopt;
}

struct PentapodDesign {
  std::array<Point3, 5> base;
  std::array<Point3, 5> platform;
  std::array<Rational, 5> radii2;

  Tuple5 planar_base() const {
    Tuple5 t;
    for (size_t k = 0; k < 5; ++k) t[k] = to_planar(base[k]);
    return t;
  }
  Tuple5 planar_platform() const {
    Tuple5 t;
    for (size_t k = 0; k < 5; ++k) t[k] = to_planar(platform[k]);
    return t;
  }

  static PentapodDesign planar(const Tuple5& M, const Tuple5& m, const std::array<Rational, 5>& r2 = {}) {
    PentapodDesign d;
    for (size_t k = 0; k < 5; ++k) {
      d.base[k] = lift(M[k]);
      d.platform[k] = lift(m[k]);
    }
    d.radii2 = r2;
    return d;
  }

  // Pairwise distinct anchors and nonnegative radii.
  void validate() const {
    for (size_t i = 0; i < 5; ++i)
      for (size_t j = i + 1; j < 5; ++j) {
        if (base[i] == base[j]) throw DegenerateBase("coincident base anchors");
        if (platform[i] == platform[j]) throw DegeneratePlatform("coincident platform anchors");
      }
    for (const auto& r : radii2)
      if (sgn(r) < 0) throw Unrealizable("negative squared leg length");
  }
};

struct HexapodDesign {
  PentapodDesign pentapod;
  Point3 M6;
  Point3 m6;
  std::optional<Rational> r6_2;
};

// ---------------------------------------------------------------------------
// Reconstruction candidates

struct Candidate {
  std::string tag;          // "1a", "1b", "2a", "2b.i", "2b.ii", "3a", "3b.i", "3b.ii"
  int case_number = 0;      // 1, 2, 3
  char branch = 'a';        // 'a' or 'b'
  std::optional<Tuple5> platform;  // empty when a required intersection is undefined
  bool closure = false;     // the final parallelism check of the case
  std::array<std::array<int, 3>, 2> triples{};  // collinear platform triples (0-based)
  std::string note;
};

namespace detail {

// Parallel to M_a M_b through point p, intersected with parallel to M_c M_d
// through q.
inline std::optional<PlanarPoint> cross_parallels(const Tuple5& M, const PlanarPoint& p, int a, int b,
                                                  const PlanarPoint& q, int c, int d) {
  return intersect_lines(p, M[static_cast<size_t>(b)] - M[static_cast<size_t>(a)], q,
                         M[static_cast<size_t>(d)] - M[static_cast<size_t>(c)]);
}

// Cases 2 and 3 share one recipe; sigma swaps indices 4 and 5 for case 3.
inline std::vector<Candidate> case_two_like(const Tuple5& M, int case_number) {
  auto s = [case_number](int i) {
    if (case_number == 3 && i == 3) return 4;
    if (case_number == 3 && i == 4) return 3;
    return i;
  };
  // Indices (0-based): 1->0, 2->1, 3->2, 4->3, 5->4.
  const int i1 = 0, i2 = 1, i3 = 2, i4 = s(3), i5 = s(4);
  struct Recipe {
    const char* tag;
    char branch;
    // m2 = par(M[a2] M[b2]) through m1  meet  par(M[c2] M[d2]) through m4
    int a2, b2, c2, d2;
    // m5 = par(M[a5] M[b5]) through m4  meet  par(M[c5] M[d5]) through m1
    int a5, b5, c5, d5;
  };
  const Recipe recipes[] = {
      {"a", 'a', i1, i2, i1, i5, i4, i5, i2, i4},
      {"b.i", 'b', i4, i5, i1, i5, i1, i2, i2, i4},
      {"b.ii", 'b', i4, i5, i2, i4, i1, i2, i1, i5},
  };
  std::vector<Candidate> out;
  for (const auto& r : recipes) {
    Candidate c;
    c.tag = std::to_string(case_number) + r.tag;
    c.case_number = case_number;
    c.branch = r.branch;
    c.triples = {{{i3, i1, i5}, {i3, i2, i4}}};
    PlanarPoint m1 = M[static_cast<size_t>(i4)], m4 = M[static_cast<size_t>(i1)];
    auto m2 = cross_parallels(M, m1, r.a2, r.b2, m4, r.c2, r.d2);
    auto m5 = cross_parallels(M, m4, r.a5, r.b5, m1, r.c5, r.d5);
    if (!m2 || !m5) {
      c.note = "parallel construction lines";
      out.push_back(c);
      continue;
    }
    auto m3 = meet(m1, *m5, *m2, m4);
    if (!m3) {
      c.note = "m3 at infinity";
      out.push_back(c);
      continue;
    }
    Tuple5 m;
    m[static_cast<size_t>(i1)] = m1;
    m[static_cast<size_t>(i2)] = *m2;
    m[static_cast<size_t>(i3)] = *m3;
    m[static_cast<size_t>(i4)] = m4;
    m[static_cast<size_t>(i5)] = *m5;
    c.closure = parallel(*m5 - *m2, M[static_cast<size_t>(i5)] - M[static_cast<size_t>(i2)]);
    c.platform = m;
    out.push_back(c);
  }
  return out;
}

}  // namespace detail

// All reconstruction candidates of a base with collinear triples (1,2,3)
// and (3,4,5), built from parallel-line intersections.
inline std::vector<Candidate> reconstruct_candidates(const Tuple5& M) {
  if (!collinear(M[0], M[1], M[2]) || !collinear(M[2], M[3], M[4]))
    throw NotCollinear("base lacks the collinear triples M1M2M3 and M3M4M5");
  std::vector<Candidate> out;
  // Case 1: m1 = M1, m4 = M4, triples m3m1m2 and m3m4m5.
  struct Recipe1 {
    const char* tag;
    char branch;
    int a2, b2, a5, b5;  // directions for m1m2 and m4m5
  };
  const Recipe1 case1[] = {{"1a", 'a', 0, 1, 3, 4}, {"1b", 'b', 3, 4, 0, 1}};
  for (const auto& r : case1) {
    Candidate c;
    c.tag = r.tag;
    c.case_number = 1;
    c.branch = r.branch;
    c.triples = {{{2, 0, 1}, {2, 3, 4}}};
    PlanarPoint m1 = M[0], m4 = M[3];
    auto m2 = detail::cross_parallels(M, m1, r.a2, r.b2, m4, 1, 3);
    auto m5 = detail::cross_parallels(M, m4, r.a5, r.b5, m1, 0, 4);
    std::optional<PlanarPoint> m3;
    if (m2 && m5) m3 = meet(m1, *m2, m4, *m5);
    if (!m3) {
      c.note = "parallel construction lines";
    } else {
      c.platform = Tuple5{m1, *m2, *m3, m4, *m5};
      c.closure = parallel(*m5 - *m2, M[4] - M[1]);
    }
    out.push_back(c);
  }
  for (int k : {2, 3})
    for (auto& c : detail::case_two_like(M, k)) out.push_back(std::move(c));
  return out;
}

// Collinear platform triples required by a candidate hold exactly.
inline bool candidate_triples_hold(const Candidate& c) {
  if (!c.platform) return false;
  const auto& m = *c.platform;
  for (const auto& t : c.triples)
    if (!collinear(m[static_cast<size_t>(t[0])], m[static_cast<size_t>(t[1])], m[static_cast<size_t>(t[2])]))
      return false;
  return true;
}

// ---------------------------------------------------------------------------
// Duporcq hexapods

enum class DuporcqType { None, Rec2, Rec3 };

struct DuporcqMatch {
  DuporcqType type = DuporcqType::None;
  Affine2 map{};  // candidate platform -> actual platform
};

// Finds the congruence between the design's platform and the kappa_2 or
// kappa_3 identity platform of its base.
inline DuporcqMatch match_duporcq(const PentapodDesign& design) {
  Tuple5 M = design.planar_base(), m = design.planar_platform();
  if (!collinear(M[0], M[1], M[2]) || !collinear(M[2], M[3], M[4])) return {};
  for (const auto& c : reconstruct_candidates(M)) {
    if (!c.platform || !c.closure) continue;
    if (c.tag != "2b.i" && c.tag != "3b.i") continue;
    auto T = affine_map_between(*c.platform, m);
    if (T && T->is_isometry()) return {c.tag == "2b.i" ? DuporcqType::Rec2 : DuporcqType::Rec3, *T};
  }
  return {};
}

// Sixth leg completing a Duporcq pentapod to an architecturally singular
// hexapod.
inline HexapodDesign duporcq_hexapod(const PentapodDesign& design) {
  auto match = match_duporcq(design);
  if (match.type == DuporcqType::None)
    throw NotDuporcq("platform is not congruent to the opposite-vertex quadrilateral of the base");
  Tuple5 M = design.planar_base();
  std::optional<PlanarPoint> M6 =
      match.type == DuporcqType::Rec2 ? meet(M[0], M[4], M[1], M[3]) : meet(M[0], M[3], M[1], M[4]);
  if (!M6) throw NotDuporcq("completing lines are parallel");
  HexapodDesign h;
  h.pentapod = design;
  h.M6 = lift(*M6);
  h.m6 = lift(match.map(M[2]));
  return h;
}

// Opposite vertex labels of the completed quadrilateral (0-based, index 5 is
// the sixth vertex).
inline std::array<int, 6> opposite_vertices(DuporcqType t) {
  if (t == DuporcqType::Rec2) return {3, 4, 5, 0, 1, 2};
  return {4, 3, 5, 1, 0, 2};
}

// Checks that the hexapod's base and platform are congruent complete
// quadrilaterals with every anchor paired to the opposite vertex.
inline bool opposite_vertex_pairing_holds(const HexapodDesign& h) {
  auto match = match_duporcq(h.pentapod);
  if (match.type == DuporcqType::None) return false;
  std::array<PlanarPoint, 6> M, m;
  for (size_t k = 0; k < 5; ++k) {
    M[k] = to_planar(h.pentapod.base[k]);
    m[k] = to_planar(h.pentapod.platform[k]);
  }
  M[5] = to_planar(h.M6);
  m[5] = to_planar(h.m6);
  auto opp = opposite_vertices(match.type);
  std::array<PlanarPoint, 6> relabeled;
  for (size_t k = 0; k < 6; ++k) relabeled[k] = M[static_cast<size_t>(opp[k])];
  auto T = affine_map_between(relabeled, m);
  return T && T->is_isometry();
}

}  // namespace duporcq
