#pragma once

#include <array>
#include <optional>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "duporcq/gcd.hpp"
#include "duporcq/geometry.hpp"
#include "duporcq/mpoly.hpp"

namespace duporcq {

// A point c of the conic x^2 + y^2 + z^2 = 0. Planar tuples only see the
// in-plane part (cx : cy); cz is kept when it is rational over Q(i).
struct ConicDirection {
  GaussRational cx, cy;
  std::optional<GaussRational> cz;

  static ConicDirection from_triple(const GaussRational& x, const GaussRational& y, const GaussRational& z) {
    if (!(x * x + y * y + z * z).is_zero()) throw InvalidDirection("c . c != 0");
    if (x.is_zero() && y.is_zero() && z.is_zero()) throw InvalidDirection("zero direction");
    return {x, y, z};
  }

  // c(t) = (2t : 1 - t^2 : i (1 + t^2)).
  static ConicDirection from_parameter(const GaussRational& t) {
    return {GaussRational(2) * t, GaussRational(1) - t * t, GaussRational::I() * (GaussRational(1) + t * t)};
  }

  // Direction whose projection ray runs parallel to the in-plane vector d.
  static ConicDirection along(const PlanarPoint& d) {
    if (sgn(d.x) == 0 && sgn(d.y) == 0) throw InvalidDirection("zero direction vector");
    return {GaussRational(-d.y), GaussRational(d.x), std::nullopt};
  }

  // Projection along the z-axis: c = (1 : i : 0).
  static ConicDirection z_axis() { return from_triple(GaussRational(1), GaussRational::I(), GaussRational(0)); }
};

struct DelPezzoPoint {
  std::array<GaussRational, 6> phi;

  bool all_zero() const {
    for (const auto& p : phi)
      if (!p.is_zero()) return false;
    return true;
  }
};

// Projectively equal 6-tuples.
inline bool proportional(const DelPezzoPoint& a, const DelPezzoPoint& b) {
  if (a.all_zero() || b.all_zero()) return a.all_zero() && b.all_zero();
  for (size_t i = 0; i < 6; ++i)
    for (size_t j = i + 1; j < 6; ++j)
      if (a.phi[i] * b.phi[j] != a.phi[j] * b.phi[i]) return false;
  return true;
}

// Index pairs (0-based) entering each phi_k, with multiplicity.
inline const std::array<std::array<std::pair<int, int>, 5>, 6>& phi_factors() {
  static const std::array<std::array<std::pair<int, int>, 5>, 6> table = {{
      {{{0, 1}, {1, 2}, {2, 3}, {3, 4}, {0, 4}}},
      {{{0, 1}, {1, 4}, {0, 4}, {2, 3}, {2, 3}}},
      {{{0, 1}, {1, 2}, {0, 2}, {3, 4}, {3, 4}}},
      {{{1, 2}, {2, 3}, {1, 3}, {0, 4}, {0, 4}}},
      {{{2, 3}, {3, 4}, {2, 4}, {0, 1}, {0, 1}}},
      {{{0, 3}, {3, 4}, {0, 4}, {1, 2}, {1, 2}}},
  }};
  return table;
}

inline bool phi_contains(int k, int i, int j) {
  if (i > j) std::swap(i, j);
  for (const auto& f : phi_factors()[static_cast<size_t>(k)])
    if (f.first == i && f.second == j) return true;
  return false;
}

// D_ij = (P_i - P_j) . c for 1-based indices.
inline GaussRational dij(const Tuple5& P, const ConicDirection& c, int i, int j) {
  if (i == j) throw std::invalid_argument("dij: i == j");
  if (i < 1 || i > 5 || j < 1 || j > 5) throw std::out_of_range("dij: index out of range");
  const auto& a = P[static_cast<size_t>(i - 1)];
  const auto& b = P[static_cast<size_t>(j - 1)];
  return GaussRational(a.x - b.x) * c.cx + GaussRational(a.y - b.y) * c.cy;
}

// phi_k from homogeneous coordinates (z_i : w_i) on the projective line,
// D_ij = z_i w_j - z_j w_i.
inline DelPezzoPoint del_pezzo_from_projective(const std::array<std::pair<GaussRational, GaussRational>, 5>& zw) {
  DelPezzoPoint out;
  for (size_t k = 0; k < 6; ++k) {
    GaussRational v(1);
    for (const auto& [i, j] : phi_factors()[k]) {
      const auto& a = zw[static_cast<size_t>(i)];
      const auto& b = zw[static_cast<size_t>(j)];
      v *= a.first * b.second - b.first * a.second;
    }
    out.phi[k] = v;
  }
  return out;
}

inline DelPezzoPoint del_pezzo(const Tuple5& P, const ConicDirection& c) {
  std::array<std::pair<GaussRational, GaussRational>, 5> zw;
  for (size_t k = 0; k < 5; ++k) zw[k] = {GaussRational(P[k].x) * c.cx + GaussRational(P[k].y) * c.cy, GaussRational(1)};
  DelPezzoPoint p = del_pezzo_from_projective(zw);
  if (p.all_zero()) throw AllZero("all phi vanish: direction parallel to a collinear triple");
  return p;
}

// The six phi_k as homogeneous quintic forms in (cx, cy).
inline std::array<MPoly, 6> phi_forms(const Tuple5& P) {
  MPoly cx = MPoly::var("cx"), cy = MPoly::var("cy");
  std::array<MPoly, 6> out;
  for (size_t k = 0; k < 6; ++k) {
    MPoly v(1);
    for (const auto& [i, j] : phi_factors()[k]) {
      const auto& a = P[static_cast<size_t>(i)];
      const auto& b = P[static_cast<size_t>(j)];
      v = v * (MPoly(a.x - b.x) * cx + MPoly(a.y - b.y) * cy);
    }
    out[k] = v;
  }
  return out;
}

// Vanishing pairs (1-based) of D_ij at c.
inline std::set<std::pair<int, int>> vanishing_pairs(const Tuple5& P, const ConicDirection& c) {
  std::set<std::pair<int, int>> out;
  for (int i = 1; i <= 5; ++i)
    for (int j = i + 1; j <= 5; ++j)
      if (dij(P, c, i, j).is_zero()) out.insert({i, j});
  return out;
}

// Extension of the Del Pezzo map to a direction parallel to a collinear
// triple: the common factor of all six components is cancelled first.
inline DelPezzoPoint extended_del_pezzo(const Tuple5& P, const ConicDirection& c) {
  auto zero = vanishing_pairs(P, c);
  bool triple = false;
  if (zero.size() == 3) {
    std::set<int> idx;
    for (const auto& pr : zero) {
      idx.insert(pr.first);
      idx.insert(pr.second);
    }
    triple = idx.size() == 3;
  }
  if (!triple) throw NotCollinearDirection("direction is not parallel to exactly one collinear triple");
  auto forms = phi_forms(P);
  MPoly g = gcd(std::vector<MPoly>(forms.begin(), forms.end()));
  MPoly::Assignment at{{"cx", c.cx}, {"cy", c.cy}};
  DelPezzoPoint out;
  for (size_t k = 0; k < 6; ++k) out.phi[k] = exact_quotient(forms[k], g).specialize(at).constant_value();
  if (out.all_zero()) throw AllZero("extended map vanishes");
  return out;
}

// del_pezzo where defined, otherwise the extended map.
inline DelPezzoPoint picture(const Tuple5& P, const ConicDirection& c) {
  try {
    return del_pezzo(P, c);
  } catch (const AllZero&) {
    return extended_del_pezzo(P, c);
  }
}

// Pairs {i,j} (1-based) whose line L_ij contains the point.
inline std::set<std::pair<int, int>> line_membership(const DelPezzoPoint& p) {
  std::set<std::pair<int, int>> out;
  for (int i = 0; i < 5; ++i)
    for (int j = i + 1; j < 5; ++j) {
      bool ok = true;
      for (int k = 0; k < 6 && ok; ++k) ok = phi_contains(k, i, j) == p.phi[static_cast<size_t>(k)].is_zero();
      if (ok) out.insert({i + 1, j + 1});
    }
  return out;
}

inline bool same_picture(const Tuple5& A, const Tuple5& B, const ConicDirection& c) {
  return proportional(picture(A, c), picture(B, c));
}

// Profile in the conic parameter t, common factor removed.
struct ProfileCurve {
  std::array<MPoly, 6> phi;
  MPoly removed;  // common factor that was cancelled
};

inline std::array<MPoly, 6> raw_profile(const Tuple5& P) {
  MPoly t = MPoly::var("t");
  MPoly cx = MPoly(2) * t, cy = MPoly(1) - t * t;
  auto forms = phi_forms(P);
  for (auto& f : forms) f = f.substitute("cx", cx).substitute("cy", cy);
  return forms;
}

inline ProfileCurve profile(const Tuple5& P) {
  auto raw = raw_profile(P);
  ProfileCurve out;
  out.removed = gcd(std::vector<MPoly>(raw.begin(), raw.end()));
  for (size_t k = 0; k < 6; ++k) out.phi[k] = exact_quotient(raw[k], out.removed);
  return out;
}

// The six special directions of a base with collinear triples (1,2,3) and
// (3,4,5), completed by the quadrilateral diagonals M1M4, M1M5, M2M4, M2M5.
struct SpecialDirection {
  char label;  // m, b, g, o, y, p
  const char* color;
  PlanarPoint along;
};

inline std::vector<SpecialDirection> special_directions(const Tuple5& M) {
  return {
      {'m', "metallic", M[1] - M[0]}, {'b', "blue", M[4] - M[3]},  {'g', "green", M[4] - M[1]},
      {'o', "orange", M[3] - M[1]},   {'y', "yellow", M[4] - M[0]}, {'p', "pink", M[3] - M[0]},
  };
}

// ---------------------------------------------------------------------------
// Candidate filter

struct CandidateVerdict {
  Candidate candidate;
  bool accepted = false;
  std::string reason;
};

// A candidate survives if its closure check holds and its Moebius pictures
// agree with the base at all special directions and at random directions.
inline std::vector<CandidateVerdict> validate_candidates(const Tuple5& M, const std::vector<Candidate>& candidates,
                                                         unsigned seed = 1, int random_directions = 20) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(-97, 97), den(1, 61);
  std::vector<ConicDirection> randoms;
  while (static_cast<int>(randoms.size()) < random_directions) {
    auto c = ConicDirection::from_parameter(GaussRational(make_rational(num(rng), den(rng))));
    if (vanishing_pairs(M, c).empty()) randoms.push_back(c);
  }
  std::vector<CandidateVerdict> out;
  for (const auto& cand : candidates) {
    CandidateVerdict v{cand, false, ""};
    if (!cand.platform) {
      v.reason = "construction undefined: " + cand.note;
    } else if (!cand.closure) {
      v.reason = "closure check fails";
    } else {
      const auto& m = *cand.platform;
      auto name = [](const std::set<std::pair<int, int>>& s) {
        std::string r;
        for (const auto& [i, j] : s) r += (r.empty() ? "L" : ",L") + std::to_string(i) + std::to_string(j);
        return r.empty() ? std::string("none") : r;
      };
      // Line incidences first, then the full projective comparison.
      std::vector<std::pair<DelPezzoPoint, DelPezzoPoint>> pics;
      v.accepted = true;
      for (const auto& sd : special_directions(M)) {
        auto c = ConicDirection::along(sd.along);
        DelPezzoPoint pb = picture(M, c), pm;
        try {
          pm = picture(m, c);
        } catch (const Error&) {
          v.accepted = false;
          v.reason = std::string(sd.color) + ": candidate picture undefined";
          break;
        }
        auto lb = line_membership(pb), lm = line_membership(pm);
        if (lb != lm) {
          v.accepted = false;
          v.reason = std::string(sd.color) + ": base on " + name(lb) + ", candidate on " + name(lm);
          break;
        }
        pics.emplace_back(pb, pm);
      }
      for (size_t k = 0; v.accepted && k < pics.size(); ++k) {
        if (!proportional(pics[k].first, pics[k].second)) {
          v.accepted = false;
          v.reason = std::string(special_directions(M)[k].color) + ": different points on the same line";
        }
      }
      if (v.accepted) {
        for (const auto& c : randoms) {
          if (!same_picture(M, m, c)) {
            v.accepted = false;
            v.reason = "pictures differ at a generic direction";
            break;
          }
        }
      }
    }
    out.push_back(std::move(v));
  }
  return out;
}

}  // namespace duporcq
