#pragma once

#include <charconv>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "duporcq/geometry.hpp"
#include "duporcq/moebius.hpp"
#include "duporcq/selfmotion.hpp"

namespace duporcq {

using json = nlohmann::ordered_json;

inline std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline json rational_json(const Rational& r) { return to_string(r); }

// Accepts "p/q" strings, integers and finite decimals; doubles are read
// through their shortest round-trip representation.
inline Rational rational_from_json(const json& j, const std::string& where) {
  try {
    if (j.is_string()) return parse_rational(j.get<std::string>());
    if (j.is_number_integer()) return Rational(j.get<long>());
    if (j.is_number_float()) {
      char buf[64];
      auto [end, ec] = std::to_chars(buf, buf + sizeof buf, j.get<double>());
      if (ec != std::errc()) throw SchemaError(where + ": unrepresentable number");
      return parse_rational(std::string(buf, end));
    }
  } catch (const SchemaError&) {
    throw;
  } catch (const std::exception& ex) {
    throw SchemaError(where + ": " + ex.what());
  }
  throw SchemaError(where + ": expected a rational number");
}

inline Point3 point_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || (j.size() != 2 && j.size() != 3)) throw SchemaError(where + ": expected [x, y] or [x, y, z]");
  Point3 p{rational_from_json(j[0], where), rational_from_json(j[1], where), Rational(0)};
  if (j.size() == 3) p.z = rational_from_json(j[2], where);
  return p;
}

inline json point_json(const Point3& p) { return json::array({rational_json(p.x), rational_json(p.y), rational_json(p.z)}); }

struct SixthLegEntry {
  Point3 M, m;
  std::optional<Rational> r2;
};

struct DesignFile {
  PentapodDesign design;
  std::optional<SixthLegEntry> sixth;
};

inline DesignFile design_from_json(const json& j) {
  if (!j.is_object()) throw SchemaError("design: expected an object");
  for (const char* key : {"base", "platform", "radii2"})
    if (!j.contains(key)) throw SchemaError(std::string("design: missing \"") + key + "\"");
  DesignFile f;
  auto five = [&](const char* key) -> const json& {
    const json& a = j.at(key);
    if (!a.is_array() || a.size() != 5) throw SchemaError(std::string(key) + ": expected 5 entries");
    return a;
  };
  const json &base = five("base"), &platform = five("platform"), &radii = five("radii2");
  for (size_t k = 0; k < 5; ++k) {
    std::string idx = "[" + std::to_string(k) + "]";
    f.design.base[k] = point_from_json(base[k], "base" + idx);
    f.design.platform[k] = point_from_json(platform[k], "platform" + idx);
    f.design.radii2[k] = rational_from_json(radii[k], "radii2" + idx);
  }
  if (j.contains("sixth")) {
    const json& s = j.at("sixth");
    if (!s.is_object() || !s.contains("M") || !s.contains("m")) throw SchemaError("sixth: expected {\"M\", \"m\"}");
    SixthLegEntry leg{point_from_json(s.at("M"), "sixth.M"), point_from_json(s.at("m"), "sixth.m"), std::nullopt};
    if (s.contains("r2")) leg.r2 = rational_from_json(s.at("r2"), "sixth.r2");
    f.sixth = leg;
  }
  return f;
}

inline json design_to_json(const DesignFile& f) {
  json j;
  j["base"] = json::array();
  j["platform"] = json::array();
  j["radii2"] = json::array();
  for (size_t k = 0; k < 5; ++k) {
    j["base"].push_back(point_json(f.design.base[k]));
    j["platform"].push_back(point_json(f.design.platform[k]));
    j["radii2"].push_back(rational_json(f.design.radii2[k]));
  }
  if (f.sixth) {
    j["sixth"] = {{"M", point_json(f.sixth->M)}, {"m", point_json(f.sixth->m)}};
    if (f.sixth->r2) j["sixth"]["r2"] = rational_json(*f.sixth->r2);
  }
  return j;
}

inline json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& ex) {
    throw SchemaError(path + ": " + ex.what());
  }
}

// Canonical parameters: either {"params": {...}} or a design in canonical
// position with a kappa_2 or kappa_3 platform.
struct CanonicalInput {
  BaseParams base;
  AffineMap2 map;
  int kappa = 2;
};

inline CanonicalInput params_from_json(const json& j) {
  const json& p = j.at("params");
  for (const char* key : {"A4", "B4", "A5", "B5", "mu"})
    if (!p.contains(key)) throw SchemaError(std::string("params: missing \"") + key + "\"");
  const json& mu = p.at("mu");
  if (!mu.is_array() || mu.size() != 3) throw SchemaError("params.mu: expected 3 entries");
  int kappa = p.value("kappa", 2);
  if (kappa != 2 && kappa != 3) throw SchemaError("params.kappa must be 2 or 3");
  return {BaseParams(rational_from_json(p["A4"], "A4"), rational_from_json(p["B4"], "B4"),
                     rational_from_json(p["A5"], "A5"), rational_from_json(p["B5"], "B5")),
          AffineMap2(rational_from_json(mu[0], "mu[0]"), rational_from_json(mu[1], "mu[1]"),
                     rational_from_json(mu[2], "mu[2]")),
          kappa};
}

inline CanonicalInput canonical_from_design(const PentapodDesign& d) {
  Tuple5 M = d.planar_base(), m = d.planar_platform();
  if (M[0] != PlanarPoint{Rational(0), Rational(0)} || M[1] != PlanarPoint{Rational(1), Rational(0)})
    throw DegenerateBase("design is not in canonical position (M1 = (0,0), M2 = (1,0))");
  BaseParams b(M[3].x, M[3].y, M[4].x, M[4].y);
  if (canonical_base(b).points != M) throw DegenerateBase("M3 is not the canonical intersection point");
  for (int kappa : {2, 3}) {
    // kappa_2: m4 = A M1, m5 = A M2, m1 = A M4; kappa_3 swaps 4 <-> 5 and 1 <-> 2.
    const PlanarPoint& origin = kappa == 2 ? m[3] : m[4];
    const PlanarPoint& unit = kappa == 2 ? m[4] : m[3];
    const PlanarPoint& img4 = kappa == 2 ? m[0] : m[1];
    if (origin != PlanarPoint{Rational(0), Rational(0)} || sgn(unit.y) != 0 || sgn(unit.x) <= 0) continue;
    Rational mu1 = unit.x, mu3 = img4.y / b.B4, mu2 = (img4.x - mu1 * b.A4) / b.B4;
    if (sgn(mu3) == 0) continue;
    AffineMap2 A(mu1, mu2, mu3);
    if (build_platform(M, kappa, A) == m) return {b, A, kappa};
  }
  throw DegeneratePlatform("platform is not a kappa_2 or kappa_3 image of the canonical base");
}

inline CanonicalInput canonical_from_json(const json& j) {
  if (j.is_object() && j.contains("params")) return params_from_json(j);
  return canonical_from_design(design_from_json(j).design);
}

// Trajectory CSV: t1,t2,e1,e2,e3,f1,f2,f3,tx,ty,tz,res1..res6.
inline void write_trajectory_csv(std::ostream& out, const SelfMotionReport& rep) {
  out << "t1,t2,e1,e2,e3,f1,f2,f3,tx,ty,tz,res1,res2,res3,res4,res5,res6\n";
  for (size_t k = 0; k < rep.samples.size(); ++k) {
    const auto& s = rep.samples[k];
    auto D = displacement(s.pose);
    out << format_double(s.t1) << ',' << format_double(s.t2);
    for (size_t i = 1; i < 4; ++i) out << ',' << format_double(s.pose.e[i]);
    for (size_t i = 1; i < 4; ++i) out << ',' << format_double(s.pose.f[i]);
    for (size_t i = 0; i < 3; ++i) out << ',' << format_double(D.t[i]);
    for (double r : s.leg_residuals) out << ',' << format_double(r);
    out << ',';
    if (k < rep.sixth_residuals.size()) out << format_double(rep.sixth_residuals[k]);
    out << '\n';
  }
}

// Profile dump: one row per conic parameter value.
inline void write_profile_csv(std::ostream& out, const ProfileCurve& prof, const std::vector<Rational>& ts) {
  out << "t,phi0,phi1,phi2,phi3,phi4,phi5\n";
  for (const auto& t : ts) {
    out << to_string(t);
    for (const auto& f : prof.phi) {
      GaussRational v = f.has_var("t") ? f.specialize({{"t", t}}).constant_value() : f.constant_value();
      out << ',' << to_string(v);
    }
    out << '\n';
  }
}

inline json membership_json(const std::set<std::pair<int, int>>& s) {
  json a = json::array();
  for (const auto& [i, j] : s) a.push_back("L" + std::to_string(i) + std::to_string(j));
  return a;
}

}  // namespace duporcq
