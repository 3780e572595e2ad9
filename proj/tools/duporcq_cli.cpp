// Command-line front end for design classification, elimination reports,
// self-motion sampling and figures.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <random>

#include "duporcq/io.hpp"
#include "duporcq/svg.hpp"

using namespace duporcq;

namespace {

enum ExitCode { kOk = 0, kError = 1, kSchema = 2, kDegenerate = 3, kUnrealizable = 4, kInconsistent = 5 };

struct Options {
  std::string input;
  std::string out;
  std::uint64_t seed = 1;
  int samples = 100;
  double tol_leg = 1e-9;
  double tol_f0 = 1e-12;
  std::string r1, r2;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw Error("cannot write " + path);
  f << text;
}

void emit_json(const json& j, const Options& o) {
  std::string text = j.dump(2) + "\n";
  if (o.out.empty()) std::cout << text;
  else write_text(o.out, text);
}

DesignFile load_design(const std::string& path) {
  DesignFile f = design_from_json(read_json_file(path));
  for (const auto& p : f.design.base) (void)to_planar(p);
  for (const auto& p : f.design.platform) (void)to_planar(p);
  f.design.validate();
  return f;
}

json point2(const PlanarPoint& p) { return json::array({rational_json(p.x), rational_json(p.y)}); }

json affine_json(const Affine2& T) {
  json linear = json::array({json::array({rational_json(T.a), rational_json(T.b)}),
                             json::array({rational_json(T.c), rational_json(T.d)})});
  return {{"linear", linear}, {"translation", json::array({rational_json(T.tx), rational_json(T.ty)})}};
}

// ---------------------------------------------------------------------------

int cmd_classify(const Options& o) {
  DesignFile f = load_design(o.input);
  Tuple5 M = f.design.planar_base(), m = f.design.planar_platform();
  json out;
  if (!collinear(M[0], M[1], M[2]) || !collinear(M[2], M[3], M[4])) {
    out["verdict"] = "invalid-case-none";
    out["reason"] = "base anchors lack the collinear triples (1,2,3) and (3,4,5)";
    emit_json(out, o);
    return kOk;
  }
  auto candidates = reconstruct_candidates(M);
  auto verdicts = validate_candidates(M, candidates, static_cast<unsigned>(o.seed));
  out["verdict"] = nullptr;
  std::string verdict;
  json cands = json::array();
  for (const auto& v : verdicts) {
    json c{{"tag", v.candidate.tag}, {"accepted", v.accepted}};
    if (!v.reason.empty()) c["reason"] = v.reason;
    cands.push_back(c);
  }
  auto affine_to = [&](const std::string& tag) -> std::optional<Affine2> {
    for (const auto& c : candidates)
      if (c.tag == tag && c.platform) return affine_map_between(*c.platform, m);
    return std::nullopt;
  };
  auto match = match_duporcq(f.design);
  if (affine_to("1a")) {
    verdict = "planar-affine";
    out["map"] = affine_json(*affine_to("1a"));
  } else if (match.type != DuporcqType::None) {
    verdict = match.type == DuporcqType::Rec2 ? "duporcq-rec2" : "duporcq-rec3";
    out["map"] = affine_json(match.map);
  } else {
    verdict = "invalid-case-none";
    for (const auto& c : candidates)
      if (c.tag != "1a" && affine_to(c.tag)) {
        verdict = "invalid-case-" + c.tag;
        break;
      }
  }
  out["verdict"] = verdict;
  out["candidates"] = cands;
  emit_json(out, o);
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_motion(const Options& o) {
  DesignFile f = load_design(o.input);
  auto match = match_duporcq(f.design);
  if (match.type == DuporcqType::None) throw NotDuporcq("design is not a Duporcq pentapod");
  // Platform frame moved onto the identity-congruent candidate.
  Affine2 inv = match.map.inverse();
  PentapodDesign d = f.design;
  for (auto& p : d.platform) p = lift(inv(to_planar(p)));
  std::array<Rational, 5> radii = f.design.radii2;
  if (!o.r1.empty() || !o.r2.empty()) {
    if (o.r1.empty() || o.r2.empty()) throw SchemaError("--r1 and --r2 must be given together");
    radii = motion_radii(d, parse_rational(o.r1), parse_rational(o.r2)).r2;
  }
  std::optional<SixthLeg> sixth;
  if (f.sixth) {
    Point3 m6 = lift(inv(to_planar(f.sixth->m)));
    sixth = SixthLeg{to_vec(f.sixth->M), to_vec(m6), std::nullopt};
    if (f.sixth->r2) sixth->r2 = to_double(*f.sixth->r2);
  }
  auto rep = verify_selfmotion(d, radii, o.samples, sixth);

  std::ostringstream csv;
  write_trajectory_csv(csv, rep);
  if (o.out.empty()) std::cout << csv.str();
  else write_text(o.out, csv.str());

  std::map<int, int> dims;
  for (int k : rep.fiber_dimensions) ++dims[k];
  json fibers = json::object();
  for (auto [k, c] : dims) fibers[std::to_string(k)] = c;
  json radii_json = json::array();
  for (const auto& r : radii) radii_json.push_back(rational_json(r));
  json report{{"verdict", match.type == DuporcqType::Rec2 ? "duporcq-rec2" : "duporcq-rec3"},
              {"platform_map", affine_json(match.map)},
              {"radii2", radii_json},
              {"samples", rep.samples.size()},
              {"skipped", rep.skipped},
              {"max_residual", rep.max_residual},
              {"max_f0", rep.max_f0},
              {"tangent_angle", rep.tangent_angle},
              {"tangent_rank", rep.tangent_angle > 1e-3 ? 2 : 1},
              {"fiber_dimensions", fibers},
              {"failures", rep.failures}};
  if (sixth) report["sixth"] = {{"r2", rep.sixth_r2}, {"max_residual", rep.max_sixth_residual}};
  bool ok = rep.ok(o.tol_leg, o.tol_f0);
  report["ok"] = ok;
  (o.out.empty() ? std::cerr : std::cout) << report.dump(2) << "\n";
  return ok ? kOk : kInconsistent;
}

// ---------------------------------------------------------------------------

std::array<Rational, 5> random_radii(std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> num(1, 40), den(1, 7);
  std::array<Rational, 5> r;
  do {
    for (auto& x : r) x = make_rational(num(rng), den(rng));
  } while (r[0] == r[3] || r[1] == r[4]);
  return r;
}

int cmd_pipeline(const Options& o) {
  CanonicalInput in = canonical_from_json(read_json_file(o.input));
  ParamExpr p = ParamExpr::of(in.base, in.map);
  DesignExpr expr = canonical_design_expr(p, in.kappa);
  MPoly Ke = in.kappa == 2 ? compute_Ke(expr, canonical_Ke_weights(p)) : compute_Ke(expr);
  bool identity = in.map.mu1 == 1 && sgn(in.map.mu2) == 0 && in.map.mu3 == 1;

  json ke{{"terms", Ke.term_count()}, {"f_free", f_degree(Ke) <= 0}, {"quadratic_in_e", is_e_quadratic(Ke)}};
  if (in.kappa == 2) {
    MPoly ratio = exact_quotient(e_coefficient(Ke, 0, 3), p.B4 * p.B5 * p.U1() * p.U2());
    ke["e0e3_ratio"] = ratio.to_string();
  }

  auto rd = rank_drop_T(expr);
  json tj{{"T", rd.T.to_string()},
          {"epsilons", {{"e01", rd.eps01.to_string()}, {"e02", rd.eps02.to_string()}, {"e13", rd.eps13.to_string()},
                        {"e23", rd.eps23.to_string()}}}};
  if (in.kappa == 2) tj["matches_closed_form"] = rd.T == T_form(p).monic();

  json report;
  report["kappa"] = in.kappa;
  report["mu"] = {rational_json(in.map.mu1), rational_json(in.map.mu2), rational_json(in.map.mu3)};
  report["Ke"] = ke;
  report["T"] = tj;

  std::optional<DegeneracyForms> forms;
  if (in.kappa == 2) {
    forms = f1_f2(p);
    report["F1F2"] = {{"F1", forms->F1.to_string()},
                      {"F2", forms->F2.to_string()},
                      {"F1_zero", forms->F1.is_zero()},
                      {"F2_zero", forms->F2.is_zero()}};
  } else {
    report["F1F2"] = nullptr;
  }

  json ansatz;
  try {
    auto a = tangency_ansatz(Ke);
    ansatz = {{"contradiction", a.contradiction}, {"steps", a.steps}};
  } catch (const AnsatzSolvable& ex) {
    ansatz = {{"contradiction", false}, {"solvable", ex.what()}};
  }
  report["ansatz"] = ansatz;

  auto radii = random_radii(o.seed);
  MPoly::Assignment a;
  json rj = json::array();
  for (size_t k = 0; k < 5; ++k) {
    a[radius_names()[k]] = radii[k];
    rj.push_back(rational_json(radii[k]));
  }
  MPoly T = in.kappa == 2 ? T_form(p) : rd.T;
  auto chain = resultant_chain(Ke.specialize(a), T, N_poly());
  json cj{{"radii2", rj}, {"gcd", chain.gcd.to_string()}, {"identically_zero", chain.gcd.is_zero()}};
  if (forms && !chain.gcd.is_zero()) {
    auto fr = factor_report(chain.gcd, forms->F1, forms->F2);
    cj["factors"] = {{"F1", fr.F1_multiplicity},
                     {"F2", fr.F2_multiplicity},
                     {"cofactor", fr.cofactor.to_string()},
                     {"cofactor_constant", fr.cofactor_constant}};
  }
  report["chain"] = cj;

  if (identity) {
    MPoly G = derive_G(Ke);
    bool e_free = true;
    for (const auto& v : e_names()) e_free = e_free && !G.has_var(v);
    report["G"] = {{"terms", G.term_count()}, {"e_free", e_free}, {"G", G.to_string()}};
    report["conclusion"] = "motion-exists: the affinity is the identity and the self-motion lies on e0 = 0";
  } else {
    report["conclusion"] = "no 2-dimensional self-motion";
  }
  emit_json(report, o);
  return kOk;
}

// ---------------------------------------------------------------------------

int cmd_hexapod_check(const Options& o) {
  DesignFile f = load_design(o.input);
  HexapodDesign h;
  if (f.sixth) {
    h = HexapodDesign{f.design, f.sixth->M, f.sixth->m, f.sixth->r2};
  } else {
    h = duporcq_hexapod(f.design);
  }
  auto rep = arch_singularity_check(numeric_hexapod(h), o.samples, static_cast<unsigned>(o.seed));
  bool singular = rep.max_ratio <= o.tol_leg;
  json out{{"M6", point_json(h.M6)},
           {"m6", point_json(h.m6)},
           {"opposite_vertex_pairing", opposite_vertex_pairing_holds(h)},
           {"poses", rep.ratios.size()},
           {"max_singular_ratio", rep.max_ratio},
           {"architecturally_singular", singular}};
  emit_json(out, o);
  return singular ? kOk : kError;
}

// ---------------------------------------------------------------------------

int cmd_profile(const Options& o) {
  DesignFile f = load_design(o.input);
  Tuple5 M = f.design.planar_base(), m = f.design.planar_platform();
  auto prof = profile(M);
  std::vector<Rational> ts;
  int half = std::max(1, o.samples / 2);
  for (int k = -half; k <= half; ++k) ts.push_back(make_rational(k, 4));
  std::ostringstream csv;
  write_profile_csv(csv, prof, ts);
  if (o.out.empty()) std::cout << csv.str();
  else write_text(o.out, csv.str());

  json dirs = json::array();
  for (const auto& d : special_directions(M)) {
    auto c = ConicDirection::along(d.along);
    json e{{"label", std::string(1, d.label)}, {"color", d.color}};
    try {
      e["base"] = membership_json(line_membership(picture(M, c)));
    } catch (const Error& ex) {
      e["base"] = ex.what();
    }
    try {
      e["platform"] = membership_json(line_membership(picture(m, c)));
    } catch (const Error& ex) {
      e["platform"] = ex.what();
    }
    dirs.push_back(e);
  }
  json out{{"removed_factor", prof.removed.to_string()}, {"rows", ts.size()}, {"directions", dirs}};
  (o.out.empty() ? std::cerr : std::cout) << out.dump(2) << "\n";
  return kOk;
}

int cmd_svg(const Options& o) {
  DesignFile f = load_design(o.input);
  std::string svg = render_svg(f.design);
  if (o.out.empty()) std::cout << svg;
  else write_text(o.out, svg);
  return kOk;
}

int run(const std::function<int()>& body) {
  try {
    return body();
  } catch (const SchemaError& ex) {
    std::cerr << "schema error: " << ex.what() << "\n";
    return kSchema;
  } catch (const Unrealizable& ex) {
    std::cerr << "unrealizable: " << ex.what() << "\n";
    return kUnrealizable;
  } catch (const InconsistentSystem& ex) {
    std::cerr << "inconsistent: " << ex.what() << "\n";
    return kInconsistent;
  } catch (const DegenerateBase& ex) {
    std::cerr << "degenerate: " << ex.what() << "\n";
    return kDegenerate;
  } catch (const DegeneratePlatform& ex) {
    std::cerr << "degenerate: " << ex.what() << "\n";
    return kDegenerate;
  } catch (const InvalidAffineMap& ex) {
    std::cerr << "degenerate: " << ex.what() << "\n";
    return kDegenerate;
  } catch (const NonPlanar& ex) {
    std::cerr << "degenerate: " << ex.what() << "\n";
    return kDegenerate;
  } catch (const NotDuporcq& ex) {
    std::cerr << "not a Duporcq design: " << ex.what() << "\n";
    return kDegenerate;
  } catch (const CoincidentBase& ex) {
    std::cerr << "degenerate: " << ex.what() << "\n";
    return kDegenerate;
  } catch (const std::exception& ex) {
    std::cerr << "error: " << ex.what() << "\n";
    return kError;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Duporcq pentapod toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--seed", o.seed, "Random seed")->capture_default_str();
  app.add_option("--samples", o.samples, "Number of samples or poses")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--tol-leg", o.tol_leg, "Leg residual tolerance")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--tol-f0", o.tol_f0, "Tolerance for |f0|")->capture_default_str()->check(CLI::PositiveNumber);
  app.add_option("--out", o.out, "Output file");

  int code = kOk;
  auto add = [&](const char* name, const char* help, int (*fn)(const Options&)) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("input", o.input, "Design or parameter JSON")->required();
    sub->callback([&o, &code, fn] { code = run([&] { return fn(o); }); });
    return sub;
  };
  add("classify", "Classify a pentapod design", cmd_classify);
  auto* motion = add("motion", "Sample the self-motion to CSV", cmd_motion);
  motion->add_option("--r1", o.r1, "r1^2 (with --r2: derive motion radii)");
  motion->add_option("--r2", o.r2, "r2^2");
  add("pipeline", "Elimination report for canonical parameters", cmd_pipeline);
  add("hexapod-check", "Architectural singularity of the completed hexapod", cmd_hexapod_check);
  add("profile", "Profile curve and Moebius line memberships", cmd_profile);
  add("svg", "Render base and platform", cmd_svg);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }
  return code;
}
