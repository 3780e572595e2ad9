// Regenerates the design files in this directory:
//   write-sample-designs <dir>

#include <fstream>
#include <iostream>

#include "duporcq/io.hpp"

using namespace duporcq;

namespace {

Rational Q(long n, long d = 1) { return make_rational(n, d); }

void save(const std::string& path, const json& j) {
  std::ofstream(path) << j.dump(2) << "\n";
  std::cout << "wrote " << path << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  std::string dir = argc > 1 ? argv[1] : ".";
  BaseParams b(Q(0), Q(1), Q(2), Q(3));
  Tuple5 M = canonical_base(b).points;
  std::array<Rational, 5> radii{Q(1), Q(18), Q(18, 25), Q(1), Q(18)};

  DesignFile worked{PentapodDesign::planar(M, build_platform(M, 2, AffineMap2::identity()), radii), std::nullopt};
  save(dir + "/worked_design.json", design_to_json(worked));

  DesignFile perturbed = worked;
  perturbed.design.radii2[1] = Q(18001, 1000);
  save(dir + "/worked_perturbed_r2.json", design_to_json(perturbed));

  DesignFile hexapod = worked;
  auto h = duporcq_hexapod(worked.design);
  hexapod.sixth = SixthLegEntry{h.M6, h.m6, Q(18, 25)};
  save(dir + "/worked_hexapod.json", design_to_json(hexapod));

  DesignFile same{PentapodDesign::planar(M, M, radii), std::nullopt};
  save(dir + "/base_equals_platform.json", design_to_json(same));

  DesignFile stretched{PentapodDesign::planar(M, build_platform(M, 2, AffineMap2(Q(2), Q(0), Q(1))), radii),
                       std::nullopt};
  save(dir + "/stretched_mu1_2.json", design_to_json(stretched));

  json identity{{"params", {{"A4", "0"}, {"B4", "1"}, {"A5", "2"}, {"B5", "3"}, {"mu", {"1", "0", "1"}}, {"kappa", 2}}}};
  save(dir + "/params_identity.json", identity);
  json generic{{"params", {{"A4", "0"}, {"B4", "1"}, {"A5", "2"}, {"B5", "3"}, {"mu", {"2", "1/3", "3/2"}}, {"kappa", 2}}}};
  save(dir + "/params_generic.json", generic);
  return 0;
}
