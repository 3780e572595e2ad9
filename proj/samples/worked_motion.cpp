// Samples the worked Duporcq pentapod and prints a short summary.

#include <cstdio>

#include "duporcq/selfmotion.hpp"

using namespace duporcq;

int main() {
  auto Q = [](long n, long d = 1) { return make_rational(n, d); };
  Tuple5 M = canonical_base(BaseParams(Q(0), Q(1), Q(2), Q(3))).points;
  auto d = PentapodDesign::planar(M, build_platform(M, 2, AffineMap2::identity()), {});
  auto radii = motion_radii(d, Q(1), Q(18));
  std::printf("r3^2 = %s\n", to_string(radii.r2[2]).c_str());

  auto hex = duporcq_hexapod(d);
  auto rep = verify_selfmotion(d, radii.r2, 50, SixthLeg{to_vec(hex.M6), to_vec(hex.m6), std::nullopt});
  std::printf("samples %zu, max leg residual %.3g, max |f0| %.3g\n", rep.samples.size(), rep.max_residual,
              rep.max_f0);
  std::printf("sixth leg r6^2 = %.12g (residual %.3g)\n", rep.sixth_r2, rep.max_sixth_residual);
  std::printf("tangent angle %.4f rad\n", rep.tangent_angle);
  return rep.ok(1e-9, 1e-12) ? 0 : 1;
}
