// Checks sigma_eps([T1 * T2, T3]*) under two maps: unitary conjugation, which
// preserves it, and T -> 2 T, which does not.

#include <cstdio>

#include "pspec/canonical_map.hpp"
#include "pspec/verify.hpp"

int main() {
  pspec::VerifyOptions opt;
  opt.dimension = 4;
  opt.trials = 3;
  opt.params.grid_nx = opt.params.grid_ny = 61;

  const auto u = pspec::random_haar_unitary(opt.dimension, 7);
  for (double s : {1.0, 2.0}) {
    const auto r = pspec::verify_theorem_2_1(pspec::CanonicalMap(u, s), opt);
    std::printf("s = %g: %-9s  max discrepancy %.3g  region Hausdorff %.3g\n", s, r.pass ? "preserved" : "changed",
                r.max_pointwise_discrepancy, r.max_region_hausdorff);
  }
}
