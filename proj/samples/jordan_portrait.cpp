// Pseudospectral portrait of the 2x2 nilpotent Jordan block at a few levels.
// Prints the mean contour radius next to sqrt(eps^2 + eps) and writes
// jordan_<eps>.csv with the contour points.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <string>

#include "pspec/contour.hpp"
#include "pspec/io.hpp"
#include "pspec/pseudospectrum.hpp"

int main() {
  const pspec::ComplexMatrix nil{{0.0, 1.0}, {0.0, 0.0}};
  for (double eps : {0.01, 0.1, 0.5}) {
    pspec::PseudoParams p;
    p.epsilon = eps;
    p.grid_nx = p.grid_ny = 201;
    const auto region = pspec::compute_region(nil, p);
    const auto polys = pspec::contour_extract(region);

    double sum = 0.0;
    std::size_t count = 0;
    for (const auto& poly : polys) {
      for (const auto& z : poly.points) {
        sum += std::abs(z);
        ++count;
      }
    }
    std::printf("eps %-5g  polylines %zu  mean radius %.5f  sqrt(eps^2+eps) %.5f\n", eps, polys.size(),
                count ? sum / static_cast<double>(count) : 0.0, std::sqrt(eps * eps + eps));

    std::ofstream out("jordan_" + pspec::format_double(eps) + ".csv");
    pspec::write_contours_csv(out, polys);
  }
}
