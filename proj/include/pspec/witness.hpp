#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "pspec/eigen.hpp"
#include "pspec/random.hpp"
#include "pspec/region.hpp"
#include "pspec/svd.hpp"

namespace pspec {

struct WitnessCertificate {
  ComplexMatrix perturbation;
  /// ||A||_2, equal to s_min(lambda I - T).
  double norm = 0.0;
  double smin = 0.0;
  /// s_min(lambda I - (T + A)); zero up to rounding.
  double eigen_residual = 0.0;
};

/**
 * Minimal-norm rank-one perturbation making lambda an eigenvalue of T + A:
 * with (T - lambda I) v = s u, A = -s u v* gives (T + A - lambda I) v = 0 and
 * ||A||_2 = s. No perturbation of smaller norm can do this.
 */
inline ComplexMatrix perturbation_witness(const ComplexMatrix& t, cplx lambda) {
  const SingularTriplet trip = min_singular_triplet(-shifted(t, lambda));
  ComplexMatrix a = rank_one(trip.u, trip.v);
  a *= -trip.s;
  return a;
}

inline WitnessCertificate certify_witness(const ComplexMatrix& t, cplx lambda) {
  WitnessCertificate c;
  c.perturbation = perturbation_witness(t, lambda);
  c.smin = smallest_singular_value(shifted(t, lambda));
  c.norm = max_abs_entry(c.perturbation) == 0.0 ? 0.0 : operator_norm(c.perturbation);
  c.eigen_residual = smallest_singular_value(shifted(t + c.perturbation, lambda));
  return c;
}

/**
 * Under-approximation of sigma_eps(T) by sampling the union definition:
 * eigenvalues of T + A_k for Ginibre directions scaled to ||A_k||_2 = r_k eps,
 * r_k uniform on [0, 1].
 */
inline std::vector<cplx> union_oracle(const ComplexMatrix& t, double epsilon, std::size_t n_samples,
                                      std::uint64_t seed) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("union_oracle: epsilon must be positive");
  if (n_samples < 1) throw std::invalid_argument("union_oracle: need at least one sample");
  Rng rng(seed);
  std::uniform_real_distribution<double> radius(0.0, 1.0);
  std::vector<cplx> pts;
  pts.reserve(n_samples * t.dim());
  for (std::size_t k = 0; k < n_samples; ++k) {
    ComplexMatrix g = random_ginibre(t.dim(), rng);
    const double r = radius(rng);
    g *= epsilon * r / operator_norm(g);
    for (const auto& mu : eigenvalues(t + g)) pts.push_back(mu);
  }
  return pts;
}

}  // namespace pspec
