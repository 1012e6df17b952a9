#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "pspec/matrix.hpp"

namespace pspec {

/// Seeded generator shared by every ensemble; all harness randomness flows
/// through explicit seeds.
using Rng = std::mt19937_64;

namespace detail {
inline cplx complex_gaussian(Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  const double re = normal(rng);
  const double im = normal(rng);
  return {re * M_SQRT1_2, im * M_SQRT1_2};
}
}  // namespace detail

/// Ginibre sample: iid standard complex Gaussian entries (E|z|^2 = 1).
inline ComplexMatrix random_ginibre(std::size_t n, Rng& rng) {
  ComplexMatrix g(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) g(i, j) = detail::complex_gaussian(rng);
  return g;
}

inline ComplexMatrix random_ginibre(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_ginibre(n, rng);
}

inline ComplexMatrix random_hermitian(std::size_t n, Rng& rng) {
  const ComplexMatrix g = random_ginibre(n, rng);
  return 0.5 * (g + adjoint(g));
}

inline ComplexMatrix random_hermitian(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_hermitian(n, rng);
}

inline ComplexMatrix random_anti_hermitian(std::size_t n, Rng& rng) {
  const ComplexMatrix g = random_ginibre(n, rng);
  return 0.5 * (g - adjoint(g));
}

/**
 * Haar-distributed unitary: Gram-Schmidt (applied twice) on the columns of
 * a Ginibre sample. Gram-Schmidt yields R with a positive diagonal, which is
 * the normalization that makes Q Haar distributed.
 */
inline ComplexMatrix random_haar_unitary(std::size_t n, Rng& rng) {
  const ComplexMatrix g = random_ginibre(n, rng);
  std::vector<std::vector<cplx>> q(n, std::vector<cplx>(n));
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<cplx> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = g(i, j);
    for (int pass = 0; pass < 2; ++pass) {
      for (std::size_t k = 0; k < j; ++k) {
        cplx d{};
        for (std::size_t i = 0; i < n; ++i) d += std::conj(q[k][i]) * v[i];
        for (std::size_t i = 0; i < n; ++i) v[i] -= d * q[k][i];
      }
    }
    double nrm = 0.0;
    for (const auto& z : v) nrm += std::norm(z);
    nrm = std::sqrt(nrm);
    for (std::size_t i = 0; i < n; ++i) q[j][i] = v[i] / nrm;
  }
  ComplexMatrix u(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) u(i, j) = q[j][i];
  return u;
}

inline ComplexMatrix random_haar_unitary(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_haar_unitary(n, rng);
}

inline ComplexVector random_unit_vector(std::size_t n, Rng& rng) {
  ComplexVector x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = detail::complex_gaussian(rng);
  const double nrm = x.norm();
  x *= 1.0 / nrm;
  return x;
}

inline ComplexVector random_unit_vector(std::size_t n, std::uint64_t seed) {
  Rng rng(seed);
  return random_unit_vector(n, rng);
}

/// Normal matrix U D U* with Haar U and Ginibre-distributed eigenvalues.
inline ComplexMatrix random_normal(std::size_t n, Rng& rng) {
  std::vector<cplx> d(n);
  for (auto& z : d) z = detail::complex_gaussian(rng);
  const ComplexMatrix u = random_haar_unitary(n, rng);
  return u * ComplexMatrix::diagonal(d) * adjoint(u);
}

}  // namespace pspec
