#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "pspec/matrix.hpp"

namespace pspec {

namespace detail {

// Householder reduction to upper Hessenberg form, in place.
inline void hessenberg_reduce(ComplexMatrix& h) {
  const std::size_t n = h.dim();
  if (n < 3) return;
  std::vector<cplx> w(n);
  for (std::size_t k = 0; k + 2 < n; ++k) {
    double tail = 0.0;
    for (std::size_t i = k + 2; i < n; ++i) tail += std::norm(h(i, k));
    if (tail == 0.0) continue;

    const cplx x0 = h(k + 1, k);
    const double alpha = std::sqrt(std::norm(x0) + tail);
    const cplx phase = (x0 == cplx{}) ? cplx{1.0} : x0 / std::abs(x0);
    // w = x + phase * alpha * e1, reflector P = I - 2 w w* / (w* w)
    std::fill(w.begin(), w.end(), cplx{});
    w[k + 1] = x0 + phase * alpha;
    for (std::size_t i = k + 2; i < n; ++i) w[i] = h(i, k);
    double wn = 0.0;
    for (std::size_t i = k + 1; i < n; ++i) wn += std::norm(w[i]);
    const double scale = 2.0 / wn;

    // H <- P H
    for (std::size_t j = k; j < n; ++j) {
      cplx d{};
      for (std::size_t i = k + 1; i < n; ++i) d += std::conj(w[i]) * h(i, j);
      d *= scale;
      for (std::size_t i = k + 1; i < n; ++i) h(i, j) -= w[i] * d;
    }
    // H <- H P
    for (std::size_t i = 0; i < n; ++i) {
      cplx d{};
      for (std::size_t j = k + 1; j < n; ++j) d += h(i, j) * w[j];
      d *= scale;
      for (std::size_t j = k + 1; j < n; ++j) h(i, j) -= d * std::conj(w[j]);
    }
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = 0.0;
  }
}

// Eigenvalue of the 2x2 block [[a, b], [c, d]] closer to d.
inline cplx wilkinson_shift(cplx a, cplx b, cplx c, cplx d) {
  const cplx half_tr = 0.5 * (a + d);
  const cplx det = a * d - b * c;
  const cplx disc = std::sqrt(half_tr * half_tr - det);
  const cplx l1 = half_tr + disc;
  const cplx l2 = half_tr - disc;
  return std::abs(l1 - d) < std::abs(l2 - d) ? l1 : l2;
}

}  // namespace detail

/**
 * All n eigenvalues of A (with multiplicity), in the order they deflate.
 *
 * Hessenberg reduction followed by single-shift complex QR with Wilkinson
 * shifts and ad-hoc exceptional shifts. Only the active window is updated,
 * since no Schur vectors are produced.
 */
inline std::vector<cplx> eigenvalues(const ComplexMatrix& a) {
  const std::size_t n = a.dim();
  ComplexMatrix h = a;
  detail::hessenberg_reduce(h);

  std::vector<cplx> out;
  out.reserve(n);
  const double eps = std::numeric_limits<double>::epsilon();
  const double anorm = std::max(frobenius_norm(a), std::numeric_limits<double>::min());

  std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(n) - 1;
  int iter = 0;
  const int max_iter = 60 * static_cast<int>(std::max<std::size_t>(n, 1));
  int total_iter = 0;

  std::vector<double> cs(n);
  std::vector<cplx> sn(n);

  while (hi >= 0) {
    // Find the start of the unreduced block ending at hi.
    std::ptrdiff_t lo = hi;
    while (lo > 0) {
      const double sub = std::abs(h(lo, lo - 1));
      double ref = std::abs(h(lo, lo)) + std::abs(h(lo - 1, lo - 1));
      if (ref == 0.0) ref = anorm;
      if (sub <= eps * ref) {
        h(lo, lo - 1) = 0.0;
        break;
      }
      --lo;
    }

    if (lo == hi) {
      out.push_back(h(hi, hi));
      --hi;
      iter = 0;
      continue;
    }

    if (++total_iter > max_iter * static_cast<int>(n)) throw convergence_error("eigenvalues: QR iteration did not converge");
    ++iter;

    cplx mu;
    if (iter % 11 == 0) {
      mu = h(hi, hi) + cplx(0.75 * std::abs(h(hi, hi - 1)), 0.5 * std::abs(h(hi, hi - 1)));
    } else {
      mu = detail::wilkinson_shift(h(hi - 1, hi - 1), h(hi - 1, hi), h(hi, hi - 1), h(hi, hi));
    }

    // Explicit shifted QR step on rows/cols lo..hi: H - mu I = QR, H <- RQ + mu I.
    for (std::ptrdiff_t k = lo; k <= hi; ++k) h(k, k) -= mu;
    for (std::ptrdiff_t k = lo; k < hi; ++k) {
      const cplx x = h(k, k);
      const cplx y = h(k + 1, k);
      const double r = std::hypot(std::abs(x), std::abs(y));
      double c;
      cplx s;
      if (r == 0.0) {
        c = 1.0;
        s = 0.0;
      } else {
        c = std::abs(x) / r;
        const cplx xp = (x == cplx{}) ? cplx{1.0} : x / std::abs(x);
        s = xp * std::conj(y) / r;
      }
      cs[k] = c;
      sn[k] = s;
      // G = [[c, s], [-conj(s), c]] applied to rows k, k+1
      for (std::ptrdiff_t j = k; j <= hi; ++j) {
        const cplx t1 = h(k, j);
        const cplx t2 = h(k + 1, j);
        h(k, j) = c * t1 + s * t2;
        h(k + 1, j) = -std::conj(s) * t1 + c * t2;
      }
    }
    for (std::ptrdiff_t k = lo; k < hi; ++k) {
      const double c = cs[k];
      const cplx s = sn[k];
      // apply G* on the right to columns k, k+1
      const std::ptrdiff_t row_end = std::min(k + 2, hi);
      for (std::ptrdiff_t i = lo; i <= row_end; ++i) {
        const cplx t1 = h(i, k);
        const cplx t2 = h(i, k + 1);
        h(i, k) = c * t1 + std::conj(s) * t2;
        h(i, k + 1) = -s * t1 + c * t2;
      }
    }
    for (std::ptrdiff_t k = lo; k <= hi; ++k) h(k, k) += mu;
  }
  return out;
}

}  // namespace pspec
