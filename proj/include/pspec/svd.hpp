#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <vector>

#include "pspec/matrix.hpp"

namespace pspec {

/// Result of a full singular value decomposition A = U diag(s) V*.
/// Singular values are sorted ascending; column k of u/v pairs with s[k].
struct SvdResult {
  std::vector<double> s;
  std::vector<ComplexVector> u;
  std::vector<ComplexVector> v;
};

struct SingularTriplet {
  double s = 0.0;
  ComplexVector u;
  ComplexVector v;
};

namespace detail {

// One-sided (Hestenes) Jacobi on the columns of A. Columns are kept in
// column-major scratch so every rotation touches contiguous memory.
class JacobiSvd {
 public:
  JacobiSvd(const ComplexMatrix& a, bool want_vectors) : n_(a.dim()), want_v_(want_vectors), cols_(n_ * n_) {
    for (std::size_t j = 0; j < n_; ++j)
      for (std::size_t i = 0; i < n_; ++i) cols_[j * n_ + i] = a(i, j);
    if (want_v_) {
      v_.assign(n_ * n_, cplx{});
      for (std::size_t j = 0; j < n_; ++j) v_[j * n_ + j] = 1.0;
    }
    run();
  }

  [[nodiscard]] double column_norm(std::size_t j) const {
    double s = 0.0;
    for (std::size_t i = 0; i < n_; ++i) s += std::norm(cols_[j * n_ + i]);
    return std::sqrt(s);
  }

  [[nodiscard]] ComplexVector left(std::size_t j, double sigma) const {
    ComplexVector u(n_);
    if (sigma > 0.0) {
      for (std::size_t i = 0; i < n_; ++i) u[i] = cols_[j * n_ + i] / sigma;
    } else {
      // A v = 0; any unit vector satisfies the residual contract.
      u[j] = 1.0;
    }
    return u;
  }

  [[nodiscard]] ComplexVector right(std::size_t j) const {
    ComplexVector v(n_);
    for (std::size_t i = 0; i < n_; ++i) v[i] = v_[j * n_ + i];
    return v;
  }

  [[nodiscard]] std::size_t dim() const noexcept { return n_; }

 private:
  void run() {
    constexpr int kMaxSweeps = 80;
    const double tol = static_cast<double>(n_) * std::numeric_limits<double>::epsilon();
    if (n_ == 1) return;

    for (int sweep = 0; sweep < kMaxSweeps; ++sweep) {
      bool rotated = false;
      for (std::size_t p = 0; p + 1 < n_; ++p) {
        for (std::size_t q = p + 1; q < n_; ++q) rotated |= rotate(p, q, tol);
      }
      if (!rotated) return;
    }
    throw convergence_error("JacobiSvd: no convergence");
  }

  bool rotate(std::size_t p, std::size_t q, double tol) {
    cplx* ap = &cols_[p * n_];
    cplx* aq = &cols_[q * n_];
    double alpha = 0.0, beta = 0.0;
    cplx gamma{};
    for (std::size_t i = 0; i < n_; ++i) {
      alpha += std::norm(ap[i]);
      beta += std::norm(aq[i]);
      gamma += std::conj(ap[i]) * aq[i];
    }
    const double g = std::abs(gamma);
    if (g == 0.0 || g <= tol * std::sqrt(alpha * beta)) return false;

    // Rotate the phase out of gamma, then apply the real symmetric Jacobi rotation.
    const cplx phase = std::conj(gamma) / g;
    const double zeta = (beta - alpha) / (2.0 * g);
    const double t = std::copysign(1.0, zeta) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
    const double c = 1.0 / std::sqrt(1.0 + t * t);
    const double s = c * t;

    for (std::size_t i = 0; i < n_; ++i) {
      const cplx x = ap[i];
      const cplx y = aq[i] * phase;
      ap[i] = c * x - s * y;
      aq[i] = s * x + c * y;
    }
    if (want_v_) {
      cplx* vp = &v_[p * n_];
      cplx* vq = &v_[q * n_];
      for (std::size_t i = 0; i < n_; ++i) {
        const cplx x = vp[i];
        const cplx y = vq[i] * phase;
        vp[i] = c * x - s * y;
        vq[i] = s * x + c * y;
      }
    }
    return true;
  }

  std::size_t n_;
  bool want_v_;
  std::vector<cplx> cols_;
  std::vector<cplx> v_;
};

}  // namespace detail

/// Singular values in ascending order.
inline std::vector<double> singular_values(const ComplexMatrix& a) {
  detail::JacobiSvd svd(a, false);
  std::vector<double> s(svd.dim());
  for (std::size_t j = 0; j < s.size(); ++j) s[j] = svd.column_norm(j);
  std::sort(s.begin(), s.end());
  return s;
}

inline double smallest_singular_value(const ComplexMatrix& a) {
  detail::JacobiSvd svd(a, false);
  double m = std::numeric_limits<double>::infinity();
  for (std::size_t j = 0; j < svd.dim(); ++j) m = std::min(m, svd.column_norm(j));
  return m;
}

/// Spectral norm, i.e. the largest singular value.
inline double operator_norm(const ComplexMatrix& a) { return singular_values(a).back(); }

inline SvdResult svd(const ComplexMatrix& a) {
  detail::JacobiSvd jac(a, true);
  const std::size_t n = jac.dim();
  std::vector<double> norms(n);
  for (std::size_t j = 0; j < n; ++j) norms[j] = jac.column_norm(j);
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return norms[x] < norms[y]; });

  SvdResult r;
  for (std::size_t j : order) {
    r.s.push_back(norms[j]);
    r.u.push_back(jac.left(j, norms[j]));
    r.v.push_back(jac.right(j));
  }
  return r;
}

/// (s_min, u, v) with A v = s_min u and unit u, v.
inline SingularTriplet min_singular_triplet(const ComplexMatrix& a) {
  detail::JacobiSvd jac(a, true);
  std::size_t best = 0;
  double s = jac.column_norm(0);
  for (std::size_t j = 1; j < jac.dim(); ++j) {
    const double c = jac.column_norm(j);
    if (c < s) {
      s = c;
      best = j;
    }
  }
  return {s, jac.left(best, s), jac.right(best)};
}

}  // namespace pspec
