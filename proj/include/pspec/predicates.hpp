#pragma once

#include "pspec/matrix.hpp"
#include "pspec/svd.hpp"

namespace pspec {

// Each predicate holds iff its defining residual, measured in the spectral
// norm, is at most tol * (1 + ||A||_2).

namespace detail {
inline bool residual_within(const ComplexMatrix& residual, const ComplexMatrix& a, double tol) {
  if (tol < 0.0) throw std::invalid_argument("tolerance must be non-negative");
  const double r = max_abs_entry(residual) == 0.0 ? 0.0 : operator_norm(residual);
  return r <= tol * (1.0 + operator_norm(a));
}
}  // namespace detail

inline bool is_normal(const ComplexMatrix& a, double tol) {
  const ComplexMatrix ah = adjoint(a);
  return detail::residual_within(a * ah - ah * a, a, tol);
}

inline bool is_hermitian(const ComplexMatrix& a, double tol) { return detail::residual_within(a - adjoint(a), a, tol); }

inline bool is_anti_hermitian(const ComplexMatrix& a, double tol) {
  return detail::residual_within(a + adjoint(a), a, tol);
}

inline bool is_unitary(const ComplexMatrix& a, double tol) {
  return detail::residual_within(a * adjoint(a) - ComplexMatrix::identity(a.dim()), a, tol);
}

}  // namespace pspec
