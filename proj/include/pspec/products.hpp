#pragma once

#include <array>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "pspec/matrix.hpp"

namespace pspec {

/// T * S = TS + ST*
inline ComplexMatrix jordan_star(const ComplexMatrix& t, const ComplexMatrix& s) { return t * s + s * adjoint(t); }

/// [T o S]* = TS - ST*
inline ComplexMatrix skew_lie(const ComplexMatrix& t, const ComplexMatrix& s) { return t * s - s * adjoint(t); }

/// T <> S = TS* + S*T
inline ComplexMatrix diamond(const ComplexMatrix& t, const ComplexMatrix& s) {
  const ComplexMatrix sh = adjoint(s);
  return t * sh + sh * t;
}

/// T o* S = TS* - ST
inline ComplexMatrix circ_star(const ComplexMatrix& t, const ComplexMatrix& s) { return t * adjoint(s) - s * t; }

/// TS + ST
inline ComplexMatrix jordan_plain(const ComplexMatrix& t, const ComplexMatrix& s) { return t * s + s * t; }

/// [T1 * T2, T3]*
inline ComplexMatrix mixed_a(const ComplexMatrix& t1, const ComplexMatrix& t2, const ComplexMatrix& t3) {
  return skew_lie(jordan_star(t1, t2), t3);
}

/// (T1 <> T2) o* T3
inline ComplexMatrix mixed_b(const ComplexMatrix& t1, const ComplexMatrix& t2, const ComplexMatrix& t3) {
  return circ_star(diamond(t1, t2), t3);
}

enum class ProductKind { jordan_star, skew_lie, diamond, circ_star, jordan_plain, mixed_a, mixed_b };

inline constexpr std::array<ProductKind, 7> kAllProducts{ProductKind::jordan_star, ProductKind::skew_lie,
                                                         ProductKind::diamond,     ProductKind::circ_star,
                                                         ProductKind::jordan_plain, ProductKind::mixed_a,
                                                         ProductKind::mixed_b};

inline constexpr std::size_t arity(ProductKind k) {
  return (k == ProductKind::mixed_a || k == ProductKind::mixed_b) ? 3 : 2;
}

inline constexpr std::string_view name(ProductKind k) {
  switch (k) {
    case ProductKind::jordan_star: return "jordan_star";
    case ProductKind::skew_lie: return "skew_lie";
    case ProductKind::diamond: return "diamond";
    case ProductKind::circ_star: return "circ_star";
    case ProductKind::jordan_plain: return "jordan_plain";
    case ProductKind::mixed_a: return "mixed_A";
    case ProductKind::mixed_b: return "mixed_B";
  }
  return "?";
}

inline constexpr std::string_view formula(ProductKind k) {
  switch (k) {
    case ProductKind::jordan_star: return "T1*T2 + T2*adj(T1)";
    case ProductKind::skew_lie: return "T1*T2 - T2*adj(T1)";
    case ProductKind::diamond: return "T1*adj(T2) + adj(T2)*T1";
    case ProductKind::circ_star: return "T1*adj(T2) - T2*T1";
    case ProductKind::jordan_plain: return "T1*T2 + T2*T1";
    case ProductKind::mixed_a: return "skew_lie(jordan_star(T1,T2), T3)";
    case ProductKind::mixed_b: return "circ_star(diamond(T1,T2), T3)";
  }
  return "?";
}

inline std::optional<ProductKind> parse_product_kind(std::string_view s) {
  for (auto k : kAllProducts) {
    if (name(k) == s) return k;
  }
  if (s == "mixed_a") return ProductKind::mixed_a;
  if (s == "mixed_b") return ProductKind::mixed_b;
  return std::nullopt;
}

/// Evaluates a product on its operands; operand count must equal the arity.
inline ComplexMatrix apply_product(ProductKind k, std::span<const ComplexMatrix> ops) {
  if (ops.size() != arity(k)) {
    throw dimension_error(std::string(name(k)) + ": expected " + std::to_string(arity(k)) + " operands, got " +
                          std::to_string(ops.size()));
  }
  switch (k) {
    case ProductKind::jordan_star: return jordan_star(ops[0], ops[1]);
    case ProductKind::skew_lie: return skew_lie(ops[0], ops[1]);
    case ProductKind::diamond: return diamond(ops[0], ops[1]);
    case ProductKind::circ_star: return circ_star(ops[0], ops[1]);
    case ProductKind::jordan_plain: return jordan_plain(ops[0], ops[1]);
    case ProductKind::mixed_a: return mixed_a(ops[0], ops[1], ops[2]);
    case ProductKind::mixed_b: return mixed_b(ops[0], ops[1], ops[2]);
  }
  throw std::logic_error("apply_product: unknown kind");
}

/**
 * Closed-form spectrum of T(x(x)x) + (x(x)x)T for a unit vector x:
 * {0, <Tx,x> + sqrt(<T^2 x,x>), <Tx,x> - sqrt(<T^2 x,x>)} with the principal
 * square root. The formula assumes ||x|| = 1 (T = I gives 1 +- 1 only then),
 * so x is normalized here; a zero vector is rejected.
 */
inline std::array<cplx, 3> rank_one_jordan_spectrum(const ComplexMatrix& t, const ComplexVector& x) {
  if (x.size() != t.dim()) throw dimension_error("rank_one_jordan_spectrum: dimension mismatch");
  const double nrm = x.norm();
  if (nrm == 0.0) throw std::invalid_argument("rank_one_jordan_spectrum: zero vector");
  const ComplexVector u = (1.0 / nrm) * x;
  const ComplexVector tu = t * u;
  const cplx a = inner_product(tu, u);
  const cplx b = inner_product(t * tu, u);
  const cplx r = std::sqrt(b);
  return {cplx{0.0}, a + r, a - r};
}

}  // namespace pspec
