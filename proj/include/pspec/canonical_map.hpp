#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "pspec/matrix.hpp"
#include "pspec/predicates.hpp"
#include "pspec/svd.hpp"

namespace pspec {

enum class MapVariant { plain, transpose, entrywise_conjugate };

inline constexpr std::string_view name(MapVariant v) {
  switch (v) {
    case MapVariant::plain: return "plain";
    case MapVariant::transpose: return "transpose";
    case MapVariant::entrywise_conjugate: return "entrywise_conjugate";
  }
  return "?";
}

/**
 * The map T -> S * c * U f(T) U*, with f the identity, the transpose or
 * entrywise conjugation in the standard basis, U unitary and S (default I)
 * invertible.
 */
class CanonicalMap {
 public:
  explicit CanonicalMap(ComplexMatrix unitary, cplx scalar = 1.0, MapVariant variant = MapVariant::plain,
                        std::optional<ComplexMatrix> left_factor = std::nullopt)
      : scalar_(scalar), unitary_(std::move(unitary)), variant_(variant), left_(std::move(left_factor)) {
    if (!is_unitary(unitary_, 1e-10)) throw std::invalid_argument("CanonicalMap: U is not unitary");
    if (scalar_ == cplx{}) throw std::invalid_argument("CanonicalMap: scalar must be nonzero");
    if (left_) {
      if (left_->dim() != unitary_.dim()) throw dimension_error("CanonicalMap: left factor dimension mismatch");
      const auto s = singular_values(*left_);
      if (!(s.front() > 1e-12 * s.back())) throw std::invalid_argument("CanonicalMap: left factor is not invertible");
    }
  }

  static CanonicalMap identity(std::size_t n) { return CanonicalMap(ComplexMatrix::identity(n)); }

  [[nodiscard]] cplx scalar() const noexcept { return scalar_; }
  [[nodiscard]] const ComplexMatrix& unitary() const noexcept { return unitary_; }
  [[nodiscard]] MapVariant variant() const noexcept { return variant_; }
  [[nodiscard]] const std::optional<ComplexMatrix>& left_factor() const noexcept { return left_; }
  [[nodiscard]] std::size_t dim() const noexcept { return unitary_.dim(); }

  [[nodiscard]] ComplexMatrix operator()(const ComplexMatrix& t) const {
    if (t.dim() != unitary_.dim()) throw dimension_error("apply_map: dimension mismatch");
    ComplexMatrix f = variant_ == MapVariant::plain       ? t
                      : variant_ == MapVariant::transpose ? transpose(t)
                                                          : conjugate(t);
    ComplexMatrix out = unitary_ * f * adjoint(unitary_);
    out *= scalar_;
    if (left_) out = *left_ * out;
    return out;
  }

  [[nodiscard]] std::string describe() const {
    std::string s = "T -> ";
    if (left_) s += "S * ";
    s += "(" + std::to_string(scalar_.real()) + (scalar_.imag() < 0 ? "" : "+") + std::to_string(scalar_.imag()) + "i) * U ";
    s += variant_ == MapVariant::plain ? "T" : variant_ == MapVariant::transpose ? "T^t" : "conj(T)";
    s += " U*";
    return s;
  }

 private:
  cplx scalar_;
  ComplexMatrix unitary_;
  MapVariant variant_;
  std::optional<ComplexMatrix> left_;
};

inline ComplexMatrix apply_map(const CanonicalMap& m, const ComplexMatrix& t) { return m(t); }

}  // namespace pspec
