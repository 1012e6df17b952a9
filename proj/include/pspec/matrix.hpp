#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace pspec {

using cplx = std::complex<double>;

inline constexpr cplx kI{0.0, 1.0};

/// Operands of incompatible dimension, or otherwise malformed input.
class dimension_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A factorization failed to converge. Never expected for n <= 64.
class convergence_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace detail {

inline bool is_finite(const cplx& z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

inline void require_finite(std::span<const cplx> values, const char* what) {
  for (const auto& z : values) {
    if (!is_finite(z)) throw std::invalid_argument(std::string(what) + ": non-finite entry");
  }
}

}  // namespace detail

/**
 * Dense complex vector. Entries are always finite.
 */
class ComplexVector {
 public:
  ComplexVector() = default;
  explicit ComplexVector(std::size_t n) : data_(n) {}
  ComplexVector(std::initializer_list<cplx> values) : data_(values) {
    detail::require_finite(data_, "ComplexVector");
  }
  explicit ComplexVector(std::vector<cplx> values) : data_(std::move(values)) {
    detail::require_finite(data_, "ComplexVector");
  }

  static ComplexVector basis(std::size_t n, std::size_t k) {
    ComplexVector e(n);
    e.data_.at(k) = 1.0;
    return e;
  }

  [[nodiscard]] std::size_t size() const noexcept { return data_.size(); }
  cplx& operator[](std::size_t i) { return data_[i]; }
  const cplx& operator[](std::size_t i) const { return data_[i]; }
  [[nodiscard]] std::span<const cplx> values() const noexcept { return data_; }
  [[nodiscard]] std::span<cplx> values() noexcept { return data_; }

  [[nodiscard]] double norm() const {
    double s = 0.0;
    for (const auto& z : data_) s += std::norm(z);
    return std::sqrt(s);
  }

  ComplexVector& operator*=(cplx a) {
    for (auto& z : data_) z *= a;
    return *this;
  }
  friend ComplexVector operator*(cplx a, ComplexVector v) { return v *= a; }

  friend bool operator==(const ComplexVector&, const ComplexVector&) = default;

 private:
  std::vector<cplx> data_;
};

/**
 * Square dense complex matrix, row-major. The dimension is fixed at
 * construction; the logical basis defining transpose and entrywise
 * conjugation is the standard one.
 */
class ComplexMatrix {
 public:
  ComplexMatrix() = default;

  /// Zero matrix of dimension n (n >= 1).
  explicit ComplexMatrix(std::size_t n) : n_(n), data_(n * n) {
    if (n == 0) throw dimension_error("ComplexMatrix: dimension must be >= 1");
  }

  /// Row-major entries; rejects non-square sizes and non-finite values.
  ComplexMatrix(std::size_t n, std::vector<cplx> row_major) : n_(n), data_(std::move(row_major)) {
    if (n == 0) throw dimension_error("ComplexMatrix: dimension must be >= 1");
    if (data_.size() != n * n) throw dimension_error("ComplexMatrix: expected n*n entries");
    detail::require_finite(data_, "ComplexMatrix");
  }

  ComplexMatrix(std::initializer_list<std::initializer_list<cplx>> rows) : n_(rows.size()) {
    if (n_ == 0) throw dimension_error("ComplexMatrix: dimension must be >= 1");
    data_.reserve(n_ * n_);
    for (const auto& row : rows) {
      if (row.size() != n_) throw dimension_error("ComplexMatrix: rows must have n entries");
      data_.insert(data_.end(), row.begin(), row.end());
    }
    detail::require_finite(data_, "ComplexMatrix");
  }

  static ComplexMatrix identity(std::size_t n) { return scalar(n, 1.0); }

  static ComplexMatrix scalar(std::size_t n, cplx alpha) {
    ComplexMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = alpha;
    return m;
  }

  static ComplexMatrix diagonal(std::span<const cplx> d) {
    ComplexMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }
  static ComplexMatrix diagonal(std::initializer_list<cplx> d) {
    return diagonal(std::span<const cplx>(d.begin(), d.size()));
  }

  [[nodiscard]] std::size_t dim() const noexcept { return n_; }

  cplx& operator()(std::size_t i, std::size_t j) { return data_[i * n_ + j]; }
  const cplx& operator()(std::size_t i, std::size_t j) const { return data_[i * n_ + j]; }

  [[nodiscard]] std::span<const cplx> values() const noexcept { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& b) {
    check_same(b, "add");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += b.data_[k];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& b) {
    check_same(b, "sub");
    for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= b.data_[k];
    return *this;
  }
  ComplexMatrix& operator*=(cplx a) {
    for (auto& z : data_) z *= a;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator-(ComplexMatrix a) { return a *= -1.0; }
  friend ComplexMatrix operator*(cplx s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, cplx s) { return a *= s; }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    a.check_same(b, "mul");
    const std::size_t n = a.n_;
    ComplexMatrix c(n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t k = 0; k < n; ++k) {
        const cplx aik = a(i, k);
        if (aik == cplx{}) continue;
        for (std::size_t j = 0; j < n; ++j) c(i, j) += aik * b(k, j);
      }
    }
    return c;
  }

  friend ComplexVector operator*(const ComplexMatrix& a, const ComplexVector& x) {
    if (x.size() != a.n_) throw dimension_error("mul: matrix/vector dimension mismatch");
    ComplexVector y(a.n_);
    for (std::size_t i = 0; i < a.n_; ++i) {
      cplx s{};
      for (std::size_t j = 0; j < a.n_; ++j) s += a(i, j) * x[j];
      y[i] = s;
    }
    return y;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  void check_same(const ComplexMatrix& b, const char* op) const {
    if (n_ != b.n_) {
      throw dimension_error(std::string(op) + ": dimension mismatch (" + std::to_string(n_) + " vs " +
                            std::to_string(b.n_) + ")");
    }
  }

  std::size_t n_ = 0;
  std::vector<cplx> data_;
};

inline ComplexMatrix add(const ComplexMatrix& a, const ComplexMatrix& b) { return a + b; }
inline ComplexMatrix sub(const ComplexMatrix& a, const ComplexMatrix& b) { return a - b; }
inline ComplexMatrix mul(const ComplexMatrix& a, const ComplexMatrix& b) { return a * b; }

inline ComplexMatrix transpose(const ComplexMatrix& a) {
  ComplexMatrix t(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) t(j, i) = a(i, j);
  return t;
}

inline ComplexMatrix conjugate(const ComplexMatrix& a) {
  ComplexMatrix c(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) c(i, j) = std::conj(a(i, j));
  return c;
}

inline ComplexMatrix adjoint(const ComplexMatrix& a) {
  ComplexMatrix h(a.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) h(j, i) = std::conj(a(i, j));
  return h;
}

inline cplx trace(const ComplexMatrix& a) {
  cplx s{};
  for (std::size_t i = 0; i < a.dim(); ++i) s += a(i, i);
  return s;
}

/// <x, y> = sum x_i conj(y_i); linear in x, conjugate-linear in y.
inline cplx inner_product(const ComplexVector& x, const ComplexVector& y) {
  if (x.size() != y.size()) throw dimension_error("inner_product: dimension mismatch");
  cplx s{};
  for (std::size_t i = 0; i < x.size(); ++i) s += x[i] * std::conj(y[i]);
  return s;
}

/// x (x) y, the operator z -> <z, y> x.
inline ComplexMatrix rank_one(const ComplexVector& x, const ComplexVector& y) {
  if (x.size() != y.size()) throw dimension_error("rank_one: dimension mismatch");
  ComplexMatrix m(x.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = x[i] * std::conj(y[j]);
  return m;
}

inline double frobenius_norm(const ComplexMatrix& a) {
  double s = 0.0;
  for (const auto& z : a.values()) s += std::norm(z);
  return std::sqrt(s);
}

inline double max_abs_entry(const ComplexMatrix& a) {
  double m = 0.0;
  for (const auto& z : a.values()) m = std::max(m, std::abs(z));
  return m;
}

/// lambda I - a
inline ComplexMatrix shifted(const ComplexMatrix& a, cplx lambda) {
  ComplexMatrix m = -a;
  for (std::size_t i = 0; i < a.dim(); ++i) m(i, i) += lambda;
  return m;
}

}  // namespace pspec
