#pragma once

#include <algorithm>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "fracindex/error.hpp"
#include "fracindex/lab/gaussian.hpp"

namespace fracindex::lab {

using Complex = std::complex<double>;

inline Complex conj_of(const Complex& z) { return std::conj(z); }
inline GaussianRational conj_of(const GaussianRational& z) { return conj(z); }
inline bool is_zero_of(const Complex& z) { return z == Complex(0.0, 0.0); }
inline bool is_zero_of(const GaussianRational& z) { return z.is_zero(); }

/// Small dense row-major matrix over an exact or floating scalar.
template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, T(0)) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }
  static Matrix scalar(std::size_t n, const T& value) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = value;
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  bool is_zero() const {
    for (const auto& x : data_) {
      if (!is_zero_of(x)) return false;
    }
    return true;
  }

  T trace() const {
    T t(0);
    for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
    return t;
  }

  /// Conjugate transpose.
  Matrix adjoint() const {
    Matrix m(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r) {
      for (std::size_t c = 0; c < cols_; ++c) m(c, r) = conj_of((*this)(r, c));
    }
    return m;
  }

  Matrix& operator+=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
    return *this;
  }
  Matrix& operator-=(const Matrix& o) {
    check_same(o);
    for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
    return *this;
  }
  Matrix& operator*=(const T& s) {
    for (auto& x : data_) x *= s;
    return *this;
  }

  friend Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
  friend Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
  friend Matrix operator*(Matrix a, const T& s) { return a *= s; }
  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw Error(ErrorCode::kModelMismatch, "matrix product with incompatible shapes");
    Matrix c(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (is_zero_of(x)) continue;
        for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) += x * b(k, j);
      }
    }
    return c;
  }
  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  void check_same(const Matrix& o) const {
    if (rows_ != o.rows_ || cols_ != o.cols_) throw Error(ErrorCode::kModelMismatch, "matrix sum with incompatible shapes");
  }

  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using ExactMatrix = Matrix<GaussianRational>;
using NumericMatrix = Matrix<Complex>;

NumericMatrix to_numeric(const ExactMatrix& m);
ExactMatrix to_exact(const NumericMatrix& m);

/// Rank over Q(i) by exact Gauss-Jordan elimination.
std::size_t exact_rank(const ExactMatrix& m);
/// Exact inverse; throws kDomain for singular input.
ExactMatrix exact_inverse(const ExactMatrix& m);

}  // namespace fracindex::lab
