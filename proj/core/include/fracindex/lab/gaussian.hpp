#pragma once

#include <complex>
#include <iosfwd>
#include <string>
#include <string_view>

#include "fracindex/rational.hpp"

namespace fracindex::lab {

/// Exact complex number with rational real and imaginary parts.
struct GaussianRational {
  Rational re;
  Rational im;

  GaussianRational() = default;
  GaussianRational(Rational r) : re(std::move(r)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(int r) : re(r) {}                  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational r, Rational i) : re(std::move(r)), im(std::move(i)) {}

  /// Exact value of a finite complex double.
  static GaussianRational from_complex(std::complex<double> z);
  /// Parses "3", "-1/2", "i", "-2i", "1+2i", "(1/2-3/4i)".
  static GaussianRational parse(std::string_view text);

  bool is_zero() const { return re.is_zero() && im.is_zero(); }
  bool is_real() const { return im.is_zero(); }
  std::complex<double> to_complex() const { return {re.to_double(), im.to_double()}; }
  std::string str() const;
  Rational norm() const { return re * re + im * im; }

  GaussianRational operator-() const { return {-re, -im}; }
  GaussianRational& operator+=(const GaussianRational& o);
  GaussianRational& operator-=(const GaussianRational& o);
  GaussianRational& operator*=(const GaussianRational& o);
  GaussianRational& operator/=(const GaussianRational& o);

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend GaussianRational operator/(GaussianRational a, const GaussianRational& b) { return a /= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) { return a.re == b.re && a.im == b.im; }
};

GaussianRational conj(const GaussianRational& z);
std::ostream& operator<<(std::ostream& os, const GaussianRational& z);

}  // namespace fracindex::lab
