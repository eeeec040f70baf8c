#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "fracindex/rational.hpp"
#include "fracindex/ring_model.hpp"

namespace fracindex {

/// An element of a RingModel. Coefficients are stored densely over the
/// ring's degree-sorted basis, so each homogeneous component is a
/// contiguous block.
class CohClass {
 public:
  explicit CohClass(RingPtr ring);
  CohClass(RingPtr ring, std::vector<Rational> coefficients);

  static CohClass constant(RingPtr ring, const Rational& value);
  static CohClass monomial(RingPtr ring, std::size_t index, const Rational& coeff = 1);
  /// Monomial by name, e.g. "x^2".
  static CohClass monomial(RingPtr ring, std::string_view name, const Rational& coeff = 1);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const Rational& coefficient(std::size_t index) const { return coeffs_[index]; }

  /// Coefficients of the degree-d component over that degree's basis block.
  std::span<const Rational> component_coefficients(int degree) const;
  /// The degree-d homogeneous part as a class.
  CohClass component(int degree) const;
  /// Sum of the components of degree <= d.
  CohClass truncated(int degree) const;

  bool is_zero() const;
  bool is_homogeneous(int degree) const;

  /// Human-readable form, e.g. "1 - 1/8*x^2".
  std::string str() const;

  CohClass operator-() const;
  CohClass& operator+=(const CohClass& rhs);
  CohClass& operator-=(const CohClass& rhs);
  CohClass& operator*=(const Rational& scalar);

  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator*(CohClass a, const Rational& s) { return a *= s; }
  friend CohClass operator*(const Rational& s, CohClass a) { return a *= s; }
  friend CohClass operator*(const CohClass& a, const CohClass& b);

  /// Exact equality; classes over structurally different rings never compare equal.
  friend bool operator==(const CohClass& a, const CohClass& b);

 private:
  RingPtr ring_;
  std::vector<Rational> coeffs_;
};

/// Graded product truncated above the top degree.
CohClass ring_mul(const CohClass& a, const CohClass& b);

/// sum_k a^k / k!; `a` must have no degree-0 part.
CohClass exp_class(const CohClass& a);

/// The fundamental-class pairing applied to the top-degree component.
Rational integrate(const CohClass& a);

CohClass power(const CohClass& a, int k);

}  // namespace fracindex
