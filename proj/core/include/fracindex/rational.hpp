#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace fracindex {

using BigInt = mpz_class;

/// Exact fraction over arbitrary-precision integers. Always canonical:
/// lowest terms, positive denominator, zero stored as 0/1.
class Rational {
 public:
  Rational() = default;
  Rational(int n) : value_(n) {}            // NOLINT(google-explicit-constructor)
  Rational(long n) : value_(n) {}           // NOLINT(google-explicit-constructor)
  Rational(long long n);                    // NOLINT(google-explicit-constructor)
  Rational(const BigInt& n) : value_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(const BigInt& num, const BigInt& den);
  Rational(long long num, long long den);

  /// Exact value of a finite double (a dyadic rational).
  static Rational from_double(double x);

  /// Accepts "p", "p/q" and plain decimals such as "-0.125".
  static Rational parse(std::string_view text);

  /// Canonical text form: "p" for integers, "p/q" otherwise.
  std::string str() const;

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }
  double to_double() const { return value_.get_d(); }

  Rational abs() const;
  Rational inverse() const;
  Rational pow(int exponent) const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  explicit Rational(mpq_class v) : value_(std::move(v)) {}
  mpq_class value_;
};

std::ostream& operator<<(std::ostream& os, const Rational& r);

/// n! as an exact integer.
BigInt factorial(unsigned n);
/// Binomial coefficient C(n, k), zero outside 0 <= k <= n.
BigInt binomial(long n, long k);

}  // namespace fracindex
