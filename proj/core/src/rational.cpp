#include "fracindex/rational.hpp"

#include <cctype>
#include <cmath>
#include <ostream>

#include "fracindex/error.hpp"

namespace fracindex {
namespace {

bool is_integer_literal(std::string_view s) {
  std::size_t i = 0;
  if (i < s.size() && (s[i] == '+' || s[i] == '-')) ++i;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

BigInt parse_integer(std::string_view s, std::string_view whole) {
  if (!is_integer_literal(s)) {
    throw Error(ErrorCode::kParse, "malformed rational '" + std::string(whole) + "'");
  }
  std::string digits(s);
  if (digits.front() == '+') digits.erase(0, 1);
  return BigInt(digits, 10);
}

}  // namespace

Rational::Rational(long long n) : value_(static_cast<long>(n)) {}

Rational::Rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw Error(ErrorCode::kDomain, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational::Rational(long long num, long long den)
    : Rational(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den))) {}

Rational Rational::from_double(double x) {
  if (!std::isfinite(x)) throw Error(ErrorCode::kDomain, "non-finite double has no rational value");
  return Rational(mpq_class(x));
}

Rational Rational::parse(std::string_view text) {
  std::string_view s = text;
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  if (s.empty()) throw Error(ErrorCode::kParse, "empty rational literal");

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const BigInt num = parse_integer(s.substr(0, slash), text);
    const std::string_view den_text = s.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
      throw Error(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
    }
    const BigInt den = parse_integer(den_text, text);
    if (den == 0) throw Error(ErrorCode::kDomain, "rational with zero denominator: '" + std::string(text) + "'");
    return Rational(num, den);
  }

  if (const auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view int_part = s.substr(0, dot);
    const std::string_view frac_part = s.substr(dot + 1);
    bool negative = false;
    if (!int_part.empty() && (int_part.front() == '-' || int_part.front() == '+')) {
      negative = int_part.front() == '-';
      int_part.remove_prefix(1);
    }
    if (int_part.empty() && frac_part.empty()) {
      throw Error(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
    }
    for (char c : frac_part) {
      if (!std::isdigit(static_cast<unsigned char>(c))) {
        throw Error(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
      }
    }
    const BigInt whole = int_part.empty() ? BigInt(0) : parse_integer(int_part, text);
    if (whole < 0) throw Error(ErrorCode::kParse, "malformed rational '" + std::string(text) + "'");
    BigInt scale = 1;
    BigInt frac = 0;
    for (char c : frac_part) {
      scale *= 10;
      frac = frac * 10 + (c - '0');
    }
    Rational r(whole * scale + frac, scale);
    return negative ? -r : r;
  }

  return Rational(parse_integer(s, text));
}

std::string Rational::str() const {
  if (is_integer()) return value_.get_num().get_str();
  return value_.get_num().get_str() + "/" + value_.get_den().get_str();
}

Rational Rational::abs() const { return Rational(mpq_class(::abs(value_))); }

Rational Rational::inverse() const {
  if (is_zero()) throw Error(ErrorCode::kDomain, "inverse of zero");
  mpq_class inv;
  mpq_inv(inv.get_mpq_t(), value_.get_mpq_t());
  return Rational(std::move(inv));
}

Rational Rational::pow(int exponent) const {
  if (exponent < 0) return inverse().pow(-exponent);
  Rational result(1);
  Rational base = *this;
  for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
    if (e & 1U) result *= base;
    base *= base;
  }
  return result;
}

Rational Rational::operator-() const { return Rational(mpq_class(-value_)); }

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::kDomain, "division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

BigInt factorial(unsigned n) {
  BigInt result;
  mpz_fac_ui(result.get_mpz_t(), n);
  return result;
}

BigInt binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  BigInt result;
  mpz_bin_uiui(result.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return result;
}

}  // namespace fracindex
