#include "fracindex/lab/gaussian.hpp"

#include <cctype>
#include <ostream>

#include "fracindex/error.hpp"
#include "fracindex/lab/matrix.hpp"

namespace fracindex::lab {

GaussianRational GaussianRational::from_complex(std::complex<double> z) {
  return {Rational::from_double(z.real()), Rational::from_double(z.imag())};
}

GaussianRational GaussianRational::parse(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  while (s.size() >= 2 && s.front() == '(' && s.back() == ')') s = s.substr(1, s.size() - 2);
  if (s.empty()) throw Error(ErrorCode::kParse, "empty complex literal");
  if (s.back() != 'i') return {Rational::parse(s), Rational(0)};

  s.pop_back();
  if (!s.empty() && s.back() == '*') s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if (s[i] == '+' || s[i] == '-') {
      split = i;
      break;
    }
  }
  const auto imag_of = [&](const std::string& t) {
    if (t.empty() || t == "+") return Rational(1);
    if (t == "-") return Rational(-1);
    return Rational::parse(t);
  };
  if (split == std::string::npos) return {Rational(0), imag_of(s)};
  return {Rational::parse(s.substr(0, split)), imag_of(s.substr(split))};
}

std::string GaussianRational::str() const {
  if (im.is_zero()) return re.str();
  std::string imag;
  const Rational mag = im.abs();
  imag = mag == Rational(1) ? "i" : mag.str() + "i";
  if (re.is_zero()) return (im.sign() < 0 ? "-" : "") + imag;
  return re.str() + (im.sign() < 0 ? "-" : "+") + imag;
}

GaussianRational& GaussianRational::operator+=(const GaussianRational& o) {
  re += o.re;
  im += o.im;
  return *this;
}

GaussianRational& GaussianRational::operator-=(const GaussianRational& o) {
  re -= o.re;
  im -= o.im;
  return *this;
}

GaussianRational& GaussianRational::operator*=(const GaussianRational& o) {
  Rational r = re * o.re - im * o.im;
  Rational i = re * o.im + im * o.re;
  re = std::move(r);
  im = std::move(i);
  return *this;
}

GaussianRational& GaussianRational::operator/=(const GaussianRational& o) {
  const Rational n = o.norm();
  if (n.is_zero()) throw Error(ErrorCode::kDomain, "division by zero");
  *this *= conj(o);
  re /= n;
  im /= n;
  return *this;
}

GaussianRational conj(const GaussianRational& z) { return {z.re, -z.im}; }

std::ostream& operator<<(std::ostream& os, const GaussianRational& z) { return os << z.str(); }

NumericMatrix to_numeric(const ExactMatrix& m) {
  NumericMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = m(r, c).to_complex();
  }
  return out;
}

ExactMatrix to_exact(const NumericMatrix& m) {
  ExactMatrix out(m.rows(), m.cols());
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out(r, c) = GaussianRational::from_complex(m(r, c));
  }
  return out;
}

namespace {

// Reduced row echelon form in place; returns the rank.
std::size_t row_reduce(ExactMatrix& a) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < a.cols() && rank < a.rows(); ++col) {
    std::size_t pivot = rank;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    if (pivot != rank) {
      for (std::size_t c = 0; c < a.cols(); ++c) std::swap(a(pivot, c), a(rank, c));
    }
    const GaussianRational inv = GaussianRational(1) / a(rank, col);
    for (std::size_t c = 0; c < a.cols(); ++c) a(rank, c) *= inv;
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == rank || a(r, col).is_zero()) continue;
      const GaussianRational f = a(r, col);
      for (std::size_t c = 0; c < a.cols(); ++c) a(r, c) -= f * a(rank, c);
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::size_t exact_rank(const ExactMatrix& m) {
  ExactMatrix a = m;
  return row_reduce(a);
}

ExactMatrix exact_inverse(const ExactMatrix& m) {
  if (m.rows() != m.cols()) throw Error(ErrorCode::kDomain, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  ExactMatrix aug(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) aug(r, c) = m(r, c);
    aug(r, n + r) = GaussianRational(1);
  }
  row_reduce(aug);
  for (std::size_t i = 0; i < n; ++i) {
    if (!(aug(i, i) == GaussianRational(1))) throw Error(ErrorCode::kDomain, "matrix is singular");
  }
  ExactMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug(r, n + c);
  }
  return inv;
}

}  // namespace fracindex::lab
