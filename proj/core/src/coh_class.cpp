#include "fracindex/coh_class.hpp"

#include <algorithm>
#include <utility>

#include "fracindex/error.hpp"

namespace fracindex {
namespace {

void require_same_ring(const CohClass& a, const CohClass& b, const char* op) {
  if (!same_ring(a.ring(), b.ring())) {
    throw Error(ErrorCode::kModelMismatch, std::string(op) + ": operands live in different ring models");
  }
}

}  // namespace

CohClass::CohClass(RingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw Error(ErrorCode::kModelMismatch, "class without a ring model");
  coeffs_.assign(ring_->dimension(), Rational(0));
}

CohClass::CohClass(RingPtr ring, std::vector<Rational> coefficients) : ring_(std::move(ring)), coeffs_(std::move(coefficients)) {
  if (!ring_) throw Error(ErrorCode::kModelMismatch, "class without a ring model");
  if (coeffs_.size() != ring_->dimension()) {
    throw Error(ErrorCode::kModelMismatch, "coefficient vector length does not match the ring basis");
  }
}

CohClass CohClass::constant(RingPtr ring, const Rational& value) {
  CohClass c(std::move(ring));
  c.coeffs_[0] = value;
  return c;
}

CohClass CohClass::monomial(RingPtr ring, std::size_t index, const Rational& coeff) {
  CohClass c(std::move(ring));
  c.coeffs_.at(index) = coeff;
  return c;
}

CohClass CohClass::monomial(RingPtr ring, std::string_view name, const Rational& coeff) {
  const Exponents e = ring->parse_monomial(name);
  const auto idx = ring->find(e);
  if (!idx) {
    // Monomials outside the basis vanish in the model.
    return CohClass(std::move(ring));
  }
  return monomial(std::move(ring), *idx, coeff);
}

std::span<const Rational> CohClass::component_coefficients(int degree) const {
  const auto [lo, hi] = ring_->degree_range(degree);
  return std::span<const Rational>(coeffs_).subspan(lo, hi - lo);
}

CohClass CohClass::component(int degree) const {
  CohClass c(ring_);
  const auto [lo, hi] = ring_->degree_range(degree);
  for (std::size_t i = lo; i < hi; ++i) c.coeffs_[i] = coeffs_[i];
  return c;
}

CohClass CohClass::truncated(int degree) const {
  CohClass c(ring_);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (ring_->degree(i) <= degree) c.coeffs_[i] = coeffs_[i];
  }
  return c;
}

bool CohClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool CohClass::is_homogeneous(int degree) const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero() && ring_->degree(i) != degree) return false;
  }
  return true;
}

std::string CohClass::str() const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    const Rational& c = coeffs_[i];
    if (c.is_zero()) continue;
    const bool unit = i == 0;
    const Rational mag = c.abs();
    if (out.empty()) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (unit) {
      out += mag.str();
    } else {
      if (mag != Rational(1)) out += mag.str() + "*";
      out += ring_->monomial_name(i);
    }
  }
  return out.empty() ? "0" : out;
}

CohClass CohClass::operator-() const {
  CohClass c(*this);
  for (auto& r : c.coeffs_) r = -r;
  return c;
}

CohClass& CohClass::operator+=(const CohClass& rhs) {
  require_same_ring(*this, rhs, "add");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& rhs) {
  require_same_ring(*this, rhs, "subtract");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  return *this;
}

CohClass& CohClass::operator*=(const Rational& scalar) {
  for (auto& r : coeffs_) r *= scalar;
  return *this;
}

CohClass operator*(const CohClass& a, const CohClass& b) { return ring_mul(a, b); }

bool operator==(const CohClass& a, const CohClass& b) {
  return same_ring(a.ring_, b.ring_) && a.coeffs_ == b.coeffs_;
}

CohClass ring_mul(const CohClass& a, const CohClass& b) {
  require_same_ring(a, b, "ring_mul");
  const RingModel& ring = *a.ring();
  CohClass result(a.ring());
  std::vector<Rational> acc(ring.dimension(), Rational(0));
  const int top = ring.top_degree();
  for (std::size_t i = 0; i < ring.dimension(); ++i) {
    const Rational& x = a.coefficient(i);
    if (x.is_zero()) continue;
    for (std::size_t j = 0; j < ring.dimension(); ++j) {
      if (ring.degree(i) + ring.degree(j) > top) break;  // basis is degree-sorted
      const Rational& y = b.coefficient(j);
      if (y.is_zero()) continue;
      const Rational xy = x * y;
      for (const auto& t : ring.product(i, j)) acc[t.index] += xy * t.coeff;
    }
  }
  return CohClass(a.ring(), std::move(acc));
}

CohClass power(const CohClass& a, int k) {
  if (k < 0) throw Error(ErrorCode::kDomain, "negative power of a class");
  CohClass result = CohClass::constant(a.ring(), 1);
  for (int i = 0; i < k; ++i) result = result * a;
  return result;
}

CohClass exp_class(const CohClass& a) {
  if (!a.coefficient(0).is_zero()) {
    throw Error(ErrorCode::kDomain, "exp_class needs a class without degree-0 part, got " + a.str());
  }
  CohClass result = CohClass::constant(a.ring(), 1);
  CohClass term = result;
  // a is nilpotent: a^k vanishes once 2k exceeds the top degree.
  const int top = a.ring()->top_degree();
  for (int k = 1; 2 * k <= top; ++k) {
    term = term * a;
    term *= Rational(1, k);
    if (term.is_zero()) break;
    result += term;
  }
  return result;
}

Rational integrate(const CohClass& a) {
  const RingModel& ring = *a.ring();
  Rational total;
  const auto [lo, hi] = ring.degree_range(ring.top_degree());
  for (std::size_t i = lo; i < hi; ++i) total += ring.pairing(i) * a.coefficient(i);
  return total;
}

}  // namespace fracindex
