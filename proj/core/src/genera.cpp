#include "fracindex/genera.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

#include "fracindex/error.hpp"

namespace fracindex {
namespace {

using Series = std::vector<Rational>;

// 1/d for a power series with d_0 != 0, truncated to d.size() terms.
Series series_inverse(const Series& d) {
  Series q(d.size());
  const Rational inv0 = d[0].inverse();
  for (std::size_t n = 0; n < d.size(); ++n) {
    Rational acc = n == 0 ? Rational(1) : Rational(0);
    for (std::size_t k = 1; k <= n; ++k) acc -= d[k] * q[n - k];
    q[n] = acc * inv0;
  }
  return q;
}

Series series_mul(const Series& a, const Series& b) {
  Series c(a.size());
  for (std::size_t n = 0; n < c.size(); ++n) {
    for (std::size_t k = 0; k <= n && k < b.size(); ++k) c[n] += a[n - k] * b[k];
  }
  return c;
}

// log f for f_0 = 1, from n g_n = n f_n - sum_{k<n} k g_k f_{n-k}.
Series series_log(const Series& f) {
  Series g(f.size());
  for (std::size_t n = 1; n < f.size(); ++n) {
    Rational acc = Rational(static_cast<long>(n)) * f[n];
    for (std::size_t k = 1; k < n; ++k) acc -= Rational(static_cast<long>(k)) * g[k] * f[n - k];
    g[n] = acc / Rational(static_cast<long>(n));
  }
  return g;
}

Rational inverse_factorial(unsigned n) { return Rational(BigInt(1), factorial(n)); }

int class_degree(ClassMode mode, int i) { return mode == ClassMode::kChern ? 2 * i : 4 * i; }

}  // namespace

std::string_view genus_name(Genus g) {
  switch (g) {
    case Genus::kAHat: return "A-hat";
    case Genus::kTodd: return "Todd";
    case Genus::kL: return "L";
  }
  return "?";
}

std::optional<Genus> parse_genus(std::string_view name) {
  std::string lower;
  for (char c : name) {
    if (c != '-' && c != '_') lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  }
  if (lower == "ahat") return Genus::kAHat;
  if (lower == "todd") return Genus::kTodd;
  if (lower == "l") return Genus::kL;
  return std::nullopt;
}

bool GenusSeries::is_even() const {
  for (std::size_t k = 1; k < coefficients.size(); k += 2) {
    if (!coefficients[k].is_zero()) return false;
  }
  return true;
}

GenusSeries genus_series(Genus genus, int order) {
  if (order < 0) throw Error(ErrorCode::kDomain, "series order must be nonnegative");
  const auto terms = static_cast<std::size_t>(order) + 1;
  Series q;
  switch (genus) {
    case Genus::kAHat: {
      // sinh(x/2)/(x/2) = sum_k x^{2k} / (4^k (2k+1)!)
      Series d(terms);
      for (std::size_t k = 0; 2 * k < terms; ++k) {
        d[2 * k] = inverse_factorial(static_cast<unsigned>(2 * k + 1)) / Rational(4).pow(static_cast<int>(k));
      }
      q = series_inverse(d);
      break;
    }
    case Genus::kTodd: {
      // (1 - e^{-x})/x = sum_k (-1)^k x^k / (k+1)!
      Series d(terms);
      for (std::size_t k = 0; k < terms; ++k) {
        d[k] = inverse_factorial(static_cast<unsigned>(k + 1));
        if (k % 2 == 1) d[k] = -d[k];
      }
      q = series_inverse(d);
      break;
    }
    case Genus::kL: {
      // x cosh(x) / sinh(x)
      Series c(terms);
      Series s(terms);
      for (std::size_t k = 0; 2 * k < terms; ++k) {
        c[2 * k] = inverse_factorial(static_cast<unsigned>(2 * k));
        s[2 * k] = inverse_factorial(static_cast<unsigned>(2 * k + 1));
      }
      q = series_mul(c, series_inverse(s));
      break;
    }
  }
  return GenusSeries{genus, std::move(q)};
}

GenusSeries genus_series(std::string_view name, int order) {
  const auto g = parse_genus(name);
  if (!g) throw Error(ErrorCode::kUnknownName, "unknown genus '" + std::string(name) + "' (expected A-hat, Todd or L)");
  return genus_series(*g, order);
}

CharData::CharData(RingPtr ring, int rank, ClassMode mode, std::vector<CohClass> classes)
    : ring_(std::move(ring)), rank_(rank), mode_(mode), classes_(std::move(classes)) {
  if (!ring_) throw Error(ErrorCode::kModelMismatch, "characteristic data without a ring");
  if (rank_ < 0) throw Error(ErrorCode::kDomain, "negative bundle rank");
  const int max_classes = mode_ == ClassMode::kChern ? rank_ : rank_ / 2;
  if (static_cast<int>(classes_.size()) > max_classes) {
    throw Error(ErrorCode::kDomain, "a bundle of rank " + std::to_string(rank_) + " carries at most " +
                                        std::to_string(max_classes) + " classes, got " + std::to_string(classes_.size()));
  }
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (!same_ring(classes_[i].ring(), ring_)) {
      throw Error(ErrorCode::kModelMismatch, "characteristic class lives in a different ring model");
    }
    const int deg = class_degree(mode_, static_cast<int>(i) + 1);
    if (!classes_[i].is_homogeneous(deg)) {
      throw Error(ErrorCode::kDegreeMismatch, std::string(mode_ == ClassMode::kChern ? "c_" : "p_") + std::to_string(i + 1) +
                                                  " must be homogeneous of degree " + std::to_string(deg) + ", got " +
                                                  classes_[i].str());
    }
  }
  while (!classes_.empty() && classes_.back().is_zero()) classes_.pop_back();
}

CharData CharData::chern(RingPtr ring, int rank, std::vector<CohClass> classes) {
  return CharData(std::move(ring), rank, ClassMode::kChern, std::move(classes));
}

CharData CharData::pontryagin(RingPtr ring, int rank, std::vector<CohClass> classes) {
  return CharData(std::move(ring), rank, ClassMode::kPontryagin, std::move(classes));
}

CharData CharData::trivial(RingPtr ring, int rank) { return CharData(std::move(ring), rank, ClassMode::kChern, {}); }

CharData CharData::line(const CohClass& c1) { return CharData(c1.ring(), 1, ClassMode::kChern, {c1}); }

CohClass CharData::cls(int i) const {
  if (i >= 1 && i <= static_cast<int>(classes_.size())) return classes_[static_cast<std::size_t>(i) - 1];
  return CohClass(ring_);
}

CohClass CharData::total() const {
  CohClass t = CohClass::constant(ring_, 1);
  for (const auto& c : classes_) t += c;
  return t;
}

CharData direct_sum(const CharData& a, const CharData& b) {
  if (!same_ring(a.ring(), b.ring())) throw Error(ErrorCode::kModelMismatch, "direct sum of bundles over different rings");
  if (a.mode() != b.mode()) throw Error(ErrorCode::kDomain, "direct sum of Chern and Pontryagin data");
  const CohClass total = a.total() * b.total();
  const int rank = a.rank() + b.rank();
  const int count = a.mode() == ClassMode::kChern ? rank : rank / 2;
  const int top = a.ring()->top_degree();
  std::vector<CohClass> classes;
  for (int i = 1; i <= count && class_degree(a.mode(), i) <= top; ++i) {
    classes.push_back(total.component(class_degree(a.mode(), i)));
  }
  return a.mode() == ClassMode::kChern ? CharData::chern(a.ring(), rank, std::move(classes))
                                       : CharData::pontryagin(a.ring(), rank, std::move(classes));
}

std::vector<CohClass> newton_power_sums(const RingPtr& ring, const std::vector<CohClass>& elementary, int count) {
  const auto e = [&](int i) { return i <= static_cast<int>(elementary.size()) ? elementary[static_cast<std::size_t>(i) - 1] : CohClass(ring); };
  std::vector<CohClass> s;
  for (int k = 1; k <= count; ++k) {
    // s_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i s_{k-i} + (-1)^{k-1} k e_k
    CohClass acc = e(k) * Rational(k % 2 == 1 ? k : -k);
    for (int i = 1; i < k && i <= static_cast<int>(elementary.size()); ++i) {
      const CohClass term = e(i) * s[static_cast<std::size_t>(k - i) - 1];
      if (i % 2 == 1) {
        acc += term;
      } else {
        acc -= term;
      }
    }
    s.push_back(std::move(acc));
  }
  return s;
}

CohClass genus_class(const GenusSeries& series, const CharData& bundle) {
  const RingPtr& ring = bundle.ring();
  const int top = ring->top_degree();
  if (series.order() < top / 2) {
    throw Error(ErrorCode::kInsufficientOrder, std::string(genus_name(series.genus)) + " series of order " +
                                                   std::to_string(series.order()) + " cannot reach degree " +
                                                   std::to_string(top) + " (need order " + std::to_string(top / 2) + ")");
  }

  CohClass exponent(ring);
  if (bundle.mode() == ClassMode::kChern) {
    // prod_i Q(x_i) = exp(sum_k l_k s_k) with l = log Q
    const int count = top / 2;
    const Series l = series_log(Series(series.coefficients.begin(), series.coefficients.begin() + count + 1));
    const auto s = newton_power_sums(ring, bundle.classes(), count);
    for (int k = 1; k <= count; ++k) exponent += s[static_cast<std::size_t>(k) - 1] * l[static_cast<std::size_t>(k)];
  } else {
    if (!series.is_even()) {
      throw Error(ErrorCode::kDomain, std::string(genus_name(series.genus)) +
                                          " is not an even series; it needs Chern data, not Pontryagin data");
    }
    // Q(x) = f(x^2); the squared roots have the p_i as elementary symmetric functions.
    const int count = top / 4;
    Series f(static_cast<std::size_t>(count) + 1);
    for (int k = 0; k <= count; ++k) f[static_cast<std::size_t>(k)] = series.coefficients[static_cast<std::size_t>(2 * k)];
    const Series l = series_log(f);
    const auto s = newton_power_sums(ring, bundle.classes(), count);
    for (int k = 1; k <= count; ++k) exponent += s[static_cast<std::size_t>(k) - 1] * l[static_cast<std::size_t>(k)];
  }
  return exp_class(exponent);
}

CohClass chern_character(const CharData& bundle) {
  if (bundle.mode() != ClassMode::kChern) {
    throw Error(ErrorCode::kDomain, "the Chern character needs complex (Chern-mode) data");
  }
  const RingPtr& ring = bundle.ring();
  const int count = ring->top_degree() / 2;
  CohClass ch = CohClass::constant(ring, bundle.rank());
  const auto s = newton_power_sums(ring, bundle.classes(), count);
  for (int k = 1; k <= count; ++k) ch += s[static_cast<std::size_t>(k) - 1] * inverse_factorial(static_cast<unsigned>(k));
  return ch;
}

CharData pontryagin_from_chern(const CharData& bundle) {
  if (bundle.mode() != ClassMode::kChern) {
    throw Error(ErrorCode::kDomain, "pontryagin_from_chern needs complex (Chern-mode) data");
  }
  const RingPtr& ring = bundle.ring();
  CohClass conj_total = CohClass::constant(ring, 1);
  for (int i = 1; i <= static_cast<int>(bundle.classes().size()); ++i) {
    conj_total += i % 2 == 1 ? -bundle.cls(i) : bundle.cls(i);
  }
  const CohClass product = bundle.total() * conj_total;
  std::vector<CohClass> p;
  for (int i = 1; i <= bundle.rank() && 4 * i <= ring->top_degree(); ++i) {
    CohClass pi = product.component(4 * i);
    p.push_back(i % 2 == 1 ? -pi : pi);
  }
  return CharData::pontryagin(ring, 2 * bundle.rank(), std::move(p));
}

}  // namespace fracindex
