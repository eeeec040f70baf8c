#include "fracindex/manifold.hpp"

#include <cctype>
#include <charconv>

#include "fracindex/error.hpp"

namespace fracindex {
namespace {

std::optional<int> parse_int(std::string_view s) {
  int value = 0;
  const auto* end = s.data() + s.size();
  const auto [ptr, ec] = std::from_chars(s.data(), end, value);
  if (ec != std::errc() || ptr != end) return std::nullopt;
  return value;
}

// Pulls a class back along a ring inclusion given by a basis index map.
CohClass pull(const CohClass& c, const RingPtr& target, const std::vector<std::size_t>& map) {
  std::vector<Rational> coeffs(target->dimension(), Rational(0));
  for (std::size_t i = 0; i < map.size(); ++i) coeffs[map[i]] = c.coefficient(i);
  return CohClass(target, std::move(coeffs));
}

std::optional<bool> spin_from_parity(const ManifoldModel& m) {
  return m.is_complex ? m.c1_parity_even : std::nullopt;
}

}  // namespace

CohClass ManifoldModel::c1() const {
  if (!is_complex || tangent.mode() != ClassMode::kChern) {
    throw Error(ErrorCode::kNotComplex, "'" + label + "' carries no complex tangent data, so c_1 is undefined");
  }
  return tangent.cls(1);
}

bool operator==(const ManifoldModel& a, const ManifoldModel& b) {
  return a.label == b.label && a.real_dimension == b.real_dimension && same_ring(a.ring, b.ring) && a.tangent == b.tangent &&
         a.is_complex == b.is_complex && a.c1_parity_even == b.c1_parity_even && a.spin == b.spin &&
         a.annotations == b.annotations;
}

bool c1_parity_even(const CohClass& c1) {
  const auto [lo, hi] = c1.ring()->degree_range(2);
  for (std::size_t i = lo; i < hi; ++i) {
    const Rational& c = c1.coefficient(i);
    if (!c.is_integer()) return false;
    if (c.numerator() % 2 != 0) return false;
  }
  return true;
}

void validate(const ManifoldModel& m) {
  if (!m.ring) throw Error(ErrorCode::kSchema, "manifold '" + m.label + "' has no ring model");
  if (m.real_dimension < 0 || m.real_dimension % 2 != 0) {
    throw Error(ErrorCode::kOddDegree, "manifold '" + m.label + "' must have even real dimension");
  }
  if (m.ring->top_degree() != m.real_dimension) {
    throw Error(ErrorCode::kDegreeMismatch, "manifold '" + m.label + "': ring top degree " + std::to_string(m.ring->top_degree()) +
                                                " differs from real dimension " + std::to_string(m.real_dimension));
  }
  if (!same_ring(m.tangent.ring(), m.ring)) {
    throw Error(ErrorCode::kModelMismatch, "manifold '" + m.label + "': tangent classes live in another ring");
  }
  if (m.is_complex) {
    if (m.tangent.mode() != ClassMode::kChern) {
      throw Error(ErrorCode::kSchema, "complex manifold '" + m.label + "' needs Chern-mode tangent data");
    }
    if (m.c1_parity_even != c1_parity_even(m.tangent.cls(1))) {
      throw Error(ErrorCode::kSchema, "manifold '" + m.label + "': c1 parity flag disagrees with c1");
    }
  }
}

ManifoldModel point() {
  const RingPtr ring = RingModel::point();
  ManifoldModel m{"point", 0, ring, CharData::trivial(ring, 0), true, true, true, {}};
  return m;
}

ManifoldModel cp(int n) {
  if (n < 1) throw Error(ErrorCode::kDomain, "cp(n) needs n >= 1");
  const RingPtr ring = RingModel::truncated_polynomial("x", n);
  std::vector<CohClass> chern;
  for (int i = 1; i <= n; ++i) {
    chern.push_back(CohClass::monomial(ring, static_cast<std::size_t>(i), Rational(binomial(n + 1, i))));
  }
  ManifoldModel m{"CP^" + std::to_string(n), 2 * n, ring, CharData::chern(ring, n, std::move(chern)), true, {}, {}, {}};
  m.c1_parity_even = c1_parity_even(m.c1());
  m.spin = spin_from_parity(m);
  return m;
}

ManifoldModel hypersurface(int n, int degree) {
  if (n < 1 || degree < 1) throw Error(ErrorCode::kDomain, "hypersurface(n, d) needs n >= 1 and d >= 1");
  const int dim = 2 * n;  // complex dimension
  const RingPtr ring = RingModel::truncated_polynomial("h", dim, Rational(degree));

  // Exact series division (1+h)^{2n+2} / (1 + d h), truncated at h^{2n}.
  std::vector<Rational> quotient(static_cast<std::size_t>(dim) + 1);
  for (int i = 0; i <= dim; ++i) {
    Rational acc(binomial(dim + 2, i));
    if (i > 0) acc -= Rational(degree) * quotient[static_cast<std::size_t>(i) - 1];
    quotient[static_cast<std::size_t>(i)] = acc;
  }
  std::vector<CohClass> chern;
  for (int i = 1; i <= dim; ++i) {
    chern.push_back(CohClass::monomial(ring, static_cast<std::size_t>(i), quotient[static_cast<std::size_t>(i)]));
  }
  ManifoldModel m{"V^" + std::to_string(dim) + "(" + std::to_string(degree) + ")", 2 * dim, ring,
                  CharData::chern(ring, dim, std::move(chern)), true, {}, {}, {}};
  m.c1_parity_even = c1_parity_even(m.c1());
  m.spin = spin_from_parity(m);
  return m;
}

ManifoldModel product(const ManifoldModel& a, const ManifoldModel& b, std::size_t max_basis) {
  if (!a.is_complex || !b.is_complex) {
    throw Error(ErrorCode::kNotComplex, "product needs complex models, got '" + a.label + "' and '" + b.label + "'");
  }
  const auto t = RingModel::tensor(*a.ring, *b.ring, max_basis);
  std::vector<CohClass> ca;
  std::vector<CohClass> cb;
  for (const auto& c : a.tangent.classes()) ca.push_back(pull(c, t.ring, t.left));
  for (const auto& c : b.tangent.classes()) cb.push_back(pull(c, t.ring, t.right));
  const CharData tangent = direct_sum(CharData::chern(t.ring, a.tangent.rank(), std::move(ca)),
                                      CharData::chern(t.ring, b.tangent.rank(), std::move(cb)));
  std::string label = a.label == "point" ? b.label : (b.label == "point" ? a.label : a.label + " x " + b.label);
  ManifoldModel m{std::move(label), a.real_dimension + b.real_dimension, t.ring, tangent, true, {}, {}, {}};
  m.c1_parity_even = c1_parity_even(m.c1());
  m.spin = spin_from_parity(m);
  return m;
}

ManifoldModel cobordism_record(std::string label, const ManifoldModel& reference, std::map<std::string, std::string> annotations) {
  CharData tangent = reference.tangent.mode() == ClassMode::kChern ? pontryagin_from_chern(reference.tangent) : reference.tangent;
  annotations.emplace("cobordant_to", reference.label);
  ManifoldModel m{std::move(label), reference.real_dimension, reference.ring, std::move(tangent), false, std::nullopt, false,
                  std::move(annotations)};
  return m;
}

std::vector<std::string> builtin_examples() {
  return {"point", "cp1", "cp2", "cp3", "cp4", "k3", "hypersurface:1:3", "hypersurface:2:5", "hopkins", "cp1*cp1", "cp2*cp2"};
}

ManifoldModel builtin(std::string_view name) {
  if (const auto star = name.find('*'); star != std::string_view::npos) {
    return product(builtin(name.substr(0, star)), builtin(name.substr(star + 1)));
  }
  std::string lower;
  for (char c : name) lower.push_back(static_cast<char>(std::tolower(static_cast<unsigned char>(c))));
  if (lower == "point" || lower == "pt") return point();
  if (lower == "k3") return hypersurface(1, 4);
  if (lower == "hopkins") {
    return cobordism_record("Hopkins surgery", cp(4),
                            {{"H2", "0 (unverified)"}, {"W3", "nonzero (unverified)"}, {"construction", "surgery on a degree-2 sphere in CP^4"}});
  }
  if (lower.rfind("cp", 0) == 0) {
    if (const auto n = parse_int(std::string_view(lower).substr(2)); n && *n >= 1) return cp(*n);
  }
  if (lower.rfind("hypersurface:", 0) == 0) {
    const std::string_view rest = std::string_view(lower).substr(13);
    if (const auto colon = rest.find(':'); colon != std::string_view::npos) {
      const auto n = parse_int(rest.substr(0, colon));
      const auto d = parse_int(rest.substr(colon + 1));
      if (n && d) return hypersurface(*n, *d);
    }
  }
  throw Error(ErrorCode::kUnknownName, "unknown manifold '" + std::string(name) + "'");
}

}  // namespace fracindex
