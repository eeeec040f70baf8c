#include "fracindex/index_engine.hpp"

#include <cstdint>
#include <cstdio>

#include "fracindex/error.hpp"
#include "fracindex/manifold_io.hpp"

namespace fracindex {
namespace {

std::string fnv1a(const std::string& text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string describe(const ManifoldModel& m, const CharData& bundle, const TwistSpec* twist) {
  nlohmann::json doc = {{"manifold", to_json(m)}, {"bundle", bundle_to_json(bundle)}};
  if (twist != nullptr) {
    if (twist->l_prime_c1) doc["l_prime_c1"] = class_to_json(*twist->l_prime_c1);
    if (twist->l_c1) doc["l_c1"] = class_to_json(*twist->l_c1);
    doc["root_order"] = twist->root_order;
  }
  return doc.dump();
}

IndexReport make_report(const ManifoldModel& m, std::string formula, Rational value, const std::string& description) {
  IndexReport r;
  r.label = m.label;
  r.formula = std::move(formula);
  r.is_integer = value.is_integer();
  r.value = std::move(value);
  r.digest = fnv1a(description);
  return r;
}

void require_bundle_on(const ManifoldModel& m, const CharData& bundle) {
  if (!same_ring(m.ring, bundle.ring())) {
    throw Error(ErrorCode::kModelMismatch, "bundle data does not live in the cohomology ring of '" + m.label + "'");
  }
  if (bundle.mode() != ClassMode::kChern) throw Error(ErrorCode::kDomain, "twisting bundle must be given by Chern data");
}

CohClass degree_two(const CohClass& c, const char* what) {
  if (!c.is_homogeneous(2)) throw Error(ErrorCode::kDegreeMismatch, std::string(what) + " must be a degree-2 class, got " + c.str());
  return c;
}

}  // namespace

CohClass a_hat_class(const ManifoldModel& m) {
  const GenusSeries series = genus_series(Genus::kAHat, m.real_dimension / 2);
  if (m.tangent.mode() == ClassMode::kChern) return genus_class(series, pontryagin_from_chern(m.tangent));
  return genus_class(series, m.tangent);
}

CohClass todd_class(const ManifoldModel& m) {
  if (!m.is_complex) throw Error(ErrorCode::kNotComplex, "Todd class of '" + m.label + "' needs a complex model");
  return genus_class(genus_series(Genus::kTodd, m.real_dimension / 2), m.tangent);
}

IndexReport dirac_index(const ManifoldModel& m, const CharData& bundle) {
  require_bundle_on(m, bundle);
  const Rational value = integrate(a_hat_class(m) * chern_character(bundle));
  return make_report(m, "dirac", value, "dirac:" + describe(m, bundle, nullptr));
}

IndexReport spinc_index(const ManifoldModel& m, const CharData& bundle, const TwistSpec& twist) {
  require_bundle_on(m, bundle);
  if (twist.root_order < 1) throw Error(ErrorCode::kDomain, "root order N must be >= 1, got " + std::to_string(twist.root_order));
  CohClass integrand = a_hat_class(m) * chern_character(bundle);
  if (twist.l_prime_c1) {
    if (!same_ring(twist.l_prime_c1->ring(), m.ring)) throw Error(ErrorCode::kModelMismatch, "c1(L') lives in another ring");
    integrand = integrand * exp_class(degree_two(*twist.l_prime_c1, "c1(L')") * Rational(1, 2));
  }
  if (twist.l_c1) {
    if (!same_ring(twist.l_c1->ring(), m.ring)) throw Error(ErrorCode::kModelMismatch, "c1(L) lives in another ring");
    integrand = integrand * exp_class(degree_two(*twist.l_c1, "c1(L)") * Rational(1, twist.root_order));
  }
  return make_report(m, "spinc", integrate(integrand), "spinc:" + describe(m, bundle, &twist));
}

IndexReport dolbeault_index(const ManifoldModel& m) {
  if (!m.is_complex) throw Error(ErrorCode::kNotComplex, "the Dolbeault index needs a complex model, '" + m.label + "' is not");
  const Rational value = integrate(a_hat_class(m) * exp_class(m.c1() * Rational(1, 2)));
  const Rational todd = integrate(todd_class(m));
  if (value != todd) {
    throw Error(ErrorCode::kInternal, "A-hat e^{c1/2} = " + value.str() + " disagrees with the Todd genus " + todd.str() +
                                          " on '" + m.label + "'");
  }
  return make_report(m, "dolbeault", value, "dolbeault:" + describe(m, CharData::trivial(m.ring, 1), nullptr));
}

std::vector<FractionalityRow> fractionality_report(std::span<const IndexReport> reports) {
  std::vector<FractionalityRow> rows;
  rows.reserve(reports.size());
  for (const auto& r : reports) rows.push_back({r.label, r.formula, r.value, r.value.denominator(), r.value.is_integer()});
  return rows;
}

}  // namespace fracindex
