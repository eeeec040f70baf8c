#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fracindex/coh_class.hpp"
#include "fracindex/genera.hpp"
#include "fracindex/manifold.hpp"
#include "fracindex/rational.hpp"

namespace fracindex {

/// Twisting data of the spin^c form: exp(c1(L')/2) and exp(c1(L)/N).
/// Fractional c1 data is accepted as given.
struct TwistSpec {
  std::optional<CohClass> l_prime_c1;
  std::optional<CohClass> l_c1;
  int root_order = 1;
};

struct IndexReport {
  std::string label;    // manifold label
  std::string formula;  // "dirac", "spinc", "dolbeault"
  Rational value;
  bool is_integer = true;
  std::string digest;  // FNV-1a of the canonical input description

  BigInt denominator() const { return value.denominator(); }
};

/// A-hat class of the tangent bundle (through Pontryagin data for complex models).
CohClass a_hat_class(const ManifoldModel& m);
/// Todd class of the complex tangent bundle.
CohClass todd_class(const ManifoldModel& m);

/// integral of A-hat(M) ch(E).
IndexReport dirac_index(const ManifoldModel& m, const CharData& bundle);

/// integral of A-hat(M) exp(c1(L')/2) ch(E) exp(c1(L)/N).
IndexReport spinc_index(const ManifoldModel& m, const CharData& bundle, const TwistSpec& twist);

/// integral of A-hat(M) exp(c1(M)/2); cross-checked against the Todd genus.
IndexReport dolbeault_index(const ManifoldModel& m);

struct FractionalityRow {
  std::string label;
  std::string formula;
  Rational value;
  BigInt denominator;
  bool is_integer = true;
};

std::vector<FractionalityRow> fractionality_report(std::span<const IndexReport> reports);

}  // namespace fracindex
