// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "fracindex/index_engine.hpp"
#include "fracindex/lab/experiments.hpp"
#include "fracindex/lab/heat.hpp"
#include "fracindex/manifold.hpp"
#include "root_oracle.hpp"

#ifdef FRACINDEX_WITH_CLI
#include "cli/cli.hpp"
#endif

namespace {

using namespace fracindex;
using lab::LoopSymbol;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Rational from_mpq(const mpq_class& q) { return Rational(BigInt(q.get_num()), BigInt(q.get_den())); }

// Dirac index of the trivial bundle as printed by the command-line tool.
std::string index_value(const std::string& manifold) {
#ifdef FRACINDEX_WITH_CLI
  const std::vector<std::string> args = {"fracindex", "--format", "json", "index", "--manifold", manifold, "--bundle", "trivial"};
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  if (cli::main_entry(static_cast<int>(argv.size()), argv.data(), out, err) != 0) return "error: " + err.str();
  return nlohmann::json::parse(out.str())["rows"][0]["value"].get<std::string>();
#else
  const ManifoldModel m = builtin(manifold);
  return dirac_index(m, CharData::trivial(m.ring, 0)).value.str();
#endif
}

Outcome exact_value(const std::string& manifold, const std::string& expected) {
  const std::string got = index_value(manifold);
  return {got == expected, manifold + " -> " + got};
}

Outcome hypersurface_grid() {
  int checked = 0;
  for (long n = 1; n <= 4; ++n) {
    for (long d = 1; d <= 6; ++d) {
      const ManifoldModel v = hypersurface(static_cast<int>(n), static_cast<int>(2 * d + 1));
      const Rational value = integrate(a_hat_class(v));
      const Rational closed = from_mpq(oracle::hypersurface_ahat_closed_form(n, d));
      if (value != closed) return {false, v.label + ": " + value.str() + " != " + closed.str()};
      if (d >= n && value.is_integer()) return {false, v.label + " is integral: " + value.str()};
      ++checked;
    }
  }
  return {true, std::to_string(checked) + " hypersurfaces match the closed form"};
}

Outcome todd_identity() {
  std::vector<ManifoldModel> models;
  for (const auto& name : builtin_examples()) {
    ManifoldModel m = builtin(name);
    if (m.is_complex && m.real_dimension <= 12) models.push_back(std::move(m));
  }
  for (int n = 1; n <= 6; ++n) models.push_back(cp(n));
  for (int n = 1; n <= 3; ++n) {
    for (int d = 1; d <= 7; ++d) models.push_back(hypersurface(n, d));
  }
  models.push_back(product(cp(1), cp(2)));
  models.push_back(product(cp(3), cp(3)));
  for (const auto& m : models) {
    if (todd_class(m) != a_hat_class(m) * exp_class(m.c1() * Rational(1, 2))) return {false, "identity fails on " + m.label};
  }
  for (int n = 1; n <= 4; ++n) {
    const Rational v = dolbeault_index(cp(n)).value;
    if (v != Rational(1)) return {false, "dolbeault(CP^" + std::to_string(n) + ") = " + v.str()};
  }
  return {true, std::to_string(models.size()) + " complex models, dolbeault(CP^1..4) = 1"};
}

Outcome k3_integrality() {
  const ManifoldModel k3 = hypersurface(1, 4);
  const Rational v = integrate(a_hat_class(k3));
  const bool even = k3.c1_parity_even.value_or(false);
  return {v == Rational(2) && v.is_integer() && even, "A-hat = " + v.str() + ", c1 parity " + (even ? "even" : "odd")};
}

std::vector<LoopSymbol> random_symbols(std::uint64_t seed, int count) {
  std::mt19937_64 rng(seed);
  std::vector<LoopSymbol> out;
  for (int i = 0; i < count; ++i) out.push_back(lab::random_perturbed_symbol(rng, 3, i % 5 == 4 ? 2 : 1));
  return out;
}

Outcome index_winding() {
  lab::LabOptions options;
  options.truncation = 64;
  for (int k = -3; k <= 3; ++k) {
    const auto v = lab::symbol_index(LoopSymbol::monomial(k), options);
    if (!v.exact || *v.exact != lab::GaussianRational(-k)) return {false, "e^{" + std::to_string(k) + "it} is not exact -k"};
  }
  double worst = 0.0;
  for (const auto& a : random_symbols(6006, 20)) {
    const auto v = lab::symbol_index(a, options);
    worst = std::max(worst, std::abs(v.value - std::complex<double>(-lab::winding_number(a), 0.0)));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "monomials exact, max |ind + winding| = %.2e over 20 symbols", worst);
  return {worst < 1e-9, buf};
}

Outcome homotopy() {
  const LoopSymbol a0 = LoopSymbol::monomial(1);
  const LoopSymbol a1 = a0 + LoopSymbol::monomial(0, lab::GaussianRational(Rational(1, 2)));
  const auto r = lab::homotopy_sweep(lab::SymbolPath{{a0, a1}}, 11);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%zu steps, spread %.2e", r.steps.size(), r.spread);
  return {r.steps.size() == 11 && r.spread < 1e-9, buf};
}

Outcome additivity() {
  int exact_pairs = 0;
  for (int k1 = -2; k1 <= 2; ++k1) {
    for (int k2 = -2; k2 <= 2; ++k2) {
      const auto r = lab::composition_additivity_check(LoopSymbol::monomial(k1), LoopSymbol::monomial(k2));
      if (!r.product.exact || !r.exact_sum || *r.product.exact != *r.exact_sum) {
        return {false, "monomial pair (" + std::to_string(k1) + ", " + std::to_string(k2) + ") not exact"};
      }
      ++exact_pairs;
    }
  }
  std::mt19937_64 rng(8008);
  double worst = 0.0;
  for (int i = 0; i < 10; ++i) {
    const std::size_t size = i % 5 == 4 ? 2 : 1;
    const LoopSymbol a1 = lab::random_perturbed_symbol(rng, 3, size);
    const LoopSymbol a2 = lab::random_perturbed_symbol(rng, 3, size);
    const auto r = lab::composition_additivity_check(a1, a2);
    worst = std::max(worst, std::abs(r.product.value - r.sum));
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%d exact monomial pairs, max deviation %.2e on 10 random pairs", exact_pairs, worst);
  return {worst < 1e-9, buf};
}

Outcome adjoint() {
  std::vector<LoopSymbol> suite;
  for (int k = -3; k <= 3; ++k) suite.push_back(LoopSymbol::monomial(k));
  suite.push_back(LoopSymbol::scalar({{0, lab::GaussianRational(2)}, {1, lab::GaussianRational(1)}}));
  for (auto& a : random_symbols(9009, 10)) suite.push_back(std::move(a));
  double worst_imag = 0.0;
  for (const auto& a : suite) {
    const auto r = lab::adjoint_index_check(a);
    worst_imag = std::max({worst_imag, std::abs(r.index.value.imag()), std::abs(r.adjoint_index.value.imag())});
    for (const auto& s : r.rotation) worst_imag = std::max(worst_imag, std::abs(s.index.value.imag()));
    if (!r.antisymmetric) return {false, "ind(A*) != -ind(A)"};
    if (!r.rotation_zero) return {false, "rotation family index is nonzero"};
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "%zu symbols, max |Im ind| = %.2e", suite.size(), worst_imag);
  return {worst_imag < 1e-12, buf};
}

Outcome mckean_singer() {
  std::mt19937_64 rng(1010);
  double worst = 0.0;
  for (int i = 0; i < 25; ++i) {
    const auto d = lab::random_graded_operator(rng, 12);
    const auto r = lab::mckean_singer_check(d, {0.1, 1.0, 10.0});
    const long exact = r.kernel_plus - r.kernel_minus;
    if (exact != static_cast<long>(d.dim_e()) - static_cast<long>(d.dim_f())) return {false, "kernel dimensions inconsistent"};
    worst = std::max({worst, r.stddev, r.max_deviation});
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, "25 operators, max deviation %.2e", worst);
  return {worst < 1e-12, buf};
}

struct Criterion {
  int number;
  std::string name;
  double time_limit;  // seconds; 0 for none
  std::function<Outcome()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "index cp2 = -1/8", 1.0, [] { return exact_value("cp2", "-1/8"); }},
      {2, "index cp4 = 3/128", 1.0, [] { return exact_value("cp4", "3/128"); }},
      {3, "hypersurface A-hat closed form", 10.0, hypersurface_grid},
      {4, "Todd = A-hat exp(c1/2)", 0.0, todd_identity},
      {5, "K3 A-hat integrality", 0.0, k3_integrality},
      {6, "index = -winding", 5.0, index_winding},
      {7, "homotopy invariance", 0.0, homotopy},
      {8, "composition additivity", 0.0, additivity},
      {9, "adjoint antisymmetry and reality", 0.0, adjoint},
      {10, "McKean-Singer constancy", 0.0, mckean_singer},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.time_limit > 0.0 && seconds >= c.time_limit) {
      o.pass = false;
      o.detail += " (time limit exceeded)";
    }
    if (!o.pass) ++failures;
    std::printf("%s %2d %s: %s [%.3f s]\n", o.pass ? "PASS" : "FAIL", c.number, c.name.c_str(), o.detail.c_str(), seconds);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
