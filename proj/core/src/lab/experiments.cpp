#include "fracindex/lab/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "fracindex/error.hpp"

namespace fracindex::lab {
namespace {

bool within(const IndexValue& a, std::complex<double> b, double tolerance) {
  return std::abs(a.value - b) <= std::max(tolerance, a.error_bound);
}

GaussianRational random_small(std::mt19937_64& rng, int numerator_bound, int denominator) {
  std::uniform_int_distribution<int> pick(-numerator_bound, numerator_bound);
  return {Rational(pick(rng), denominator), Rational(pick(rng), denominator)};
}

}  // namespace

int default_order(const LoopSymbol& symbol, const LabOptions& options) {
  if (options.order) return *options.order;
  return symbol.mode() == SymbolMode::kExact ? symbol.bandwidth() : std::max(16, symbol.bandwidth());
}

IndexValue symbol_index(const LoopSymbol& symbol, const LabOptions& options) {
  require_elliptic(symbol, options.certificate_depth);
  const int order = default_order(symbol, options);
  int truncation = options.truncation;
  std::optional<int> window = options.window;
  std::vector<std::string> notes;
  if (options.auto_adjust) {
    const int bwa = symbol.bandwidth();
    int bwb = order;
    if (const auto inv = symbol.exact_inverse()) bwb = std::min(order, inv->bandwidth());
    const int w_min = std::min(bwa, bwb);
    const int needed = std::max(4 * bwa, 2 * (bwa + bwb) + w_min);
    if (truncation < needed) {
      notes.push_back("K raised from " + std::to_string(truncation) + " to " + std::to_string(needed));
      truncation = needed;
    }
    if (window) {
      const int w_max = max_window(truncation, bwa, bwb);
      const int clamped = std::clamp(*window, w_min, w_max);
      if (clamped != *window) {
        notes.push_back("W adjusted from " + std::to_string(*window) + " to " + std::to_string(clamped));
        window = clamped;
      }
    }
  }
  const LabOperator a = as_lab_operator(toeplitz_compress(symbol, truncation));
  const LabOperator b = parametrix(symbol, order, truncation);
  IndexValue value = trace_commutator_index(a, b, window);
  value.notes = std::move(notes);
  return value;
}

LoopSymbol SymbolPath::at(const Rational& t) const {
  if (nodes.empty()) throw Error(ErrorCode::kDomain, "empty symbol path");
  if (t < Rational(0) || t > Rational(1)) throw Error(ErrorCode::kDomain, "path parameter outside [0, 1]");
  if (nodes.size() == 1) return nodes.front();
  const Rational scaled = t * Rational(static_cast<long>(nodes.size() - 1));
  const BigInt whole = scaled.numerator() / scaled.denominator();
  auto segment = static_cast<std::size_t>(whole.get_ui());
  segment = std::min(segment, nodes.size() - 2);
  return interpolate(nodes[segment], nodes[segment + 1], scaled - Rational(static_cast<long>(segment)));
}

HomotopyResult homotopy_sweep(const SymbolPath& path, int steps, const LabOptions& options) {
  if (steps < 1) throw Error(ErrorCode::kDomain, "a homotopy sweep needs at least one step");
  HomotopyResult result;
  for (int j = 0; j < steps; ++j) {
    const Rational t = steps == 1 ? Rational(0) : Rational(j, steps - 1);
    const LoopSymbol symbol = path.at(t);
    try {
      result.steps.push_back({t, symbol_index(symbol, options)});
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kEllipticity) throw;
      throw Error(ErrorCode::kEllipticity, "ellipticity lost at t = " + t.str() + ": " + e.what());
    }
  }
  double lo = result.steps.front().index.value.real();
  double hi = lo;
  for (const auto& s : result.steps) {
    lo = std::min(lo, s.index.value.real());
    hi = std::max(hi, s.index.value.real());
  }
  result.spread = hi - lo;
  result.constant = result.spread < options.index_tolerance;
  return result;
}

AdditivityResult composition_additivity_check(const LoopSymbol& a1, const LoopSymbol& a2, const LabOptions& options) {
  if (a1.size() != a2.size()) throw Error(ErrorCode::kModelMismatch, "composition of symbols of different sizes");
  AdditivityResult r;
  r.first = symbol_index(a1, options);
  r.second = symbol_index(a2, options);
  r.product = symbol_index(a2 * a1, options);
  r.sum = r.first.value + r.second.value;
  if (r.first.exact && r.second.exact) r.exact_sum = *r.first.exact + *r.second.exact;
  if (r.exact_sum && r.product.exact) {
    r.agree = *r.exact_sum == *r.product.exact;
  } else {
    const double tol = std::max(options.index_tolerance, r.first.error_bound + r.second.error_bound);
    r.agree = within(r.product, r.sum, tol);
  }
  return r;
}

LoopSymbol rotation_symbol(const LoopSymbol& a, double phi) {
  // Quarter turns get exact sine and cosine so the endpoints stay in exact mode.
  GaussianRational s;
  GaussianRational c;
  if (phi == 0.0) {
    s = 0;
    c = 1;
  } else if (phi == std::numbers::pi / 2) {
    s = 1;
    c = 0;
  } else {
    s = GaussianRational::from_complex(std::sin(phi));
    c = GaussianRational::from_complex(std::cos(phi));
  }
  const std::size_t n = a.size();
  const LoopSymbol adj = a.adjoint();
  std::map<int, ExactMatrix> coeffs;
  const auto slot = [&](int k) -> ExactMatrix& { return coeffs.try_emplace(k, 2 * n, 2 * n).first->second; };
  if (!s.is_zero()) {
    ExactMatrix& m = slot(0);
    for (std::size_t i = 0; i < 2 * n; ++i) m(i, i) = s;
  }
  if (!c.is_zero()) {
    for (const auto& [k, blk] : adj.coefficients()) {
      ExactMatrix& m = slot(k);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t col = 0; col < n; ++col) m(r, n + col) += c * blk(r, col);
      }
    }
    for (const auto& [k, blk] : a.coefficients()) {
      ExactMatrix& m = slot(k);
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t col = 0; col < n; ++col) m(n + r, col) -= c * blk(r, col);
      }
    }
  }
  return LoopSymbol(2 * n, std::move(coeffs));
}

AdjointResult adjoint_index_check(const LoopSymbol& a, const LabOptions& options, int samples) {
  if (samples < 2) throw Error(ErrorCode::kDomain, "the rotation sweep needs at least two angles");
  AdjointResult r;
  r.index = symbol_index(a, options);
  r.adjoint_index = symbol_index(a.adjoint(), options);
  if (r.index.exact && r.adjoint_index.exact) {
    r.antisymmetric = *r.index.exact == -*r.adjoint_index.exact;
  } else {
    r.antisymmetric = within(r.index, -r.adjoint_index.value, options.index_tolerance + r.adjoint_index.error_bound);
  }
  r.real = std::abs(r.index.value.imag()) < options.imaginary_tolerance &&
           std::abs(r.adjoint_index.value.imag()) < options.imaginary_tolerance;
  r.rotation_zero = true;
  for (int j = 0; j < samples; ++j) {
    const double phi = j == samples - 1 ? std::numbers::pi / 2 : (std::numbers::pi / 2) * j / (samples - 1);
    RotationSample sample{phi, symbol_index(rotation_symbol(a, phi), options)};
    if (!within(sample.index, 0.0, options.index_tolerance)) r.rotation_zero = false;
    if (std::abs(sample.index.value.imag()) >= options.imaginary_tolerance) r.real = false;
    r.rotation.push_back(std::move(sample));
  }
  return r;
}

LoopSymbol random_perturbed_symbol(std::mt19937_64& rng, int max_winding, std::size_t size) {
  std::uniform_int_distribution<int> pick_k(-max_winding, max_winding);
  std::uniform_int_distribution<int> pick_band(1, 2);
  const int k = pick_k(rng);
  const int band = pick_band(rng);

  // Entries of modulus below 1/(4 * size * (2 band + 1)) keep every frequency's
  // Frobenius norm small enough that ||p|| < 1/2 on the whole circle.
  const int denominator = 16 * static_cast<int>(size) * (2 * band + 1);
  std::map<int, ExactMatrix> p;
  for (int j = -band; j <= band; ++j) {
    ExactMatrix m(size, size);
    for (std::size_t r = 0; r < size; ++r) {
      for (std::size_t c = 0; c < size; ++c) m(r, c) = random_small(rng, 2, denominator);
    }
    p.emplace(j, std::move(m));
  }
  // Guarantee a genuine perturbation so the symbol is not a monomial.
  p.at(band)(0, 0) = GaussianRational(Rational(1, denominator));

  auto& zero = p.at(0);
  for (std::size_t i = 0; i < size; ++i) zero(i, i) += GaussianRational(1);
  const LoopSymbol one_plus_p(size, std::move(p));
  return LoopSymbol::diagonal(std::vector<LoopSymbol>(size, LoopSymbol::monomial(k))) * one_plus_p;
}

}  // namespace fracindex::lab
