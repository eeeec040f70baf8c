#include "fracindex/lab/half_line.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "fracindex/error.hpp"

namespace fracindex::lab {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

double frobenius(const NumericMatrix& m) {
  double s = 0.0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) s += std::norm(m(r, c));
  }
  return std::sqrt(s);
}

NumericMatrix from_eigen(const Eigen::MatrixXcd& m) {
  NumericMatrix out(static_cast<std::size_t>(m.rows()), static_cast<std::size_t>(m.cols()));
  for (Eigen::Index r = 0; r < m.rows(); ++r) {
    for (Eigen::Index c = 0; c < m.cols(); ++c) out(static_cast<std::size_t>(r), static_cast<std::size_t>(c)) = m(r, c);
  }
  return out;
}

std::map<int, NumericMatrix> dft_of_inverse(const LoopSymbol& symbol, std::size_t samples, int max_freq) {
  const auto s = static_cast<Eigen::Index>(symbol.size());
  std::vector<Eigen::MatrixXcd> inv(samples);
  for (std::size_t j = 0; j < samples; ++j) {
    const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(samples);
    inv[j] = symbol.evaluate(theta).partialPivLu().inverse();
  }
  std::map<int, NumericMatrix> out;
  for (int k = -max_freq; k <= max_freq; ++k) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(s, s);
    for (std::size_t j = 0; j < samples; ++j) {
      const double theta = kTwoPi * static_cast<double>(j) / static_cast<double>(samples);
      acc += std::polar(1.0, -k * theta) * inv[j];
    }
    out.emplace(k, from_eigen(acc / static_cast<double>(samples)));
  }
  return out;
}

template <class T>
struct WindowTraces {
  T ab{0};
  T ba{0};
};

// Diagonal blocks of AB and BA summed over the modes 0..W, from the
// truncated band matrices.
template <class T>
WindowTraces<T> window_traces(const HalfLineOperator<T>& a, const HalfLineOperator<T>& b, int window) {
  WindowTraces<T> t;
  const int k = a.truncation();
  for (int m = 0; m <= window; ++m) {
    for (const auto& [d, blk] : a.diagonals()) {
      const int n = m - d;
      if (n < 0 || n > k) continue;
      const auto it = b.diagonals().find(n - m);
      if (it != b.diagonals().end()) t.ab += (blk * it->second).trace();
    }
    for (const auto& [d, blk] : b.diagonals()) {
      const int n = m - d;
      if (n < 0 || n > k) continue;
      const auto it = a.diagonals().find(n - m);
      if (it != a.diagonals().end()) t.ba += (blk * it->second).trace();
    }
  }
  return t;
}

double coefficient_mass(const NumericOperator& op) {
  double s = 0.0;
  for (const auto& [d, blk] : op.diagonals()) s += frobenius(blk);
  return s;
}

// Error contribution of B's coefficient errors against A's coefficients. Only
// modes below the band can pick up a net contribution.
double pair_error(const NumericOperator& a, const LabOperator& b, int window) {
  double s = 0.0;
  for (const auto& [d, blk] : a.diagonals()) {
    const double eps = std::abs(d) <= b.order ? b.coefficient_error : b.tail_norm;
    s += 2.0 * frobenius(blk) * eps;
  }
  return s * static_cast<double>(std::min(window + 1, std::max(a.bandwidth(), 1)));
}

}  // namespace

NumericOperator to_numeric(const ExactOperator& op) {
  std::map<int, NumericMatrix> diags;
  for (const auto& [d, blk] : op.diagonals()) diags.emplace(d, to_numeric(blk));
  return NumericOperator(op.truncation(), op.block(), std::move(diags));
}

int LabOperator::bandwidth() const {
  return std::visit([](const auto& o) { return o.bandwidth(); }, op);
}

int LabOperator::truncation() const {
  return std::visit([](const auto& o) { return o.truncation(); }, op);
}

NumericOperator LabOperator::numeric() const {
  if (const auto* e = std::get_if<ExactOperator>(&op)) return to_numeric(*e);
  return std::get<NumericOperator>(op);
}

ExactOperator toeplitz_compress(const LoopSymbol& symbol, int truncation) {
  const int bw = symbol.bandwidth();
  if (truncation < 0 || truncation < 4 * bw) {
    throw Error(ErrorCode::kWindow, "truncation K = " + std::to_string(truncation) + " is too small for bandwidth " +
                                        std::to_string(bw) + " (need K >= " + std::to_string(4 * bw) + ")");
  }
  return ExactOperator(truncation, symbol.size(), symbol.coefficients());
}

std::map<int, NumericMatrix> inverse_coefficients(const LoopSymbol& symbol, int order, double* error, double* tail) {
  require_elliptic(symbol);
  const int extra = symbol.bandwidth() + 1;
  const int max_freq = order + extra;
  std::size_t samples = 64;
  while (samples < static_cast<std::size_t>(4 * (max_freq + 1))) samples *= 2;

  auto current = dft_of_inverse(symbol, samples, max_freq);
  double change = std::numeric_limits<double>::infinity();
  constexpr std::size_t kMaxSamples = std::size_t{1} << 16;
  while (samples < kMaxSamples) {
    samples *= 2;
    auto refined = dft_of_inverse(symbol, samples, max_freq);
    double diff = 0.0;
    double scale = 1.0;
    for (const auto& [k, c] : refined) {
      diff = std::max(diff, frobenius(c - current.at(k)));
      scale = std::max(scale, frobenius(c));
    }
    current = std::move(refined);
    // Aliasing decays geometrically; once the change stops shrinking it is roundoff.
    const bool stalled = diff > 0.25 * change && diff <= 1e-12 * scale;
    change = diff;
    if (diff <= 1e-15 * scale || stalled) break;
  }

  std::map<int, NumericMatrix> out;
  double tail_norm = 0.0;
  for (auto& [k, c] : current) {
    if (std::abs(k) <= order) {
      out.emplace(k, std::move(c));
    } else {
      tail_norm = std::max(tail_norm, frobenius(c));
    }
  }
  if (error != nullptr) *error = change + 4.0 * std::numeric_limits<double>::epsilon();
  if (tail != nullptr) *tail = tail_norm;
  return out;
}

LabOperator parametrix(const LoopSymbol& symbol, int order, int truncation) {
  if (order < 0) throw Error(ErrorCode::kDomain, "parametrix order M must be nonnegative");
  const int bw = symbol.bandwidth();
  if (truncation < 4 * bw) {
    throw Error(ErrorCode::kWindow, "truncation K = " + std::to_string(truncation) + " is too small for bandwidth " +
                                        std::to_string(bw) + " (need K >= " + std::to_string(4 * bw) + ")");
  }
  require_elliptic(symbol);

  LabOperator result{ExactOperator(truncation, symbol.size(), {}), 0.0, 0.0, order};
  if (const auto inv = symbol.exact_inverse()) {
    std::map<int, ExactMatrix> kept;
    for (const auto& [k, c] : inv->coefficients()) {
      if (std::abs(k) <= order) {
        kept.emplace(k, c);
      } else {
        result.tail_norm = std::max(result.tail_norm, frobenius(to_numeric(c)));
      }
    }
    result.op = ExactOperator(truncation, symbol.size(), std::move(kept));
    return result;
  }

  double error = 0.0;
  double tail = 0.0;
  auto coeffs = inverse_coefficients(symbol, order, &error, &tail);
  result.op = NumericOperator(truncation, symbol.size(), std::move(coeffs));
  result.coefficient_error = error;
  result.tail_norm = tail;
  return result;
}

int max_window(int truncation, int bandwidth_a, int bandwidth_b) { return truncation - 2 * (bandwidth_a + bandwidth_b); }

long IndexValue::rounded() const { return std::lround(value.real()); }

IndexValue trace_commutator_index(const LabOperator& a, const LabOperator& b, std::optional<int> window) {
  if (a.truncation() != b.truncation()) {
    throw Error(ErrorCode::kWindow, "operators are truncated at different K");
  }
  const int k = a.truncation();
  const int bwa = a.bandwidth();
  const int bwb = b.bandwidth();
  const int w_max = max_window(k, bwa, bwb);
  const int w_min = std::min(bwa, bwb);
  const int w = window.value_or(w_max);
  if (w > w_max || w < 0) {
    throw Error(ErrorCode::kWindow, "window W = " + std::to_string(w) + " exceeds K - 2(bw_A + bw_B) = " + std::to_string(w_max));
  }
  if (w < w_min) {
    throw Error(ErrorCode::kWindow, "window W = " + std::to_string(w) + " does not cover the boundary corner of width " +
                                        std::to_string(w_min) + "; increase K");
  }

  IndexValue result;
  result.window = w;
  result.truncation = k;
  result.order = b.order;
  if (a.is_exact() && b.is_exact()) {
    const auto t = window_traces(std::get<ExactOperator>(a.op), std::get<ExactOperator>(b.op), w);
    const GaussianRational value = t.ab - t.ba;
    result.exact = value;
    result.value = value.to_complex();
    result.trace_ab = (t.ab - GaussianRational(static_cast<int>((w + 1) * std::get<ExactOperator>(a.op).block()))).to_complex();
    result.trace_ba = (t.ba - GaussianRational(static_cast<int>((w + 1) * std::get<ExactOperator>(a.op).block()))).to_complex();
    const NumericOperator na = a.numeric();
    const NumericOperator nb = b.numeric();
    result.error_bound = pair_error(na, b, w) + pair_error(nb, a, w);
    return result;
  }

  const NumericOperator na = a.numeric();
  const NumericOperator nb = b.numeric();
  const auto t = window_traces(na, nb, w);
  const double identity_trace = static_cast<double>((w + 1) * na.block());
  result.value = t.ab - t.ba;
  result.trace_ab = t.ab - identity_trace;
  result.trace_ba = t.ba - identity_trace;
  const double roundoff = 64.0 * std::numeric_limits<double>::epsilon() * static_cast<double>(w + 1) *
                          coefficient_mass(na) * coefficient_mass(nb);
  result.error_bound = pair_error(na, b, w) + pair_error(nb, a, w) + roundoff;
  return result;
}

}  // namespace fracindex::lab
