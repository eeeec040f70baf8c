#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "fracindex/lab/matrix.hpp"
#include "fracindex/lab/symbol.hpp"

namespace fracindex::lab {

/// Compression of a symbol to the modes 0..K of the half-line: a block
/// band matrix whose (m, n) block is the Fourier coefficient a_{m-n}.
template <class T>
class HalfLineOperator {
 public:
  HalfLineOperator(int truncation, std::size_t block, std::map<int, Matrix<T>> diagonals)
      : truncation_(truncation), block_(block), diagonals_(std::move(diagonals)) {}

  int truncation() const { return truncation_; }
  std::size_t block() const { return block_; }
  std::size_t dimension() const { return static_cast<std::size_t>(truncation_ + 1) * block_; }
  /// Block diagonals keyed by m - n.
  const std::map<int, Matrix<T>>& diagonals() const { return diagonals_; }

  int bandwidth() const {
    int bw = 0;
    for (const auto& [d, m] : diagonals_) bw = std::max(bw, d < 0 ? -d : d);
    return bw;
  }

  /// The (m, n) block; zero outside the band or the truncation.
  Matrix<T> block_at(int m, int n) const {
    if (m < 0 || n < 0 || m > truncation_ || n > truncation_) return Matrix<T>(block_, block_);
    const auto it = diagonals_.find(m - n);
    return it == diagonals_.end() ? Matrix<T>(block_, block_) : it->second;
  }

  Matrix<T> dense() const {
    Matrix<T> out(dimension(), dimension());
    for (int m = 0; m <= truncation_; ++m) {
      for (const auto& [d, blk] : diagonals_) {
        const int n = m - d;
        if (n < 0 || n > truncation_) continue;
        for (std::size_t r = 0; r < block_; ++r) {
          for (std::size_t c = 0; c < block_; ++c) {
            out(static_cast<std::size_t>(m) * block_ + r, static_cast<std::size_t>(n) * block_ + c) = blk(r, c);
          }
        }
      }
    }
    return out;
  }

 private:
  int truncation_;
  std::size_t block_;
  std::map<int, Matrix<T>> diagonals_;
};

using ExactOperator = HalfLineOperator<GaussianRational>;
using NumericOperator = HalfLineOperator<Complex>;

NumericOperator to_numeric(const ExactOperator& op);

/// Operator together with the accuracy of its coefficients. Exact
/// compressions carry zero error.
struct LabOperator {
  std::variant<ExactOperator, NumericOperator> op;
  /// Bound on ||b_k - (a^{-1})_k||_F for |k| <= M (parametrices only).
  double coefficient_error = 0.0;
  /// Largest ||(a^{-1})_k||_F over the omitted frequencies |k| > M.
  double tail_norm = 0.0;
  int order = 0;  // Fourier truncation order M of a parametrix

  bool is_exact() const { return std::holds_alternative<ExactOperator>(op); }
  int bandwidth() const;
  int truncation() const;
  NumericOperator numeric() const;
};

/// Requires K >= 4 * bandwidth.
ExactOperator toeplitz_compress(const LoopSymbol& symbol, int truncation);

inline LabOperator as_lab_operator(ExactOperator op) { return LabOperator{std::move(op), 0.0, 0.0, 0}; }

/// Compression of the order-M Fourier truncation of a^{-1}. Exact for
/// monomial and constant symbols, double precision otherwise.
LabOperator parametrix(const LoopSymbol& symbol, int order, int truncation);

/// Fourier coefficients (a^{-1})_k, |k| <= order, from an adaptively refined
/// sampling of the pointwise inverse. `error` receives the change between the
/// last two refinements.
std::map<int, NumericMatrix> inverse_coefficients(const LoopSymbol& symbol, int order, double* error = nullptr,
                                                  double* tail = nullptr);

struct IndexValue {
  std::complex<double> value;
  std::optional<GaussianRational> exact;
  /// Windowed Tr(AB - Id) and Tr(BA - Id).
  std::complex<double> trace_ab;
  std::complex<double> trace_ba;
  double error_bound = 0.0;
  int window = 0;
  int truncation = 0;
  int order = 0;
  std::vector<std::string> notes;

  bool is_exact() const { return exact.has_value(); }
  /// The nearest integer to the real part.
  long rounded() const;
};

/// Largest window allowed for the pair: K - 2 (bw_A + bw_B).
int max_window(int truncation, int bandwidth_a, int bandwidth_b);

/// Tr(AB - Id) - Tr(BA - Id) over the modes 0..W. Requires
/// min(bw_A, bw_B) <= W <= K - 2 (bw_A + bw_B) so that the truncation
/// corner never reaches the traced block.
IndexValue trace_commutator_index(const LabOperator& a, const LabOperator& b, std::optional<int> window = std::nullopt);

}  // namespace fracindex::lab
