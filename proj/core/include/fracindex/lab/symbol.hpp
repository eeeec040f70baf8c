#pragma once

#include <complex>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "fracindex/lab/matrix.hpp"

namespace fracindex::lab {

enum class SymbolMode {
  kExact,    // inverse is a Laurent polynomial computed exactly
  kNumeric,  // inverse Fourier coefficients computed in double precision
};

/// Matrix-valued trigonometric polynomial a(theta) = sum_k a_k e^{ik theta}
/// on the circle, the principal symbol of an operator on the half-line.
/// Coefficients are exact Gaussian rationals.
class LoopSymbol {
 public:
  LoopSymbol(std::size_t size, std::map<int, ExactMatrix> coefficients);

  static LoopSymbol constant(const ExactMatrix& c);
  static LoopSymbol identity(std::size_t size);
  /// Scalar c e^{ik theta}.
  static LoopSymbol monomial(int k, const GaussianRational& c = 1);
  /// Scalar symbol from frequency -> coefficient.
  static LoopSymbol scalar(const std::map<int, GaussianRational>& coefficients);
  /// Block diagonal of the given symbols.
  static LoopSymbol diagonal(const std::vector<LoopSymbol>& blocks);

  std::size_t size() const { return size_; }
  const std::map<int, ExactMatrix>& coefficients() const { return coeffs_; }
  /// Coefficient at frequency k (zero matrix if absent).
  ExactMatrix coefficient(int k) const;
  /// Largest |k| with a nonzero coefficient.
  int bandwidth() const;

  Eigen::MatrixXcd evaluate(double theta) const;
  std::complex<double> determinant(double theta) const;

  /// Each row and column carries exactly one nonzero entry c e^{ik theta}
  /// across all frequencies, so the inverse is again such a matrix.
  bool is_monomial() const;
  bool is_constant() const { return bandwidth() == 0; }
  SymbolMode mode() const { return is_monomial() || is_constant() ? SymbolMode::kExact : SymbolMode::kNumeric; }

  /// Exact inverse symbol for exact-mode symbols; nullopt otherwise.
  std::optional<LoopSymbol> exact_inverse() const;

  /// Pointwise adjoint a(theta)^*: coefficient k is (a_{-k})^H.
  LoopSymbol adjoint() const;

  /// Pointwise product (this)(theta) * rhs(theta).
  LoopSymbol operator*(const LoopSymbol& rhs) const;
  LoopSymbol operator+(const LoopSymbol& rhs) const;
  LoopSymbol scaled(const GaussianRational& s) const;

  friend bool operator==(const LoopSymbol& a, const LoopSymbol& b) { return a.size_ == b.size_ && a.coeffs_ == b.coeffs_; }

 private:
  std::size_t size_;
  std::map<int, ExactMatrix> coeffs_;  // nonzero coefficients only
  std::vector<std::pair<int, Eigen::MatrixXcd>> numeric_;
};

/// Affine path (1-t) a_0 + t a_1 between two symbols of equal size.
LoopSymbol interpolate(const LoopSymbol& a0, const LoopSymbol& a1, const Rational& t);

struct EllipticityCertificate {
  bool elliptic = false;
  double min_abs_det = 0.0;  // smallest sampled |det a|
  double theta_at_min = 0.0;
  double lipschitz = 0.0;  // bound on |d/dtheta det a|
  std::size_t grid = 0;    // samples at the final refinement level
  int depth = 0;           // refinement levels used
};

/// Samples |det a| on a dyadically refined grid. The symbol is certified once
/// the sampled minimum exceeds the Lipschitz bound times half the spacing.
/// Exact-mode symbols are certified symbolically.
EllipticityCertificate certify_elliptic(const LoopSymbol& a, int max_depth = 16, std::size_t base_grid = 64);

/// Throws kEllipticity with the failing angle if certification fails.
void require_elliptic(const LoopSymbol& a, int max_depth = 16);

/// Winding number of det a(theta) around the origin.
int winding_number(const LoopSymbol& a, int max_depth = 16);

}  // namespace fracindex::lab
