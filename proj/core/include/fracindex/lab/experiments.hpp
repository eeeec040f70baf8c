#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "fracindex/lab/half_line.hpp"
#include "fracindex/lab/symbol.hpp"

namespace fracindex::lab {

struct LabOptions {
  int truncation = 64;       // K
  std::optional<int> order;  // M; default: symbol bandwidth (exact) or max(16, bandwidth)
  std::optional<int> window; // W; default: the largest admissible window
  double index_tolerance = 1e-9;
  double imaginary_tolerance = 1e-12;
  int certificate_depth = 16;
  /// Raise K and clamp W into the admissible range instead of failing;
  /// each change is recorded in IndexValue::notes.
  bool auto_adjust = false;
};

/// Parametrix order used for `symbol` under `options`.
int default_order(const LoopSymbol& symbol, const LabOptions& options);

/// Compresses the symbol and its parametrix and evaluates the trace of the
/// commutator defect.
IndexValue symbol_index(const LoopSymbol& symbol, const LabOptions& options = {});

/// Piecewise-linear path through the given symbols, sampled at `steps` equally
/// spaced parameters in [0, 1].
struct SymbolPath {
  std::vector<LoopSymbol> nodes;

  LoopSymbol at(const Rational& t) const;
};

struct HomotopyStep {
  Rational t;
  IndexValue index;
};

struct HomotopyResult {
  std::vector<HomotopyStep> steps;
  double spread = 0.0;  // max - min of the real parts
  bool constant = true; // spread within the index tolerance
};

/// Index along the path. Throws kEllipticity naming the first parameter at
/// which the certificate fails.
HomotopyResult homotopy_sweep(const SymbolPath& path, int steps, const LabOptions& options = {});

struct AdditivityResult {
  IndexValue product;  // index of a2 a1
  IndexValue first;
  IndexValue second;
  std::complex<double> sum;
  std::optional<GaussianRational> exact_sum;
  bool agree = false;
};

AdditivityResult composition_additivity_check(const LoopSymbol& a1, const LoopSymbol& a2, const LabOptions& options = {});

struct RotationSample {
  double angle = 0.0;
  IndexValue index;
};

struct AdjointResult {
  IndexValue index;
  IndexValue adjoint_index;
  std::vector<RotationSample> rotation;
  bool antisymmetric = false;  // ind(A*) = -ind(A)
  bool real = false;           // imaginary parts within tolerance
  bool rotation_zero = false;  // every rotation-family index vanishes
};

/// Block symbol [[sin(phi) Id, cos(phi) a^*], [-cos(phi) a, sin(phi) Id]].
LoopSymbol rotation_symbol(const LoopSymbol& a, double phi);

/// Checks ind(A*) = -ind(A), reality of the index, and the vanishing index
/// of the rotation family at `samples` angles in [0, pi/2].
AdjointResult adjoint_index_check(const LoopSymbol& a, const LabOptions& options = {}, int samples = 5);

/// z^k (1 + p) with |p| < 1/2 on the circle, optionally matrix valued;
/// its winding number is size * k.
LoopSymbol random_perturbed_symbol(std::mt19937_64& rng, int max_winding = 3, std::size_t size = 1);

}  // namespace fracindex::lab
