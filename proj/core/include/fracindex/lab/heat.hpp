#pragma once

#include <optional>
#include <random>
#include <vector>

#include "fracindex/lab/matrix.hpp"

namespace fracindex::lab {

/// Finite-dimensional graded operator D+ : E -> F, stored as a dim F x dim E
/// matrix. The inner products default to the identity.
struct GradedOperator {
  ExactMatrix d_plus;
  std::optional<ExactMatrix> gram_e;
  std::optional<ExactMatrix> gram_f;

  std::size_t dim_e() const { return d_plus.cols(); }
  std::size_t dim_f() const { return d_plus.rows(); }
};

/// Throws if the Gram matrices do not match the dimensions.
void validate(const GradedOperator& d);

struct Supertrace {
  double t = 0.0;
  double value = 0.0;  // Tr exp(-t D+* D+) - Tr exp(-t D+ D+*)
};

struct McKeanSingerResult {
  std::vector<Supertrace> supertraces;
  long kernel_plus = 0;   // dim ker D+
  long kernel_minus = 0;  // dim ker D+*
  double stddev = 0.0;
  double max_deviation = 0.0;  // from kernel_plus - kernel_minus

  long index() const { return kernel_plus - kernel_minus; }
};

McKeanSingerResult mckean_singer_check(const GradedOperator& d, const std::vector<double>& t_grid = {0.1, 1.0, 10.0});

/// D+ = U V with U of size n x r and V of size r x m, small Gaussian-integer
/// entries and 1 <= m, n <= max_dim.
GradedOperator random_graded_operator(std::mt19937_64& rng, std::size_t max_dim = 12);

}  // namespace fracindex::lab
