#include "fracindex/lab/heat.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Dense>

#include "fracindex/error.hpp"

namespace fracindex::lab {
namespace {

Eigen::MatrixXcd to_eigen(const ExactMatrix& m) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).to_complex();
    }
  }
  return out;
}

// Lower Cholesky factor of the Gram matrix, or the identity.
Eigen::MatrixXcd cholesky_factor(const std::optional<ExactMatrix>& gram, std::size_t n, const char* name) {
  const auto dim = static_cast<Eigen::Index>(n);
  if (!gram) return Eigen::MatrixXcd::Identity(dim, dim);
  const Eigen::MatrixXcd g = to_eigen(*gram);
  if (!g.isApprox(g.adjoint())) throw Error(ErrorCode::kDomain, std::string("inner product on ") + name + " is not Hermitian");
  Eigen::LLT<Eigen::MatrixXcd> llt(g);
  if (llt.info() != Eigen::Success) {
    throw Error(ErrorCode::kDomain, std::string("inner product on ") + name + " is not positive definite");
  }
  return llt.matrixL();
}

double heat_trace(const Eigen::VectorXd& eigenvalues, double t) {
  double s = 0.0;
  for (Eigen::Index i = 0; i < eigenvalues.size(); ++i) s += std::exp(-t * std::max(eigenvalues(i), 0.0));
  return s;
}

// Eigenvalues of M^H M (size cols) from the singular values of M.
Eigen::VectorXd squared_spectrum(const Eigen::MatrixXcd& m, std::size_t cols) {
  Eigen::VectorXd out = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(cols));
  if (m.size() == 0) return out;
  const Eigen::VectorXd sv = Eigen::JacobiSVD<Eigen::MatrixXcd>(m).singularValues();
  for (Eigen::Index i = 0; i < sv.size(); ++i) out(i) = sv(i) * sv(i);
  return out;
}

}  // namespace

void validate(const GradedOperator& d) {
  if (d.gram_e && (d.gram_e->rows() != d.dim_e() || d.gram_e->cols() != d.dim_e())) {
    throw Error(ErrorCode::kModelMismatch, "inner product on E does not match the domain dimension");
  }
  if (d.gram_f && (d.gram_f->rows() != d.dim_f() || d.gram_f->cols() != d.dim_f())) {
    throw Error(ErrorCode::kModelMismatch, "inner product on F does not match the target dimension");
  }
}

McKeanSingerResult mckean_singer_check(const GradedOperator& d, const std::vector<double>& t_grid) {
  validate(d);
  for (double t : t_grid) {
    if (!(t > 0.0)) throw Error(ErrorCode::kDomain, "heat times must be positive");
  }
  McKeanSingerResult result;
  const auto rank = static_cast<long>(exact_rank(d.d_plus));
  result.kernel_plus = static_cast<long>(d.dim_e()) - rank;
  result.kernel_minus = static_cast<long>(d.dim_f()) - rank;

  // With G = L L^H the operator L_F^H D L_E^{-H} is unitarily equivalent to D+
  // between the two inner product spaces.
  const Eigen::MatrixXcd le = cholesky_factor(d.gram_e, d.dim_e(), "E");
  const Eigen::MatrixXcd lf = cholesky_factor(d.gram_f, d.dim_f(), "F");
  const Eigen::MatrixXcd le_inv_h = le.adjoint().triangularView<Eigen::Upper>().solve(
      Eigen::MatrixXcd::Identity(le.rows(), le.cols()));
  const Eigen::MatrixXcd dt = lf.adjoint() * to_eigen(d.d_plus) * le_inv_h;

  // Spectra of D*D and DD* as squared singular values of D and D^H, computed
  // independently; squaring keeps roundoff in the kernel below 1e-25.
  const Eigen::VectorXd ev_e = squared_spectrum(dt, d.dim_e());
  const Eigen::VectorXd ev_f = squared_spectrum(dt.adjoint(), d.dim_f());

  double mean = 0.0;
  for (double t : t_grid) {
    const double value = heat_trace(ev_e, t) - heat_trace(ev_f, t);
    result.supertraces.push_back({t, value});
    mean += value;
    result.max_deviation = std::max(result.max_deviation, std::abs(value - static_cast<double>(result.index())));
  }
  if (!t_grid.empty()) {
    mean /= static_cast<double>(t_grid.size());
    double var = 0.0;
    for (const auto& s : result.supertraces) var += (s.value - mean) * (s.value - mean);
    result.stddev = std::sqrt(var / static_cast<double>(t_grid.size()));
  }
  return result;
}

GradedOperator random_graded_operator(std::mt19937_64& rng, std::size_t max_dim) {
  if (max_dim == 0) throw Error(ErrorCode::kDomain, "random operator dimension bound must be positive");
  std::uniform_int_distribution<std::size_t> pick_dim(1, max_dim);
  const std::size_t m = pick_dim(rng);
  const std::size_t n = pick_dim(rng);
  std::uniform_int_distribution<std::size_t> pick_rank(0, std::min(m, n));
  const std::size_t r = pick_rank(rng);
  std::uniform_int_distribution<int> entry(-2, 2);
  const auto fill = [&](std::size_t rows, std::size_t cols) {
    ExactMatrix out(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      for (std::size_t j = 0; j < cols; ++j) out(i, j) = GaussianRational(Rational(entry(rng)), Rational(entry(rng)));
    }
    return out;
  };
  const ExactMatrix u = fill(n, r);
  const ExactMatrix v = fill(r, m);
  return GradedOperator{r == 0 ? ExactMatrix(n, m) : u * v, std::nullopt, std::nullopt};
}

}  // namespace fracindex::lab
