#include "fracindex/lab/symbol.hpp"

#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

#include "fracindex/error.hpp"

namespace fracindex::lab {
namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

Eigen::MatrixXcd to_eigen(const ExactMatrix& m) {
  Eigen::MatrixXcd out(static_cast<Eigen::Index>(m.rows()), static_cast<Eigen::Index>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) = m(r, c).to_complex();
    }
  }
  return out;
}

struct DetBounds {
  double sup = 0.0;        // bound on |det a|
  double lipschitz = 0.0;  // bound on |d/dtheta det a|
};

// Hadamard: |det| <= prod of column norms <= S^s, and the derivative of the
// multilinear determinant is a sum of s determinants with one differentiated column.
DetBounds det_bounds(const LoopSymbol& a) {
  double s0 = 0.0;
  double s1 = 0.0;
  for (const auto& [k, c] : a.coefficients()) {
    const double norm = to_eigen(c).norm();
    s0 += norm;
    s1 += std::abs(k) * norm;
  }
  const double size = static_cast<double>(a.size());
  return {std::pow(s0, size), size * std::pow(s0, size - 1.0) * s1};
}

std::vector<std::complex<double>> sample_det(const LoopSymbol& a, std::size_t n) {
  std::vector<std::complex<double>> out(n);
  for (std::size_t j = 0; j < n; ++j) out[j] = a.determinant(kTwoPi * static_cast<double>(j) / static_cast<double>(n));
  return out;
}

std::string angle_text(double theta) {
  std::ostringstream os;
  os.precision(6);
  os << theta;
  return os.str();
}

}  // namespace

LoopSymbol::LoopSymbol(std::size_t size, std::map<int, ExactMatrix> coefficients) : size_(size) {
  if (size_ == 0) throw Error(ErrorCode::kDomain, "symbol of matrix size 0");
  for (auto& [k, c] : coefficients) {
    if (c.rows() != size_ || c.cols() != size_) {
      throw Error(ErrorCode::kModelMismatch, "symbol coefficient at frequency " + std::to_string(k) + " is not " +
                                                 std::to_string(size_) + "x" + std::to_string(size_));
    }
    if (!c.is_zero()) coeffs_.emplace(k, std::move(c));
  }
  for (const auto& [k, c] : coeffs_) numeric_.emplace_back(k, to_eigen(c));
}

LoopSymbol LoopSymbol::constant(const ExactMatrix& c) { return LoopSymbol(c.rows(), {{0, c}}); }

LoopSymbol LoopSymbol::identity(std::size_t size) { return constant(ExactMatrix::identity(size)); }

LoopSymbol LoopSymbol::monomial(int k, const GaussianRational& c) { return LoopSymbol(1, {{k, ExactMatrix::scalar(1, c)}}); }

LoopSymbol LoopSymbol::scalar(const std::map<int, GaussianRational>& coefficients) {
  std::map<int, ExactMatrix> m;
  for (const auto& [k, c] : coefficients) m.emplace(k, ExactMatrix::scalar(1, c));
  return LoopSymbol(1, std::move(m));
}

LoopSymbol LoopSymbol::diagonal(const std::vector<LoopSymbol>& blocks) {
  std::size_t total = 0;
  std::set<int> freqs;
  for (const auto& b : blocks) {
    total += b.size();
    for (const auto& [k, c] : b.coeffs_) freqs.insert(k);
  }
  std::map<int, ExactMatrix> coeffs;
  for (int k : freqs) {
    ExactMatrix m(total, total);
    std::size_t offset = 0;
    for (const auto& b : blocks) {
      const ExactMatrix c = b.coefficient(k);
      for (std::size_t r = 0; r < b.size(); ++r) {
        for (std::size_t col = 0; col < b.size(); ++col) m(offset + r, offset + col) = c(r, col);
      }
      offset += b.size();
    }
    coeffs.emplace(k, std::move(m));
  }
  return LoopSymbol(total, std::move(coeffs));
}

ExactMatrix LoopSymbol::coefficient(int k) const {
  const auto it = coeffs_.find(k);
  return it == coeffs_.end() ? ExactMatrix(size_, size_) : it->second;
}

int LoopSymbol::bandwidth() const {
  int bw = 0;
  for (const auto& [k, c] : coeffs_) bw = std::max(bw, std::abs(k));
  return bw;
}

Eigen::MatrixXcd LoopSymbol::evaluate(double theta) const {
  const auto n = static_cast<Eigen::Index>(size_);
  Eigen::MatrixXcd out = Eigen::MatrixXcd::Zero(n, n);
  for (const auto& [k, c] : numeric_) out += std::polar(1.0, k * theta) * c;
  return out;
}

std::complex<double> LoopSymbol::determinant(double theta) const {
  if (size_ == 1) {
    std::complex<double> z(0.0, 0.0);
    for (const auto& [k, c] : numeric_) z += std::polar(1.0, k * theta) * c(0, 0);
    return z;
  }
  return evaluate(theta).determinant();
}

bool LoopSymbol::is_monomial() const {
  std::vector<int> per_row(size_, 0);
  std::vector<int> per_col(size_, 0);
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [k, c] : coeffs_) {
    for (std::size_t r = 0; r < size_; ++r) {
      for (std::size_t col = 0; col < size_; ++col) {
        if (c(r, col).is_zero()) continue;
        if (!seen.insert({r, col}).second) return false;  // two frequencies in one slot
        ++per_row[r];
        ++per_col[col];
      }
    }
  }
  for (std::size_t i = 0; i < size_; ++i) {
    if (per_row[i] != 1 || per_col[i] != 1) return false;
  }
  return true;
}

std::optional<LoopSymbol> LoopSymbol::exact_inverse() const {
  if (is_monomial()) {
    std::map<int, ExactMatrix> inv;
    for (const auto& [k, c] : coeffs_) {
      for (std::size_t r = 0; r < size_; ++r) {
        for (std::size_t col = 0; col < size_; ++col) {
          if (c(r, col).is_zero()) continue;
          auto [it, inserted] = inv.try_emplace(-k, size_, size_);
          it->second(col, r) = GaussianRational(1) / c(r, col);
        }
      }
    }
    return LoopSymbol(size_, std::move(inv));
  }
  if (is_constant()) {
    const ExactMatrix c = coefficient(0);
    if (exact_rank(c) < size_) return std::nullopt;
    return constant(lab::exact_inverse(c));
  }
  return std::nullopt;
}

LoopSymbol LoopSymbol::adjoint() const {
  std::map<int, ExactMatrix> out;
  for (const auto& [k, c] : coeffs_) out.emplace(-k, c.adjoint());
  return LoopSymbol(size_, std::move(out));
}

LoopSymbol LoopSymbol::operator*(const LoopSymbol& rhs) const {
  if (size_ != rhs.size_) throw Error(ErrorCode::kModelMismatch, "product of symbols of different sizes");
  std::map<int, ExactMatrix> out;
  for (const auto& [k, a] : coeffs_) {
    for (const auto& [l, b] : rhs.coeffs_) {
      auto [it, inserted] = out.try_emplace(k + l, size_, size_);
      it->second += a * b;
    }
  }
  return LoopSymbol(size_, std::move(out));
}

LoopSymbol LoopSymbol::operator+(const LoopSymbol& rhs) const {
  if (size_ != rhs.size_) throw Error(ErrorCode::kModelMismatch, "sum of symbols of different sizes");
  std::map<int, ExactMatrix> out = coeffs_;
  for (const auto& [k, b] : rhs.coeffs_) {
    auto [it, inserted] = out.try_emplace(k, size_, size_);
    it->second += b;
  }
  return LoopSymbol(size_, std::move(out));
}

LoopSymbol LoopSymbol::scaled(const GaussianRational& s) const {
  std::map<int, ExactMatrix> out;
  for (const auto& [k, c] : coeffs_) out.emplace(k, c * s);
  return LoopSymbol(size_, std::move(out));
}

LoopSymbol interpolate(const LoopSymbol& a0, const LoopSymbol& a1, const Rational& t) {
  return a0.scaled(GaussianRational(Rational(1) - t)) + a1.scaled(GaussianRational(t));
}

EllipticityCertificate certify_elliptic(const LoopSymbol& a, int max_depth, std::size_t base_grid) {
  EllipticityCertificate cert;
  if (a.mode() == SymbolMode::kExact) {
    // Monomial symbols have |det| = prod |c_j| everywhere; constants are checked by exact rank.
    const bool ok = a.is_monomial() || exact_rank(a.coefficient(0)) == a.size();
    cert.elliptic = ok;
    cert.min_abs_det = std::abs(a.determinant(0.0));
    return cert;
  }

  const DetBounds bounds = det_bounds(a);
  cert.lipschitz = bounds.lipschitz;
  const double zero_floor = 1e-14 * std::max(1.0, bounds.sup);
  for (int depth = 0; depth <= max_depth; ++depth) {
    const std::size_t n = base_grid << depth;
    const auto dets = sample_det(a, n);
    cert.grid = n;
    cert.depth = depth;
    cert.min_abs_det = std::abs(dets[0]);
    cert.theta_at_min = 0.0;
    for (std::size_t j = 1; j < n; ++j) {
      if (std::abs(dets[j]) < cert.min_abs_det) {
        cert.min_abs_det = std::abs(dets[j]);
        cert.theta_at_min = kTwoPi * static_cast<double>(j) / static_cast<double>(n);
      }
    }
    if (cert.min_abs_det <= zero_floor) return cert;  // numerically singular
    if (cert.min_abs_det > bounds.lipschitz * std::numbers::pi / static_cast<double>(n)) {
      cert.elliptic = true;
      return cert;
    }
  }
  return cert;
}

void require_elliptic(const LoopSymbol& a, int max_depth) {
  const auto cert = certify_elliptic(a, max_depth);
  if (!cert.elliptic) {
    throw Error(ErrorCode::kEllipticity, "symbol is not certified elliptic: |det a| reaches " + angle_text(cert.min_abs_det) +
                                             " near theta = " + angle_text(cert.theta_at_min) + " (grid " +
                                             std::to_string(cert.grid) + ")");
  }
}

int winding_number(const LoopSymbol& a, int max_depth) {
  if (a.mode() == SymbolMode::kExact) {
    require_elliptic(a, max_depth);
    if (a.is_constant()) return 0;
    int total = 0;
    for (const auto& [k, c] : a.coefficients()) {
      for (std::size_t r = 0; r < a.size(); ++r) {
        for (std::size_t col = 0; col < a.size(); ++col) {
          if (!c(r, col).is_zero()) total += k;
        }
      }
    }
    return total;
  }

  require_elliptic(a, max_depth);
  const DetBounds bounds = det_bounds(a);
  // Once consecutive samples differ by less than the smaller modulus, each
  // step turns by less than pi/2 and the principal arguments add up exactly.
  for (int depth = 0; depth <= max_depth; ++depth) {
    const std::size_t n = std::size_t{64} << depth;
    const auto dets = sample_det(a, n);
    double min_abs = std::abs(dets[0]);
    for (const auto& d : dets) min_abs = std::min(min_abs, std::abs(d));
    if (min_abs <= bounds.lipschitz * kTwoPi / static_cast<double>(n)) continue;
    double turn = 0.0;
    for (std::size_t j = 0; j < n; ++j) turn += std::arg(dets[(j + 1) % n] / dets[j]);
    const double w = turn / kTwoPi;
    const double rounded = std::round(w);
    if (std::abs(w - rounded) > 1e-6) {
      throw Error(ErrorCode::kInternal, "argument tracking produced a non-integral winding " + angle_text(w));
    }
    return static_cast<int>(rounded);
  }
  throw Error(ErrorCode::kGridTooCoarse, "winding number not certified on " + std::to_string(std::size_t{64} << max_depth) +
                                             " samples; the symbol is too close to singular");
}

}  // namespace fracindex::lab
