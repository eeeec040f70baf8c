#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fracindex/rational.hpp"

namespace fracindex {

struct Generator {
  std::string name;
  int degree = 2;  // real degree, even and positive

  friend bool operator==(const Generator&, const Generator&) = default;
};

/// Exponent vector over the ring's generators.
using Exponents = std::vector<int>;

/// A linear combination of basis monomials.
struct Term {
  std::size_t index = 0;
  Rational coeff;

  friend bool operator==(const Term&, const Term&) = default;
};
using Combination = std::vector<Term>;

/// Raw description of a truncated graded-commutative ring, before validation.
///
/// Products of basis monomials default to monomial arithmetic: the product of
/// two basis monomials is the basis monomial with the summed exponents, and
/// vanishes when that monomial is absent from the basis or lies above the top
/// degree. Entries in `products`, keyed by the summed exponent vector,
/// override the default with an explicit combination of basis monomials.
struct RingSpec {
  std::vector<Generator> generators;
  std::vector<Exponents> basis;
  std::map<Exponents, std::vector<std::pair<Exponents, Rational>>> products;
  std::map<Exponents, Rational> pairing;
  int top_degree = 0;
};

class RingModel;
using RingPtr = std::shared_ptr<const RingModel>;

/// Finite-dimensional model of the even rational cohomology of a closed
/// oriented manifold: a monomial basis sorted by degree, a precomputed
/// product table and the fundamental-class pairing on the top degree.
class RingModel {
 public:
  enum class Validation { kFull, kTrusted };

  /// Validates `spec` and builds the product table. `kFull` additionally
  /// checks associativity over all basis triples.
  static RingPtr build(const RingSpec& spec, Validation validation = Validation::kFull);

  /// Q[x]/(x^{n+1}) with deg x = 2 and the pairing x^n -> `volume`.
  static RingPtr truncated_polynomial(std::string generator, int n, const Rational& volume = 1);

  /// The ring of a point: Q in degree 0 with pairing 1.
  static RingPtr point();

  struct TensorResult {
    RingPtr ring;
    std::vector<std::size_t> left;   // basis index of a_i (x) 1
    std::vector<std::size_t> right;  // basis index of 1 (x) b_j
  };
  /// Kuenneth product. Clashing generator names on the right get a "_k" suffix.
  static TensorResult tensor(const RingModel& a, const RingModel& b, std::size_t max_basis = 4096);

  const std::vector<Generator>& generators() const { return generators_; }
  std::size_t dimension() const { return basis_.size(); }
  int top_degree() const { return top_degree_; }

  const Exponents& exponents(std::size_t i) const { return basis_[i]; }
  int degree(std::size_t i) const { return degrees_[i]; }
  const std::string& monomial_name(std::size_t i) const { return names_[i]; }

  /// Basis index of the monomial, if it is a basis element.
  std::optional<std::size_t> find(const Exponents& e) const;
  /// Parses "1", "x", "x^2*y" against the generator names.
  Exponents parse_monomial(std::string_view text) const;
  std::string format_monomial(const Exponents& e) const;
  int degree_of(const Exponents& e) const;

  /// Half-open range [first, last) of basis indices of the given degree.
  std::pair<std::size_t, std::size_t> degree_range(int degree) const;

  const Combination& product(std::size_t i, std::size_t j) const { return table_[i * basis_.size() + j]; }
  const Rational& pairing(std::size_t i) const { return pairing_[i]; }

  /// Structural equality: same generators, basis, table and pairing.
  friend bool operator==(const RingModel& a, const RingModel& b);

 private:
  RingModel() = default;

  std::vector<Generator> generators_;
  std::vector<Exponents> basis_;
  std::vector<int> degrees_;
  std::vector<std::string> names_;
  std::map<Exponents, std::size_t> lookup_;
  std::vector<Combination> table_;
  std::vector<Rational> pairing_;
  int top_degree_ = 0;
};

/// True when both pointers denote the same ring, structurally.
bool same_ring(const RingPtr& a, const RingPtr& b);

}  // namespace fracindex
