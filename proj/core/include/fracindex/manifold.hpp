#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracindex/coh_class.hpp"
#include "fracindex/genera.hpp"
#include "fracindex/ring_model.hpp"

namespace fracindex {

/// A closed oriented even-dimensional manifold at the level of rational
/// cohomology and tangent characteristic classes.
struct ManifoldModel {
  std::string label;
  int real_dimension = 0;
  RingPtr ring;
  CharData tangent;
  bool is_complex = false;
  /// Parity of c_1 in the integral degree-2 basis; set for complex models.
  std::optional<bool> c1_parity_even;
  /// Spin flag. Complex models use the c_1 parity test; records carry it
  /// explicitly; anything else is left undetermined.
  std::optional<bool> spin;
  /// Free-form metadata, carried through serialization but never verified.
  std::map<std::string, std::string> annotations;

  /// First Chern class of the tangent bundle; complex models only.
  CohClass c1() const;

  /// Field-wise equality with structural ring comparison.
  friend bool operator==(const ManifoldModel& a, const ManifoldModel& b);
};

/// Checks the structural invariants; throws Error on violation.
void validate(const ManifoldModel& m);

/// True when every coefficient of `c1` on the degree-2 basis is an even integer.
bool c1_parity_even(const CohClass& c1);

ManifoldModel point();

/// Complex projective space CP^n: Q[x]/(x^{n+1}), c(T) = (1+x)^{n+1}.
ManifoldModel cp(int n);

/// Smooth hypersurface of degree `degree` in CP^{2n+1} (complex dimension 2n):
/// Q[h]/(h^{2n+1}) with integral h^{2n} = degree and c(T) = (1+h)^{2n+2}/(1+degree*h).
ManifoldModel hypersurface(int n, int degree);

/// Cartesian product of two complex models (Kuenneth ring, Whitney-summed tangent data).
ManifoldModel product(const ManifoldModel& a, const ManifoldModel& b, std::size_t max_basis = 4096);

/// A manifold known only through its oriented cobordism class: it reuses the
/// reference's ring and Pontryagin numbers and is flagged non-spin.
ManifoldModel cobordism_record(std::string label, const ManifoldModel& reference,
                               std::map<std::string, std::string> annotations = {});

/// Names accepted by `builtin`: "point", "cp<n>", "k3", "hopkins",
/// "hypersurface:<n>:<degree>", and products joined by '*', e.g. "cp1*cp1".
std::vector<std::string> builtin_examples();
ManifoldModel builtin(std::string_view name);

}  // namespace fracindex
