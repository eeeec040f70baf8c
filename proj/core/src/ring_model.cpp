#include "fracindex/ring_model.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

#include "fracindex/error.hpp"

namespace fracindex {
namespace {

bool valid_identifier(std::string_view name) {
  if (name.empty() || std::isdigit(static_cast<unsigned char>(name.front()))) return false;
  return std::all_of(name.begin(), name.end(), [](char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
  });
}

Exponents add(const Exponents& a, const Exponents& b) {
  Exponents r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

Exponents concat(const Exponents& a, const Exponents& b) {
  Exponents r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

// Merges duplicate indices and drops zero coefficients; result sorted by index.
Combination normalize(Combination c) {
  std::sort(c.begin(), c.end(), [](const Term& x, const Term& y) { return x.index < y.index; });
  Combination out;
  for (auto& t : c) {
    if (!out.empty() && out.back().index == t.index) {
      out.back().coeff += t.coeff;
    } else {
      out.push_back(std::move(t));
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coeff.is_zero(); });
  return out;
}

Combination multiply(const RingModel& ring, const Combination& a, const Combination& b) {
  Combination acc;
  for (const auto& x : a) {
    for (const auto& y : b) {
      for (const auto& z : ring.product(x.index, y.index)) {
        acc.push_back({z.index, x.coeff * y.coeff * z.coeff});
      }
    }
  }
  return normalize(std::move(acc));
}

}  // namespace

int RingModel::degree_of(const Exponents& e) const {
  int d = 0;
  for (std::size_t g = 0; g < generators_.size(); ++g) d += e[g] * generators_[g].degree;
  return d;
}

std::optional<std::size_t> RingModel::find(const Exponents& e) const {
  const auto it = lookup_.find(e);
  if (it == lookup_.end()) return std::nullopt;
  return it->second;
}

std::pair<std::size_t, std::size_t> RingModel::degree_range(int degree) const {
  const auto lo = std::lower_bound(degrees_.begin(), degrees_.end(), degree);
  const auto hi = std::upper_bound(degrees_.begin(), degrees_.end(), degree);
  return {static_cast<std::size_t>(lo - degrees_.begin()), static_cast<std::size_t>(hi - degrees_.begin())};
}

Exponents RingModel::parse_monomial(std::string_view text) const {
  Exponents e(generators_.size(), 0);
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
  }
  if (s == "1") return e;
  if (s.empty()) throw Error(ErrorCode::kParse, "empty monomial");

  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t star = std::min(s.find('*', pos), s.size());
    const std::string factor = s.substr(pos, star - pos);
    std::string name = factor;
    int power = 1;
    if (const auto caret = factor.find('^'); caret != std::string::npos) {
      name = factor.substr(0, caret);
      const std::string p = factor.substr(caret + 1);
      if (p.empty() || !std::all_of(p.begin(), p.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
        throw Error(ErrorCode::kParse, "bad exponent in monomial '" + std::string(text) + "'");
      }
      power = std::stoi(p);
    }
    if (name != "1") {
      const auto it = std::find_if(generators_.begin(), generators_.end(),
                                   [&](const Generator& g) { return g.name == name; });
      if (it == generators_.end()) {
        throw Error(ErrorCode::kParse, "unknown generator '" + name + "' in monomial '" + std::string(text) + "'");
      }
      e[static_cast<std::size_t>(it - generators_.begin())] += power;
    }
    pos = star + 1;
  }
  return e;
}

std::string RingModel::format_monomial(const Exponents& e) const {
  std::string out;
  for (std::size_t g = 0; g < generators_.size(); ++g) {
    if (e[g] == 0) continue;
    if (!out.empty()) out += '*';
    out += generators_[g].name;
    if (e[g] > 1) out += '^' + std::to_string(e[g]);
  }
  return out.empty() ? "1" : out;
}

RingPtr RingModel::build(const RingSpec& spec, Validation validation) {
  if (spec.top_degree < 0 || spec.top_degree % 2 != 0) {
    throw Error(ErrorCode::kOddDegree, "top degree must be even and nonnegative, got " + std::to_string(spec.top_degree));
  }

  std::shared_ptr<RingModel> ring(new RingModel());
  ring->top_degree_ = spec.top_degree;
  ring->generators_ = spec.generators;

  std::set<std::string> names;
  for (const auto& g : spec.generators) {
    if (!valid_identifier(g.name)) throw Error(ErrorCode::kSchema, "invalid generator name '" + g.name + "'");
    if (!names.insert(g.name).second) throw Error(ErrorCode::kSchema, "duplicate generator '" + g.name + "'");
    if (g.degree <= 0 || g.degree % 2 != 0) {
      throw Error(ErrorCode::kOddDegree,
                  "generator '" + g.name + "' has degree " + std::to_string(g.degree) + "; only even positive degrees are representable");
    }
  }

  const std::size_t ngen = spec.generators.size();
  std::vector<Exponents> basis = spec.basis;
  for (const auto& e : basis) {
    if (e.size() != ngen || std::any_of(e.begin(), e.end(), [](int k) { return k < 0; })) {
      throw Error(ErrorCode::kSchema, "basis monomial has a malformed exponent vector");
    }
    if (const int d = ring->degree_of(e); d > spec.top_degree) {
      throw Error(ErrorCode::kTruncation, "basis monomial '" + ring->format_monomial(e) + "' has degree " + std::to_string(d) +
                                              " above the top degree " + std::to_string(spec.top_degree));
    }
  }
  std::sort(basis.begin(), basis.end(), [&](const Exponents& a, const Exponents& b) {
    const int da = ring->degree_of(a);
    const int db = ring->degree_of(b);
    return da != db ? da < db : a > b;
  });
  if (std::adjacent_find(basis.begin(), basis.end()) != basis.end()) {
    throw Error(ErrorCode::kSchema, "duplicate basis monomial");
  }
  if (basis.empty() || std::any_of(basis.front().begin(), basis.front().end(), [](int k) { return k != 0; })) {
    throw Error(ErrorCode::kSchema, "basis must contain the unit monomial 1");
  }

  ring->basis_ = basis;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    ring->degrees_.push_back(ring->degree_of(basis[i]));
    ring->names_.push_back(ring->format_monomial(basis[i]));
    ring->lookup_.emplace(basis[i], i);
  }

  std::map<Exponents, Combination> explicit_products;
  for (const auto& [key, result] : spec.products) {
    if (key.size() != ngen || std::any_of(key.begin(), key.end(), [](int k) { return k < 0; })) {
      throw Error(ErrorCode::kSchema, "product key has a malformed exponent vector");
    }
    const int kd = ring->degree_of(key);
    Combination comb;
    for (const auto& [mono, coeff] : result) {
      if (coeff.is_zero()) continue;
      if (mono.size() != ngen) throw Error(ErrorCode::kSchema, "product result has a malformed exponent vector");
      if (kd > spec.top_degree) {
        throw Error(ErrorCode::kTruncation, "product '" + ring->format_monomial(key) + "' lands in degree " + std::to_string(kd) +
                                                " above the top degree but is nonzero");
      }
      if (ring->degree_of(mono) != kd) {
        throw Error(ErrorCode::kDegreeMismatch, "product '" + ring->format_monomial(key) + "' of degree " + std::to_string(kd) +
                                                    " has a term '" + ring->format_monomial(mono) + "' of degree " +
                                                    std::to_string(ring->degree_of(mono)));
      }
      const auto idx = ring->find(mono);
      if (!idx) throw Error(ErrorCode::kSchema, "product result '" + ring->format_monomial(mono) + "' is not a basis monomial");
      comb.push_back({*idx, coeff});
    }
    explicit_products[key] = normalize(std::move(comb));
  }

  const std::size_t n = basis.size();
  ring->table_.resize(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Exponents total = add(basis[i], basis[j]);
      Combination& slot = ring->table_[i * n + j];
      if (const auto it = explicit_products.find(total); it != explicit_products.end()) {
        slot = it->second;
      } else if (ring->degree_of(total) <= spec.top_degree) {
        if (const auto idx = ring->find(total)) slot = {{*idx, Rational(1)}};
      }
    }
  }

  ring->pairing_.assign(n, Rational(0));
  bool nonzero = false;
  for (const auto& [mono, value] : spec.pairing) {
    const auto idx = ring->find(mono);
    if (!idx) throw Error(ErrorCode::kSchema, "pairing on '" + ring->format_monomial(mono) + "', which is not a basis monomial");
    if (ring->degrees_[*idx] != spec.top_degree) {
      if (value.is_zero()) continue;
      throw Error(ErrorCode::kDegreeMismatch, "pairing on '" + ring->format_monomial(mono) + "' outside the top degree");
    }
    ring->pairing_[*idx] = value;
    nonzero = nonzero || !value.is_zero();
  }
  if (!nonzero) throw Error(ErrorCode::kZeroPairing, "fundamental pairing vanishes on every top-degree monomial");

  if (validation == Validation::kFull) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (ring->degrees_[i] + ring->degrees_[j] + ring->degrees_[k] > spec.top_degree) continue;
          const Combination left = multiply(*ring, ring->product(i, j), {{k, Rational(1)}});
          const Combination right = multiply(*ring, {{i, Rational(1)}}, ring->product(j, k));
          if (left != right) {
            throw Error(ErrorCode::kNonAssociative, "product table is not associative on (" + ring->names_[i] + ", " +
                                                        ring->names_[j] + ", " + ring->names_[k] + ")");
          }
        }
      }
    }
  }
  return ring;
}

RingPtr RingModel::truncated_polynomial(std::string generator, int n, const Rational& volume) {
  RingSpec spec;
  spec.generators = {{std::move(generator), 2}};
  for (int k = 0; k <= n; ++k) spec.basis.push_back({k});
  spec.pairing[{n}] = volume;
  spec.top_degree = 2 * n;
  return build(spec, Validation::kTrusted);
}

RingPtr RingModel::point() {
  RingSpec spec;
  spec.basis = {{}};
  spec.pairing[{}] = Rational(1);
  return build(spec, Validation::kTrusted);
}

RingModel::TensorResult RingModel::tensor(const RingModel& a, const RingModel& b, std::size_t max_basis) {
  if (a.dimension() * b.dimension() > max_basis) {
    throw Error(ErrorCode::kBasisOverflow, "tensor product basis of size " + std::to_string(a.dimension() * b.dimension()) +
                                               " exceeds the cap " + std::to_string(max_basis));
  }
  RingSpec spec;
  spec.top_degree = a.top_degree_ + b.top_degree_;
  spec.generators = a.generators_;
  std::set<std::string> used;
  for (const auto& g : a.generators_) used.insert(g.name);
  for (auto g : b.generators_) {
    if (used.count(g.name) != 0) {
      int k = 2;
      while (used.count(g.name + "_" + std::to_string(k)) != 0) ++k;
      g.name += "_" + std::to_string(k);
    }
    used.insert(g.name);
    spec.generators.push_back(g);
  }

  const std::size_t na = a.dimension();
  const std::size_t nb = b.dimension();
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) spec.basis.push_back(concat(a.basis_[i], b.basis_[j]));
  }
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t k = 0; k < na; ++k) {
      const Combination& pa = a.product(i, k);
      for (std::size_t j = 0; j < nb; ++j) {
        for (std::size_t l = 0; l < nb; ++l) {
          const Combination& pb = b.product(j, l);
          auto& slot = spec.products[concat(add(a.basis_[i], a.basis_[k]), add(b.basis_[j], b.basis_[l]))];
          slot.clear();
          for (const auto& x : pa) {
            for (const auto& y : pb) slot.emplace_back(concat(a.basis_[x.index], b.basis_[y.index]), x.coeff * y.coeff);
          }
        }
      }
    }
  }
  for (std::size_t i = 0; i < na; ++i) {
    for (std::size_t j = 0; j < nb; ++j) {
      const Rational v = a.pairing_[i] * b.pairing_[j];
      if (!v.is_zero()) spec.pairing[concat(a.basis_[i], b.basis_[j])] = v;
    }
  }

  TensorResult result;
  result.ring = build(spec, Validation::kTrusted);
  const Exponents zero_a(a.generators_.size(), 0);
  const Exponents zero_b(b.generators_.size(), 0);
  for (std::size_t i = 0; i < na; ++i) result.left.push_back(*result.ring->find(concat(a.basis_[i], zero_b)));
  for (std::size_t j = 0; j < nb; ++j) result.right.push_back(*result.ring->find(concat(zero_a, b.basis_[j])));
  return result;
}

bool operator==(const RingModel& a, const RingModel& b) {
  return a.top_degree_ == b.top_degree_ && a.generators_ == b.generators_ && a.basis_ == b.basis_ &&
         a.table_ == b.table_ && a.pairing_ == b.pairing_;
}

bool same_ring(const RingPtr& a, const RingPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

}  // namespace fracindex
