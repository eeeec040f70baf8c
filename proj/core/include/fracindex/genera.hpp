#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fracindex/coh_class.hpp"
#include "fracindex/rational.hpp"

namespace fracindex {

enum class Genus { kAHat, kTodd, kL };

std::string_view genus_name(Genus g);
/// Accepts "a-hat", "ahat", "A-hat", "todd", "Todd", "l", "L".
std::optional<Genus> parse_genus(std::string_view name);

/// Taylor coefficients q_0..q_order of the characteristic power series
///   A-hat: (x/2)/sinh(x/2),  Todd: x/(1-e^{-x}),  L: x/tanh(x).
struct GenusSeries {
  Genus genus = Genus::kAHat;
  std::vector<Rational> coefficients;

  int order() const { return static_cast<int>(coefficients.size()) - 1; }
  bool is_even() const;
};

GenusSeries genus_series(Genus genus, int order);
/// Throws kUnknownName for names outside {A-hat, Todd, L}.
GenusSeries genus_series(std::string_view name, int order);

enum class ClassMode { kChern, kPontryagin };

/// Characteristic data of a bundle: c_1..c_r (degree 2i) for a complex
/// bundle of rank r, or p_1..p_k (degree 4i) for a real bundle.
class CharData {
 public:
  /// `classes[i]` is c_{i+1}; at most `rank` classes, missing ones are zero.
  static CharData chern(RingPtr ring, int rank, std::vector<CohClass> classes);
  /// `classes[i]` is p_{i+1}; `rank` is the real rank.
  static CharData pontryagin(RingPtr ring, int rank, std::vector<CohClass> classes);
  static CharData trivial(RingPtr ring, int rank);
  /// Line bundle with first Chern class `c1`.
  static CharData line(const CohClass& c1);

  const RingPtr& ring() const { return ring_; }
  int rank() const { return rank_; }
  ClassMode mode() const { return mode_; }
  /// Stored classes, trimmed to those that fit below the top degree.
  const std::vector<CohClass>& classes() const { return classes_; }
  /// The i-th class (1-based); zero beyond what is stored.
  CohClass cls(int i) const;
  /// 1 + c_1 + c_2 + ... (or 1 + p_1 + ...).
  CohClass total() const;

  friend bool operator==(const CharData& a, const CharData& b) {
    return same_ring(a.ring_, b.ring_) && a.rank_ == b.rank_ && a.mode_ == b.mode_ && a.classes_ == b.classes_;
  }

 private:
  CharData(RingPtr ring, int rank, ClassMode mode, std::vector<CohClass> classes);

  RingPtr ring_;
  int rank_ = 0;
  ClassMode mode_ = ClassMode::kChern;
  std::vector<CohClass> classes_;
};

/// Whitney sum: concatenates formal roots (total classes multiply).
CharData direct_sum(const CharData& a, const CharData& b);

/// Power sums s_1..s_count of the formal roots from the elementary
/// symmetric classes via Newton's identities. `elementary[i]` is e_{i+1}.
std::vector<CohClass> newton_power_sums(const RingPtr& ring, const std::vector<CohClass>& elementary, int count);

/// Multiplicative sequence of `series` evaluated on the bundle's classes.
CohClass genus_class(const GenusSeries& series, const CharData& bundle);

/// rank + sum_k s_k / k! over the Chern roots.
CohClass chern_character(const CharData& bundle);

/// Pontryagin classes of the underlying real bundle: p_i = (-1)^i [c(E) c(conj E)]_{4i}.
CharData pontryagin_from_chern(const CharData& bundle);

}  // namespace fracindex
