#include <gtest/gtest.h>

#include "fracindex/error.hpp"
#include "fracindex/genera.hpp"
#include "fracindex/manifold.hpp"
#include "series_oracle.hpp"

namespace fracindex {
namespace {

Rational from_mpq(const mpq_class& q) { return Rational(BigInt(q.get_num()), BigInt(q.get_den())); }

void expect_series(Genus g, const std::vector<mpq_class>& expected) {
  const GenusSeries s = genus_series(g, static_cast<int>(expected.size()) - 1);
  ASSERT_EQ(s.coefficients.size(), expected.size());
  for (std::size_t k = 0; k < expected.size(); ++k) {
    EXPECT_EQ(s.coefficients[k], from_mpq(expected[k])) << genus_name(g) << " coefficient " << k;
  }
}

TEST(GenusSeries, MatchesBernoulliOracle) {
  expect_series(Genus::kAHat, oracle::ahat_series(16));
  expect_series(Genus::kTodd, oracle::todd_series(16));
  expect_series(Genus::kL, oracle::l_series(16));
}

TEST(GenusSeries, LowOrderValues) {
  const auto a = genus_series("a-hat", 2);
  EXPECT_EQ(a.coefficients, (std::vector<Rational>{1, 0, Rational(-1, 24)}));
  const auto t = genus_series("Todd", 2);
  EXPECT_EQ(t.coefficients, (std::vector<Rational>{1, Rational(1, 2), Rational(1, 12)}));
  EXPECT_EQ(genus_series("L", 2).coefficients, (std::vector<Rational>{1, 0, Rational(1, 3)}));
  EXPECT_TRUE(a.is_even());
  EXPECT_FALSE(t.is_even());
}

TEST(GenusSeries, RejectsUnknownNameAndNegativeOrder) {
  EXPECT_THROW(genus_series("elliptic", 2), Error);
  EXPECT_THROW(genus_series(Genus::kTodd, -1), Error);
}

TEST(GenusClass, ToddAndSignatureOfProjectiveSpaces) {
  for (int n = 1; n <= 6; ++n) {
    const ManifoldModel m = cp(n);
    const auto td = genus_class(genus_series(Genus::kTodd, n), m.tangent);
    EXPECT_EQ(integrate(td), Rational(1)) << "Todd genus of CP^" << n;
    if (n % 2 == 0) {
      const auto l = genus_class(genus_series(Genus::kL, n), pontryagin_from_chern(m.tangent));
      EXPECT_EQ(integrate(l), Rational(1)) << "signature of CP^" << n;
    }
  }
}

TEST(GenusClass, InsufficientOrderIsReported) {
  const ManifoldModel m = cp(4);
  try {
    genus_class(genus_series(Genus::kTodd, 3), m.tangent);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kInsufficientOrder);
  }
}

TEST(GenusClass, OddSeriesNeedsChernData) {
  const ManifoldModel m = cp(2);
  EXPECT_THROW(genus_class(genus_series(Genus::kTodd, 2), pontryagin_from_chern(m.tangent)), Error);
}

TEST(CharData, PontryaginOfProjectivePlane) {
  const ManifoldModel m = cp(2);
  const CharData p = pontryagin_from_chern(m.tangent);
  EXPECT_EQ(p.rank(), 4);
  EXPECT_EQ(p.cls(1), CohClass::monomial(m.ring, "x^2", 3));
}

TEST(CharData, ChernCharacterOfLine) {
  const RingPtr r = RingModel::truncated_polynomial("x", 4);
  const CohClass x = CohClass::monomial(r, "x");
  EXPECT_EQ(chern_character(CharData::line(x)), exp_class(x));
  EXPECT_EQ(chern_character(CharData::trivial(r, 3)), CohClass::constant(r, 3));
}

TEST(CharData, DirectSumIsWhitneyProduct) {
  const RingPtr r = RingModel::truncated_polynomial("x", 3);
  const CohClass x = CohClass::monomial(r, "x");
  const CharData s = direct_sum(CharData::line(x), CharData::line(x * Rational(2)));
  EXPECT_EQ(s.rank(), 2);
  EXPECT_EQ(s.cls(1), x * Rational(3));
  EXPECT_EQ(s.cls(2), x * x * Rational(2));
  EXPECT_EQ(chern_character(s), exp_class(x) + exp_class(x * Rational(2)));
}

TEST(CharData, NewtonPowerSums) {
  const RingPtr r = RingModel::truncated_polynomial("x", 3);
  const CohClass x = CohClass::monomial(r, "x");
  // roots x, x, x: e1 = 3x, e2 = 3x^2, e3 = x^3, s_k = 3 x^k
  const auto s = newton_power_sums(r, {x * Rational(3), x * x * Rational(3), x * x * x}, 3);
  EXPECT_EQ(s[0], x * Rational(3));
  EXPECT_EQ(s[1], x * x * Rational(3));
  EXPECT_EQ(s[2], x * x * x * Rational(3));
}

TEST(CharData, ValidatesDegreesAndRank) {
  const RingPtr r = RingModel::truncated_polynomial("x", 3);
  const CohClass x = CohClass::monomial(r, "x");
  EXPECT_THROW(CharData::chern(r, 1, {x * x}), Error);
  EXPECT_THROW(CharData::chern(r, 1, {x, x * x}), Error);
  EXPECT_THROW(CharData::chern(r, -1, {}), Error);
}

TEST(GenusClass, ToddEqualsAHatTimesHalfC1OnProjectivePlane) {
  const ManifoldModel m = cp(2);
  const CohClass td = genus_class(genus_series(Genus::kTodd, 2), m.tangent);
  const CohClass ahat = genus_class(genus_series(Genus::kAHat, 2), pontryagin_from_chern(m.tangent));
  EXPECT_EQ(ahat.str(), "1 - 1/8*x^2");
  EXPECT_EQ(td, ahat * exp_class(m.c1() * Rational(1, 2)));
  EXPECT_EQ(td.str(), "1 + 3/2*x + x^2");
}

}  // namespace
}  // namespace fracindex
