#include <gtest/gtest.h>

#include "fracindex/error.hpp"
#include "fracindex/index_engine.hpp"

namespace fracindex {
namespace {

CohClass x_times(const ManifoldModel& m, const Rational& k) { return CohClass::monomial(m.ring, "x", k); }

TEST(IndexEngine, FractionalDiracIndices) {
  const auto r2 = dirac_index(cp(2), CharData::trivial(cp(2).ring, 1));
  EXPECT_EQ(r2.value, Rational(-1, 8));
  EXPECT_FALSE(r2.is_integer);
  EXPECT_EQ(r2.denominator(), BigInt(8));
  EXPECT_EQ(r2.formula, "dirac");
  EXPECT_EQ(r2.label, "CP^2");
  EXPECT_EQ(dirac_index(cp(4), CharData::trivial(cp(4).ring, 1)).value, Rational(3, 128));
}

TEST(IndexEngine, DiracOnSphereWithLine) {
  // integral over CP^1 of (1 + kx) is k; k + 1 arises only with the
  // anticanonical spin^c twist.
  const ManifoldModel m = cp(1);
  for (int k = -3; k <= 3; ++k) {
    EXPECT_EQ(dirac_index(m, CharData::line(x_times(m, k))).value, Rational(k));
    TwistSpec t;
    t.l_prime_c1 = x_times(m, 2);
    EXPECT_EQ(spinc_index(m, CharData::line(x_times(m, k)), t).value, Rational(k + 1));
  }
}

TEST(IndexEngine, SpinCTwists) {
  const ManifoldModel m = cp(2);
  TwistSpec anticanonical;
  anticanonical.l_prime_c1 = m.c1();
  EXPECT_EQ(spinc_index(m, CharData::trivial(m.ring, 1), anticanonical).value, Rational(1));

  TwistSpec root;
  root.l_c1 = x_times(cp(1), 1);
  root.root_order = 2;
  EXPECT_EQ(spinc_index(cp(1), CharData::trivial(cp(1).ring, 1), root).value, Rational(1, 2));

  EXPECT_EQ(spinc_index(m, CharData::trivial(m.ring, 1), TwistSpec{}).value,
            dirac_index(m, CharData::trivial(m.ring, 1)).value);
}

TEST(IndexEngine, SpinCRejectsBadTwists) {
  const ManifoldModel m = cp(2);
  TwistSpec zero;
  zero.root_order = 0;
  EXPECT_THROW(spinc_index(m, CharData::trivial(m.ring, 1), zero), Error);
  TwistSpec wrong_degree;
  wrong_degree.l_c1 = CohClass::monomial(m.ring, "x^2");
  EXPECT_THROW(spinc_index(m, CharData::trivial(m.ring, 1), wrong_degree), Error);
  TwistSpec other_ring;
  other_ring.l_c1 = x_times(cp(3), 1);
  EXPECT_THROW(spinc_index(m, CharData::trivial(m.ring, 1), other_ring), Error);
}

TEST(IndexEngine, Dolbeault) {
  EXPECT_EQ(dolbeault_index(cp(1)).value, Rational(1));
  EXPECT_EQ(dolbeault_index(cp(2)).value, Rational(1));
  EXPECT_EQ(dolbeault_index(hypersurface(1, 4)).value, Rational(2));
  EXPECT_THROW(dolbeault_index(cobordism_record("h", cp(4))), Error);
}

TEST(IndexEngine, RingMismatch) {
  EXPECT_THROW(dirac_index(cp(2), CharData::trivial(cp(3).ring, 1)), Error);
}

TEST(IndexEngine, DigestsAreStableAndInputSensitive) {
  const auto a = dirac_index(cp(2), CharData::trivial(cp(2).ring, 1));
  const auto b = dirac_index(cp(2), CharData::trivial(cp(2).ring, 1));
  const auto c = dirac_index(cp(2), CharData::trivial(cp(2).ring, 2));
  EXPECT_EQ(a.digest, b.digest);
  EXPECT_NE(a.digest, c.digest);
  EXPECT_EQ(c.value, Rational(-1, 4));
}

TEST(IndexEngine, FractionalityReport) {
  EXPECT_TRUE(fractionality_report({}).empty());
  const std::vector<IndexReport> reports = {dirac_index(cp(2), CharData::trivial(cp(2).ring, 1)),
                                            dirac_index(hypersurface(1, 4), CharData::trivial(hypersurface(1, 4).ring, 1))};
  const auto rows = fractionality_report(reports);
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0].denominator, BigInt(8));
  EXPECT_FALSE(rows[0].is_integer);
  EXPECT_EQ(rows[1].denominator, BigInt(1));
  EXPECT_TRUE(rows[1].is_integer);
}

}  // namespace
}  // namespace fracindex
