#include <gtest/gtest.h>

#include "fracindex/error.hpp"
#include "fracindex/index_engine.hpp"
#include "fracindex/manifold.hpp"
#include "root_oracle.hpp"

namespace fracindex {
namespace {

Rational from_mpq(const mpq_class& q) { return Rational(BigInt(q.get_num()), BigInt(q.get_den())); }

Rational ahat_integral(const ManifoldModel& m) { return integrate(a_hat_class(m)); }

TEST(Catalog, ProjectiveSpaceAHat) {
  EXPECT_EQ(ahat_integral(cp(1)), Rational(0));
  EXPECT_EQ(ahat_integral(cp(2)), Rational(-1, 8));
  EXPECT_EQ(ahat_integral(cp(4)), Rational(3, 128));
  const auto q = oracle::ahat_series(12);
  for (unsigned n = 1; n <= 6; ++n) EXPECT_EQ(ahat_integral(cp(static_cast<int>(n))), from_mpq(oracle::cp_genus(q, n))) << n;
}

TEST(Catalog, ProjectiveSpaceShape) {
  const ManifoldModel m = cp(3);
  EXPECT_EQ(m.real_dimension, 6);
  EXPECT_EQ(m.label, "CP^3");
  EXPECT_TRUE(m.is_complex);
  EXPECT_EQ(m.c1(), CohClass::monomial(m.ring, "x", 4));
  EXPECT_EQ(m.tangent.cls(3), CohClass::monomial(m.ring, "x^3", 4));
  EXPECT_EQ(m.c1_parity_even, std::optional<bool>(true));
  EXPECT_EQ(cp(2).c1_parity_even, std::optional<bool>(false));
}

TEST(Catalog, HypersurfaceMatchesRootOracle) {
  const auto q = oracle::ahat_series(10);
  for (unsigned n = 1; n <= 3; ++n) {
    for (long d = 1; d <= 6; ++d) {
      const ManifoldModel v = hypersurface(static_cast<int>(n), static_cast<int>(d));
      EXPECT_EQ(ahat_integral(v), from_mpq(oracle::hypersurface_genus(q, 2 * n, d))) << "n=" << n << " d=" << d;
    }
  }
}

TEST(Catalog, QuinticFourfold) {
  EXPECT_EQ(ahat_integral(hypersurface(2, 5)), Rational(63, 128));
}

TEST(Catalog, K3) {
  const ManifoldModel k3 = hypersurface(1, 4);
  EXPECT_TRUE(k3.c1().is_zero());
  EXPECT_EQ(k3.spin, std::optional<bool>(true));
  EXPECT_EQ(integrate(k3.tangent.cls(2)), Rational(24));
  EXPECT_EQ(ahat_integral(k3), Rational(2));
  EXPECT_EQ(builtin("k3"), k3);
}

TEST(Catalog, OddDegreeHypersurfacesAreNotSpin) {
  for (int n = 1; n <= 4; ++n) {
    for (int d = 1; d <= 6; ++d) EXPECT_EQ(hypersurface(n, 2 * d + 1).spin, std::optional<bool>(false)) << n << "," << d;
  }
}

TEST(Catalog, Products) {
  EXPECT_EQ(ahat_integral(product(cp(1), cp(1))), Rational(0));
  EXPECT_EQ(ahat_integral(product(cp(2), cp(2))), Rational(1, 64));
  const ManifoldModel mp = product(cp(2), point());
  EXPECT_EQ(ahat_integral(mp), ahat_integral(cp(2)));
  EXPECT_EQ(integrate(todd_class(mp)), Rational(1));
  EXPECT_EQ(builtin("cp2*cp2"), product(cp(2), cp(2)));
}

TEST(Catalog, ProductOverflow) {
  try {
    product(cp(6), cp(6), 20);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kBasisOverflow);
  }
}

TEST(Catalog, CobordismRecord) {
  const ManifoldModel h = cobordism_record("Hopkins-surgery", cp(4), {{"W3", "nonzero"}});
  EXPECT_EQ(ahat_integral(h), Rational(3, 128));
  EXPECT_FALSE(h.is_complex);
  EXPECT_EQ(h.spin, std::optional<bool>(false));
  EXPECT_EQ(h.annotations.at("W3"), "nonzero");
  EXPECT_EQ(ahat_integral(cobordism_record("x", cp(2))), Rational(-1, 8));
  EXPECT_THROW(todd_class(h), Error);
}

TEST(Catalog, BuiltinNames) {
  for (const auto& name : builtin_examples()) EXPECT_NO_THROW(builtin(name)) << name;
  EXPECT_EQ(builtin("hypersurface:2:5"), hypersurface(2, 5));
  EXPECT_THROW(builtin("torus"), Error);
  EXPECT_THROW(cp(0), Error);
  EXPECT_THROW(hypersurface(0, 3), Error);
}

}  // namespace
}  // namespace fracindex
