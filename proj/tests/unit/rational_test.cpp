#include <gtest/gtest.h>

#include "fracindex/error.hpp"
#include "fracindex/rational.hpp"

namespace fracindex {
namespace {

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(6, -8).str(), "-3/4");
  EXPECT_EQ(Rational(0, 5).str(), "0");
  EXPECT_EQ(Rational(10, 5).str(), "2");
  EXPECT_TRUE(Rational(10, 5).is_integer());
}

TEST(Rational, ParseForms) {
  EXPECT_EQ(Rational::parse("-1/8"), Rational(-1, 8));
  EXPECT_EQ(Rational::parse("42"), Rational(42));
  EXPECT_EQ(Rational::parse("-0.125"), Rational(-1, 8));
  EXPECT_EQ(Rational::parse("+3/6"), Rational(1, 2));
  EXPECT_THROW(Rational::parse("1/0"), Error);
  EXPECT_THROW(Rational::parse("abc"), Error);
  EXPECT_THROW(Rational::parse(""), Error);
}

TEST(Rational, RoundTripsThroughText) {
  for (long p = -40; p <= 40; p += 7) {
    for (long q = 1; q <= 50; q += 3) {
      const Rational r(p, q);
      EXPECT_EQ(Rational::parse(r.str()), r);
    }
  }
}

TEST(Rational, Arithmetic) {
  const Rational a(1, 3);
  const Rational b(-1, 6);
  EXPECT_EQ(a + b, Rational(1, 6));
  EXPECT_EQ(a * b, Rational(-1, 18));
  EXPECT_EQ(a / b, Rational(-2));
  EXPECT_EQ(Rational(2, 3).pow(-2), Rational(9, 4));
  EXPECT_LT(b, a);
  EXPECT_THROW(Rational(0).inverse(), Error);
}

TEST(Rational, FromDoubleIsExact) {
  EXPECT_EQ(Rational::from_double(0.375), Rational(3, 8));
  EXPECT_EQ(Rational::from_double(-2.0), Rational(-2));
  EXPECT_EQ(Rational::from_double(0.1).to_double(), 0.1);
}

TEST(Rational, FactorialAndBinomial) {
  EXPECT_EQ(factorial(10), BigInt(3628800));
  EXPECT_EQ(binomial(6, 2), BigInt(15));
  EXPECT_EQ(binomial(3, 5), BigInt(0));
  EXPECT_EQ(binomial(3, -1), BigInt(0));
}

}  // namespace
}  // namespace fracindex
