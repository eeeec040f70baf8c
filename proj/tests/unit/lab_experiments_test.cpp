#include <gtest/gtest.h>

#include <numbers>
#include <random>

#include "fracindex/error.hpp"
#include "fracindex/lab/experiments.hpp"
#include "fracindex/lab/symbol_io.hpp"

namespace fracindex::lab {
namespace {

LoopSymbol sym(std::string_view text) { return parse_symbol_expression(text); }

TEST(SymbolIndex, NumericMatchesMinusWinding) {
  for (const char* text : {"2+e^{it}", "1/2+e^{it}", "e^{-2it} + 1/5 + 1/7e^{it}", "3i + e^{2it}"}) {
    const LoopSymbol a = sym(text);
    const IndexValue v = symbol_index(a);
    EXPECT_FALSE(v.is_exact()) << text;
    EXPECT_NEAR(v.value.real(), -winding_number(a), 1e-9) << text;
    EXPECT_LT(std::abs(v.value.imag()), 1e-12) << text;
    EXPECT_LT(v.error_bound, 1e-9) << text;
  }
}

TEST(SymbolIndex, AutoAdjustRaisesTruncation) {
  LabOptions o;
  o.truncation = 4;
  o.window = 1000;
  EXPECT_THROW(symbol_index(LoopSymbol::monomial(3), o), Error);
  o.auto_adjust = true;
  const IndexValue v = symbol_index(LoopSymbol::monomial(3), o);
  EXPECT_EQ(*v.exact, GaussianRational(-3));
  EXPECT_EQ(v.notes.size(), 2u);
  EXPECT_EQ(v.window, v.truncation - 12);
}

TEST(Homotopy, ShiftPlusConstantIsConstant) {
  const SymbolPath path{{LoopSymbol::monomial(1), sym("e^{it} + 1/2")}};
  const auto r = homotopy_sweep(path, 11);
  ASSERT_EQ(r.steps.size(), 11u);
  EXPECT_EQ(r.steps[3].t, Rational(3, 10));
  EXPECT_TRUE(r.steps.front().index.is_exact());
  for (const auto& s : r.steps) EXPECT_NEAR(s.index.value.real(), -1.0, 1e-9);
  EXPECT_LT(r.spread, 1e-9);
  EXPECT_TRUE(r.constant);
}

TEST(Homotopy, ConstantPath) {
  const SymbolPath path{{sym("2+e^{it}")}};
  const auto r = homotopy_sweep(path, 4);
  for (const auto& s : r.steps) EXPECT_EQ(s.index.value, r.steps.front().index.value);
}

TEST(Homotopy, ReportsWhereEllipticityIsLost) {
  const SymbolPath path{{LoopSymbol::identity(1), LoopSymbol::monomial(1)}};
  try {
    homotopy_sweep(path, 11);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kEllipticity);
    EXPECT_NE(std::string(e.what()).find("t = 1/2"), std::string::npos) << e.what();
  }
}

TEST(Homotopy, PiecewiseLinearPath) {
  const SymbolPath path{{LoopSymbol::monomial(1), sym("e^{it}+1/2"), sym("e^{it}-1/2i")}};
  EXPECT_EQ(path.at(Rational(3, 4)), sym("e^{it} + 1/4 - 1/4i"));
  EXPECT_EQ(path.at(Rational(1)), sym("e^{it}-1/2i"));
  EXPECT_THROW(path.at(Rational(2)), Error);
}

TEST(Composition, Examples) {
  const auto exact = composition_additivity_check(LoopSymbol::monomial(1), LoopSymbol::monomial(2));
  EXPECT_EQ(*exact.product.exact, GaussianRational(-3));
  EXPECT_EQ(*exact.exact_sum, GaussianRational(-3));
  EXPECT_TRUE(exact.agree);

  const auto mixed = composition_additivity_check(sym("2+e^{it}"), LoopSymbol::monomial(1));
  EXPECT_NEAR(mixed.product.value.real(), -1.0, 1e-9);
  EXPECT_NEAR(mixed.sum.real(), -1.0, 1e-9);
  EXPECT_TRUE(mixed.agree);

  const LoopSymbol a = sym("1/3 + e^{-it}");
  const auto unit = composition_additivity_check(LoopSymbol::identity(1), a);
  EXPECT_NEAR(unit.product.value.real(), unit.second.value.real(), 1e-12);
  EXPECT_NEAR(unit.product.value.real(), 1.0, 1e-9);
}

TEST(Adjoint, ShiftAndSelfAdjoint) {
  const auto shift = adjoint_index_check(LoopSymbol::monomial(1));
  EXPECT_EQ(*shift.index.exact, GaussianRational(-1));
  EXPECT_EQ(*shift.adjoint_index.exact, GaussianRational(1));
  EXPECT_TRUE(shift.antisymmetric);
  EXPECT_TRUE(shift.real);
  EXPECT_TRUE(shift.rotation_zero);
  ASSERT_EQ(shift.rotation.size(), 5u);
  EXPECT_TRUE(shift.rotation.back().index.is_exact());
  EXPECT_TRUE(shift.rotation.front().index.is_exact());

  const auto self = adjoint_index_check(sym("2 + 1/2e^{it} + 1/2e^{-it}"));
  EXPECT_NEAR(self.index.value.real(), 0.0, 1e-9);
  EXPECT_TRUE(self.antisymmetric);
}

TEST(Adjoint, RotationSymbolEndpoints) {
  const LoopSymbol a = sym("e^{2it}");
  EXPECT_EQ(rotation_symbol(a, std::numbers::pi / 2), LoopSymbol::identity(2));
  const LoopSymbol r0 = rotation_symbol(a, 0.0);
  EXPECT_TRUE(r0.is_monomial());
  EXPECT_EQ(winding_number(r0), 0);
}

TEST(RandomSymbols, WindingIsSizeTimesK) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 20; ++i) {
    const std::size_t size = i % 3 == 0 ? 2 : 1;
    const LoopSymbol a = random_perturbed_symbol(rng, 3, size);
    EXPECT_EQ(a.mode(), SymbolMode::kNumeric);
    const auto k = a.bandwidth();
    EXPECT_LE(k, 5);
    const int w = winding_number(a);
    EXPECT_EQ(w % static_cast<int>(size), 0);
    EXPECT_NEAR(symbol_index(a).value.real(), -w, 1e-9);
  }
}

}  // namespace
}  // namespace fracindex::lab
