#include <gtest/gtest.h>

#include "fracindex/error.hpp"
#include "fracindex/manifold_io.hpp"

namespace fracindex {
namespace {

const std::string kData = FRACINDEX_DATA_DIR;

ErrorCode load_error(const std::string& file) {
  try {
    load_manifold_file(kData + "/manifolds/" + file);
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

TEST(ManifoldIo, FixtureEqualsBuiltin) { EXPECT_EQ(load_manifold_file(kData + "/manifolds/cp2.json"), cp(2)); }

TEST(ManifoldIo, RejectsOddDegree) { EXPECT_EQ(load_error("bad_odd_degree.json"), ErrorCode::kOddDegree); }

TEST(ManifoldIo, RejectsSurvivingCube) { EXPECT_EQ(load_error("bad_truncation.json"), ErrorCode::kTruncation); }

TEST(ManifoldIo, ExplicitZeroProducts) {
  const ManifoldModel m = load_manifold_file(kData + "/manifolds/s2xs2.json");
  EXPECT_EQ(integrate(power(CohClass::monomial(m.ring, "a"), 2)), Rational(0));
  EXPECT_EQ(integrate(m.tangent.cls(2)), Rational(4));
}

TEST(ManifoldIo, RoundTripsEveryBuiltin) {
  for (const auto& name : builtin_examples()) {
    const ManifoldModel m = builtin(name);
    const ManifoldModel back = load_manifold(nlohmann::json::parse(to_json(m).dump()));
    EXPECT_EQ(back, m) << name;
    EXPECT_EQ(back.annotations, m.annotations) << name;
  }
}

TEST(ManifoldIo, SchemaViolations) {
  nlohmann::json doc = to_json(cp(2));
  doc.erase("pairing");
  EXPECT_THROW(load_manifold(doc), Error);

  doc = to_json(cp(2));
  doc["real_dimension"] = 6;
  EXPECT_THROW(load_manifold(doc), Error);

  doc = to_json(cp(2));
  doc["pairing"] = {{"x^2", "0"}};
  try {
    load_manifold(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kZeroPairing);
  }

  doc = to_json(cp(2));
  doc["tangent"]["classes"][0] = {{"x^2", "1"}};
  try {
    load_manifold(doc);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDegreeMismatch);
  }
}

TEST(ManifoldIo, ParseClassExpressions) {
  const RingPtr r = cp(2).ring;
  EXPECT_EQ(parse_class(r, "3x"), CohClass::monomial(r, "x", 3));
  EXPECT_EQ(parse_class(r, "-3/2*x + x^2 + 2").str(), "2 - 3/2*x + x^2");
  EXPECT_THROW(parse_class(r, "y"), Error);
  EXPECT_TRUE(parse_class(r, "x^3 + x^2*x").is_zero());
}

TEST(ManifoldIo, ClassAndBundleDocuments) {
  const RingPtr r = cp(3).ring;
  const CohClass c = parse_class(r, "1/3x - 2x^3");
  EXPECT_EQ(class_from_json(r, class_to_json(c)), c);
  const CharData e = CharData::chern(r, 2, {parse_class(r, "x"), parse_class(r, "-x^2")});
  EXPECT_EQ(bundle_from_json(r, bundle_to_json(e)), e);
  EXPECT_EQ(rational_from_json(nlohmann::json("-7/9"), "t"), Rational(-7, 9));
  EXPECT_EQ(rational_from_json(nlohmann::json(4), "t"), Rational(4));
  EXPECT_THROW(rational_from_json(nlohmann::json(0.5), "t"), Error);
}

}  // namespace
}  // namespace fracindex
