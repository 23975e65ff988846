#include <gtest/gtest.h>

#include "goursat/plane_curves.hpp"
#include "goursat/text_format.hpp"
#include "goursat/theorem_formula.hpp"
#include "goursat/tower_census.hpp"
#include "oracles.hpp"

using namespace goursat;

TEST(DivisibilityPoints, FixedExamples) {
  const auto s = divisibility_points(parse_derived("1,1,2,2,2,2,2,2,4,6,6,6,18,24,24"));
  ASSERT_EQ(s.g(), 3u);
  EXPECT_EQ(s.N(1), 18u);
  EXPECT_EQ(s.N(2), 4u);
  EXPECT_EQ(s.N(3), 2u);
  EXPECT_EQ(s.k(1), 5u);  // block indices
  EXPECT_EQ(s.k(3), 2u);

  const auto one = divisibility_points(parse_derived("1,1,2,3,3,8"));
  ASSERT_EQ(one.g(), 1u);
  EXPECT_EQ(one.N(1), 2u);

  EXPECT_EQ(divisibility_points(parse_derived("1,1")).g(), 0u);
}

TEST(PuiseuxFromDerived, FixedExamples) {
  EXPECT_EQ(format(puiseux_from_derived(parse_derived("1,1,2,2,2,2,2,2,4,6,6,6,18,24,24"))),
            "[24; 90, 94, 103]");
  EXPECT_EQ(format(puiseux_from_derived(parse_derived("1,1,2"))), "[2; 5]");
  EXPECT_EQ(format(puiseux_from_derived(parse_derived("1,1,2,3,5,8"))), "[8; 21]");
}

TEST(PuiseuxFromDerived, Errors) {
  auto code_of = [](const char* flat) {
    try {
      puiseux_from_derived(parse_derived(flat));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Precondition;
  };
  EXPECT_EQ(code_of("1,1"), ErrorCode::NotCritical);
  EXPECT_EQ(code_of("1,1,1,2"), ErrorCode::NotCritical);  // m_1 = 3 != M_2
  EXPECT_EQ(code_of("1,1,2,2,3"), ErrorCode::NotRealizable);
}

TEST(PuiseuxFromDerived, MatchesFlatStatementOnEveryCriticalCode) {
  for (const auto& code : enumerate_codes(12, true)) {
    const auto der = rvt_to_derived(code);
    const auto flat = der.flat();
    const auto expected = oracle::flat_theorem(std::vector<oracle::u64>(flat.begin(), flat.end()));
    const auto pc = puiseux_from_derived(der);
    std::vector<oracle::u64> got = {pc.lambda0};
    got.insert(got.end(), pc.exponents.begin(), pc.exponents.end());
    ASSERT_EQ(got, expected) << code.str();
  }
}

TEST(PuiseuxFromDerived, SingleVClosedForm) {
  // v = 1: lambda_1 = (m_2 + 1) M_2 + M_1.
  for (Value M2 = 2; M2 <= 10; ++M2) {
    for (Value m2 = 1; m2 <= 10; ++m2) {
      const auto der = DerivedVector::from_blocks({{1, M2}, {M2, m2}});
      EXPECT_EQ(puiseux_from_derived(der), (PuiseuxCharacteristic{M2, {(m2 + 1) * M2 + 1}}));
    }
  }
}

TEST(TheoremProperties, ShapeOfOutput) {
  for (const auto& code : enumerate_codes(11, true)) {
    const auto der = rvt_to_derived(code);
    const auto pc = puiseux_from_derived(der);
    ASSERT_EQ(pc.lambda0, der.last());
    ASSERT_GT(pc.lambda(1), pc.lambda0);
    ASSERT_EQ(pc.g(), divisibility_points(der).g());
    ASSERT_TRUE(validate_puiseux(pc)) << code.str();
    // Last exponent equals the sgv length.
    ASSERT_EQ(pc.exponents.back(), der.sum() + 1) << code.str();
  }
}
