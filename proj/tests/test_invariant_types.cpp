#include <gtest/gtest.h>

#include <random>

#include "goursat/invariant_types.hpp"
#include "goursat/text_format.hpp"
#include "oracles.hpp"

using namespace goursat;

namespace {

std::vector<Value> dims(const SmallGrowthVector& s) { return s.dims(); }

SmallGrowthVector sgv(std::vector<Value> d) { return SmallGrowthVector::from_dims(std::move(d)); }

}  // namespace

TEST(SgvToDerived, FixedExamples) {
  EXPECT_EQ(sgv_to_derived(sgv({2, 3, 4, 4, 5})).flat(), (std::vector<Value>{1, 1, 2}));
  EXPECT_EQ(sgv_to_derived(sgv({2, 3, 4})).flat(), (std::vector<Value>{1, 1}));
  EXPECT_EQ(sgv_to_derived(sgv({2, 3, 4, 5, 5, 5, 6, 6, 6, 7})).flat(),
            (std::vector<Value>{1, 1, 1, 3, 3}));
}

TEST(DerivedToSgv, FixedExamples) {
  EXPECT_EQ(dims(derived_to_sgv(DerivedVector::from_flat({1, 1, 1, 3, 3}))),
            (std::vector<Value>{2, 3, 4, 5, 5, 5, 6, 6, 6, 7}));
  EXPECT_EQ(dims(derived_to_sgv(DerivedVector::from_flat({1, 1, 2}))),
            (std::vector<Value>{2, 3, 4, 4, 5}));
  EXPECT_EQ(dims(derived_to_sgv(DerivedVector::from_flat({1}))), (std::vector<Value>{2, 3}));
}

TEST(SmallGrowthVector, RejectsMalformed) {
  auto code_of = [](std::vector<Value> d) {
    try {
      SmallGrowthVector::from_dims(std::move(d));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::Precondition;
  };
  EXPECT_EQ(code_of({3, 4, 5}), ErrorCode::MalformedSgv);        // wrong start
  EXPECT_EQ(code_of({2, 4, 5}), ErrorCode::MalformedSgv);        // jump of 2
  EXPECT_EQ(code_of({2, 3, 4, 4}), ErrorCode::MalformedSgv);     // repeated final entry
  EXPECT_EQ(code_of({2, 3, 2, 3}), ErrorCode::MalformedSgv);     // decreasing
  EXPECT_EQ(code_of({2}), ErrorCode::MalformedSgv);
  // Decreasing multiplicities have no derived vector.
  EXPECT_THROW(sgv_to_derived(sgv({2, 2, 3, 4})), Error);
}

TEST(DerivedVector, RejectsMalformed) {
  EXPECT_THROW(DerivedVector::from_flat({1, 2, 1}), Error);
  EXPECT_THROW(DerivedVector::from_flat({0, 1}), Error);
  EXPECT_THROW(DerivedVector::from_blocks({{1, 2}, {1, 3}}), Error);
  EXPECT_THROW(DerivedVector::from_blocks({{1, 0}}), Error);
  EXPECT_THROW(DerivedVector::from_flat(std::vector<Value>{}), Error);
  try {
    DerivedVector::from_flat({1, 3, 2});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedDerived);
    EXPECT_EQ(e.position(), 3u);
  }
}

TEST(DerivedVector, OneBasedAccessors) {
  const auto der = parse_derived_blocks("1^2 2^6 4 6^3 18 24^2");
  EXPECT_EQ(der.v(), 5u);
  EXPECT_EQ(der.M(1), 1u);
  EXPECT_EQ(der.m(2), 6u);
  EXPECT_EQ(der.M(6), 24u);
  EXPECT_EQ(der.d(1), 1u);
  EXPECT_EQ(der.d(9), 4u);
  EXPECT_EQ(der.d(15), 24u);
  EXPECT_EQ(der.length(), 15u);
  EXPECT_THROW((void)der.d(16), std::out_of_range);
  EXPECT_TRUE(der.is_critical());
  EXPECT_FALSE(DerivedVector::from_flat({1, 1, 1, 2}).is_critical());
}

TEST(GeometrySummary, FixedExamples) {
  EXPECT_EQ(geometry_summary(DerivedVector::from_flat({1, 1, 2})),
            (GeometrySummary{3, 5, 5, 1, 1}));
  EXPECT_EQ(geometry_summary(DerivedVector::from_flat({1, 1})), (GeometrySummary{2, 4, 3, 0, 0}));
  // Sum of (1,1,2,2,2,2,2,2,4,6,6,6,18,24,24) is 102 by direct addition.
  EXPECT_EQ(geometry_summary(parse_derived("1,1,2,2,2,2,2,2,4,6,6,6,18,24,24")),
            (GeometrySummary{15, 17, 103, 5, 3}));
}

TEST(InvariantProperties, SgvDerivedRoundTripOnRandomVectors) {
  std::mt19937_64 rng(20110319);
  for (int trial = 0; trial < 5000; ++trial) {
    const std::size_t increments = 1 + trial % 12;
    const auto raw = oracle::random_sgv(rng, increments);
    const auto s = sgv(std::vector<Value>(raw.begin(), raw.end()));
    const auto der = sgv_to_derived(s);
    ASSERT_EQ(derived_to_sgv(der), s);
    ASSERT_EQ(der.length() + 2, s.dimension());
    ASSERT_EQ(DerivedVector::from_blocks(der.blocks()), der);
    ASSERT_EQ(DerivedVector::from_flat(der.flat()), der);
    ASSERT_EQ(geometry_summary(der).sgv_length, s.size());
  }
}
