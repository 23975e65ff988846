#include <gtest/gtest.h>

#include "goursat/text_format.hpp"

using namespace goursat;

TEST(TextFormat, ValuesAndBlocks) {
  EXPECT_EQ(parse_values("2,3, 4 ,4,5"), (std::vector<Value>{2, 3, 4, 4, 5}));
  EXPECT_EQ(format_values({2, 3, 4}), "2,3,4");
  const auto der = parse_derived_blocks("1^2 2^6 4 6^3 18 24^2");
  EXPECT_EQ(format(der), "1,1,2,2,2,2,2,2,4,6,6,6,18,24,24");
  EXPECT_EQ(format_blocks(der), "1^2 2^6 4 6^3 18 24^2");
  EXPECT_EQ(format_blocks(parse_derived_blocks("1^2 2^1")), "1^2 2");
}

TEST(TextFormat, Puiseux) {
  const PuiseuxCharacteristic pc{24, {90, 94, 103}};
  EXPECT_EQ(format(pc), "[24; 90, 94, 103]");
  EXPECT_EQ(parse_puiseux("[24; 90, 94, 103]"), pc);
  EXPECT_EQ(parse_puiseux(" [2;5] "), (PuiseuxCharacteristic{2, {5}}));
  EXPECT_EQ(format(PuiseuxCharacteristic{2, {}}), "[2;]");
}

TEST(TextFormat, ErrorsCarryPosition) {
  try {
    parse_values("2,3,x");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::Parse);
    EXPECT_EQ(e.position(), 5u);
  }
  EXPECT_THROW(parse_values(""), Error);
  EXPECT_THROW(parse_values("1,,2"), Error);
  EXPECT_THROW(parse_blocks("1^"), Error);
  EXPECT_THROW(parse_blocks("1^2,2"), Error);
  EXPECT_THROW(parse_puiseux("[2; 5"), Error);
  EXPECT_THROW(parse_values("99999999999999999999999"), Error);
}
