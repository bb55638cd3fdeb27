#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qfg/text.hpp"
#include "qfg/oracle/oracle.hpp"

using namespace qfg;
using qfg::test::poly;

TEST(Text, Parse) {
  EXPECT_EQ(parse_polynomial("A3; w[1,3] w[2,0] w[3,3]"), poly(3, {{1, 3}, {2, 0}, {3, 3}}));
  EXPECT_EQ(parse_polynomial("A3; w[1,0]^2 w[2,3]"), poly(3, {{1, 0}, {1, 0}, {2, 3}}));
  EXPECT_EQ(parse_polynomial("A3; kr[2,1,2]"), poly(3, {{2, 0}, {2, 2}}));
  EXPECT_EQ(parse_polynomial("  A2 ;w[ 1 , -4 ]w[2,+1]  "), poly(2, {{1, -4}, {2, 1}}));
  EXPECT_EQ(parse_polynomial("A1; kr[1,0,2]^2"), poly(1, {{1, -1}, {1, -1}, {1, 1}, {1, 1}}));
}

TEST(Text, Print) {
  EXPECT_EQ(to_text(poly(3, {{2, 3}, {1, 0}, {1, 0}})), "A3; w[1,0]^2 w[2,3]");
  EXPECT_EQ(to_text(one(DynkinA(4))), "A4;");
}

TEST(Text, Errors) {
  auto position = [](const char* text) -> std::size_t {
    try {
      parse_polynomial(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  EXPECT_EQ(position("B3; w[1,0]"), 0u);
  EXPECT_EQ(position("A0; w[1,0]"), 1u);
  EXPECT_EQ(position("A3; w[4,0]"), 6u);
  EXPECT_EQ(position("A3; w[1,0"), 9u);
  EXPECT_EQ(position("A3; kr[1,0,0]"), 11u);
  EXPECT_EQ(position("A3; w[1,0]^0"), 11u);
  EXPECT_EQ(position("A3; x[1,0]"), 4u);
  EXPECT_EQ(position("A3;"), 3u);
  EXPECT_EQ(position("A3 w[1,0]"), 3u);
  EXPECT_EQ(position("A3; w[1,99999999999999999999]"), 8u);
}

TEST(Text, RoundTrip) {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    const auto p = oracle::random_drinfeld(seed, {5, 8, -10, 10, seed % 2 == 0, 3});
    EXPECT_EQ(parse_polynomial(to_text(p)), p) << to_text(p);
  }
}
