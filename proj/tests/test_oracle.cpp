#include <gtest/gtest.h>

#include "helpers.hpp"
#include "qfg/oracle/oracle.hpp"
#include "qfg/oracle/properties.hpp"
#include "qfg/snake.hpp"
#include "qfg/text.hpp"

using namespace qfg;
using qfg::test::poly;

TEST(Oracle, BruteQFact) {
  EXPECT_EQ(oracle::brute_qfact(poly(3, {{1, 0}, {1, 2}, {1, 4}}), 30, 1), (std::vector<KRFactor>{{1, 2, 3}}));
  EXPECT_EQ(oracle::brute_qfact(poly(3, {{1, 0}, {1, 2}, {1, 6}}), 10, 2),
            (std::vector<KRFactor>{{1, 1, 2}, {1, 6, 1}}));
  EXPECT_EQ(oracle::brute_qfact(poly(3, {{2, 5}}), 3, 3), (std::vector<KRFactor>{{2, 5, 1}}));
}

TEST(Oracle, BruteMtos) {
  const auto line = fundamental_graph(poly(3, {{1, 3}, {2, 0}, {3, 3}}));
  EXPECT_EQ(oracle::brute_mtos(line).size(), 2u);
  const auto chain = fundamental_graph(poly(3, {{1, 0}, {2, 3}, {3, 6}}));
  EXPECT_EQ(oracle::brute_mtos(chain), (std::vector<std::vector<VertexId>>{chain.ids()}));
  const auto edgeless = fundamental_graph(poly(3, {{2, 0}, {2, 20}, {2, 40}, {2, 60}}));
  EXPECT_EQ(oracle::brute_mtos(edgeless).size(), 4u);
}

TEST(Oracle, IteratedBar) {
  EXPECT_EQ(oracle::iterated_bar_factorization(poly(3, {{2, 0}, {2, 0}, {2, 4}})),
            (std::vector<DrinfeldPolynomial>{poly(3, {{2, 0}, {2, 4}}), poly(3, {{2, 0}})}));
  EXPECT_EQ(oracle::iterated_bar_factorization(poly(3, {{2, 0}, {2, 4}})),
            (std::vector<DrinfeldPolynomial>{poly(3, {{2, 0}, {2, 4}})}));
  EXPECT_EQ(oracle::iterated_bar_factorization(poly(3, {{2, 0}})),
            (std::vector<DrinfeldPolynomial>{poly(3, {{2, 0}})}));
  EXPECT_THROW(oracle::iterated_bar_factorization(poly(3, {{1, 0}, {2, 3}})), std::invalid_argument);
}

TEST(Oracle, Generator) {
  const oracle::RandomBounds b{4, 6, -5, 5, false, 3};
  EXPECT_EQ(oracle::random_drinfeld(42, b), oracle::random_drinfeld(42, b));
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto p = oracle::random_drinfeld(seed, {4, 6, -5, 5, true, 3});
    EXPECT_TRUE(has_snake_support(p)) << to_text(p);
    EXPECT_LE(p.degree(), 6u);
    const auto mono = oracle::random_drinfeld(seed, {1, 5, -5, 5, false, 3});
    EXPECT_EQ(support(mono), (std::set<int>{1}));
  }
}

TEST(Oracle, PathBounds) {
  const auto chain = fundamental_graph(poly(3, {{1, 0}, {2, 3}, {3, 6}}));
  EXPECT_EQ(oracle::directed_paths(chain).size(), 3u);
  EXPECT_EQ(oracle::any_path_bound_violation(chain), std::nullopt);
}
