#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "qfg/decomp.hpp"
#include "qfg/text.hpp"
#include "qfg/oracle/oracle.hpp"

using namespace qfg;
using qfg::test::poly;

namespace {

const DynkinA A3(3);

std::vector<VertexId> ids(std::initializer_list<std::uint32_t> xs) {
  std::vector<VertexId> out;
  for (auto x : xs) out.push_back(VertexId{x});
  return out;
}

std::vector<DrinfeldPolynomial> sorted(std::vector<DrinfeldPolynomial> v) {
  std::sort(v.begin(), v.end());
  return v;
}

}  // namespace

TEST(Decomp, EnumerateMtos) {
  // ids by (node, center): v_{1,3}=0, v_{2,0}=1, v_{3,3}=2
  const auto line = fundamental_graph(poly(3, {{1, 3}, {2, 0}, {3, 3}}));
  EXPECT_EQ(enumerate_mtos(line), (std::vector<std::vector<VertexId>>{ids({0, 1}), ids({1, 2})}));

  EXPECT_EQ(enumerate_mtos(fundamental_graph(poly(3, {{1, 5}}))),
            (std::vector<std::vector<VertexId>>{ids({0})}));

  // copies of v_{1,3} are 0 and 1, v_{2,0} is 2
  const auto copies = fundamental_graph(poly(3, {{1, 3}, {1, 3}, {2, 0}}));
  EXPECT_EQ(enumerate_mtos(copies), (std::vector<std::vector<VertexId>>{ids({0, 2}), ids({1, 2})}));
}

TEST(Decomp, EnumerateMtosMatchesSubsetSearch) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto p = oracle::random_drinfeld(seed, {4, 9, -6, 6, false, 3});
    for (const auto& g : {fundamental_graph(p), q_fact_graph(p)}) {
      EXPECT_EQ(enumerate_mtos(g), oracle::brute_mtos(g)) << to_dot(g);
    }
  }
}

TEST(Decomp, GreedyQuochain) {
  const auto copies = fundamental_graph(poly(3, {{1, 3}, {1, 3}, {2, 0}}));
  EXPECT_EQ(mtos_quochain(copies).parts, (std::vector<std::vector<VertexId>>{ids({0, 2}), ids({1})}));
  EXPECT_EQ(mtos_quochain(fundamental_graph(poly(3, {{1, 5}}))).parts,
            (std::vector<std::vector<VertexId>>{ids({0})}));
  EXPECT_EQ(mtos_quochain(fundamental_graph(poly(3, {{2, 0}, {2, 4}}))).parts,
            (std::vector<std::vector<VertexId>>{ids({0, 1})}));
}

TEST(Decomp, AllQuochainsAndIsomorphism) {
  const auto copies = fundamental_graph(poly(3, {{1, 3}, {1, 3}, {2, 0}}));
  const auto a = all_mtos_quochains(copies);
  ASSERT_EQ(a.size(), 2u);
  EXPECT_TRUE(quochains_isomorphic(a[0], a[1], copies));
  EXPECT_TRUE(quochains_isomorphic(a[0], a[0], copies));

  const auto line = fundamental_graph(poly(3, {{1, 3}, {2, 0}, {3, 3}}));
  const auto b = all_mtos_quochains(line);
  ASSERT_EQ(b.size(), 2u);
  EXPECT_FALSE(quochains_isomorphic(b[0], b[1], line));

  EXPECT_EQ(all_mtos_quochains(fundamental_graph(poly(3, {{1, 5}}))).size(), 1u);
}

TEST(Decomp, Uniqueness) {
  EXPECT_TRUE(unique_mtos_decomposition(fundamental_graph(poly(3, {{1, 3}, {1, 3}, {2, 0}}))));
  EXPECT_FALSE(unique_mtos_decomposition(fundamental_graph(poly(3, {{1, 3}, {2, 0}, {3, 3}}))));
  EXPECT_TRUE(unique_mtos_decomposition(fundamental_graph(poly(3, {{1, 5}}))));
  EXPECT_TRUE(unique_mtos_decomposition(fundamental_graph(one(A3))));
}

TEST(Decomp, UniquenessAgreesWithExplicitEnumeration) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto p = oracle::random_drinfeld(seed, {3, 8, -5, 5, false, 3});
    const auto g = fundamental_graph(p);
    const auto all = all_mtos_quochains(g);
    const bool explicit_unique = std::all_of(all.begin(), all.end(), [&](const Multicut& q) {
      return quochains_isomorphic(q, all.front(), g);
    });
    EXPECT_EQ(unique_mtos_decomposition(g), explicit_unique) << to_text(p);
    for (const auto& q : all) EXPECT_TRUE(is_mtos_quochain(g, q));
  }
}

TEST(Decomp, QuochainErrors) {
  const auto g = fundamental_graph(poly(3, {{1, 3}, {2, 0}, {3, 3}}));
  EXPECT_THROW(is_mtos_quochain(g, Multicut{{ids({0, 1})}}), std::invalid_argument);
  EXPECT_THROW(is_mtos_quochain(g, Multicut{{ids({0, 1}), ids({1, 2})}}), std::invalid_argument);
  EXPECT_FALSE(is_mtos_quochain(g, Multicut{{ids({0}), ids({1, 2})}}));
  EXPECT_TRUE(is_mtos_quochain(g, Multicut{{ids({0, 1}), ids({2})}}));

  DrinfeldPolynomial big(DynkinA(1));
  for (int k = 0; k < 15; ++k) big.multiply({1, 0});
  EXPECT_THROW(all_mtos_quochains(fundamental_graph(big)), std::length_error);
  EXPECT_THROW(all_mtos_quochains(fundamental_graph(poly(1, {{1, 0}, {1, 0}, {1, 0}, {1, 0}})), {14, 5}),
               std::length_error);
}

TEST(Decomp, SnakeSupportRoute) {
  const auto a = prime_factorize_snake_support(poly(3, {{1, 3}, {1, 3}, {2, 0}}));
  EXPECT_EQ(a.status, RouteStatus::snake_support_route);
  EXPECT_EQ(a.factors, (std::vector<DrinfeldPolynomial>{poly(3, {{1, 3}, {2, 0}}), poly(3, {{1, 3}})}));

  const auto b = prime_factorize_snake_support(poly(3, {{1, 0}, {1, 0}, {2, 3}}));
  EXPECT_EQ(b.factors, (std::vector<DrinfeldPolynomial>{poly(3, {{1, 0}, {2, 3}}), poly(3, {{1, 0}})}));

  const auto c = prime_factorize_snake_support(poly(3, {{1, 5}}));
  EXPECT_EQ(c.status, RouteStatus::prime);
  EXPECT_EQ(c.factors, (std::vector<DrinfeldPolynomial>{poly(3, {{1, 5}})}));

  EXPECT_THROW(prime_factorize_snake_support(poly(3, {{1, 3}, {2, 0}, {3, 3}})), std::invalid_argument);
}

TEST(Decomp, ThreeVertexCheck) {
  const auto a = three_vertex_prime_check(poly(3, {{1, 3}, {2, 0}, {3, 3}}));
  EXPECT_EQ(a.status, RouteStatus::prime);
  EXPECT_EQ(a.factors.size(), 1u);

  const auto b = three_vertex_prime_check(poly(3, {{1, 3}, {1, 3}, {2, 0}}));
  EXPECT_EQ(b.status, RouteStatus::three_vertex_route);
  EXPECT_EQ(b.factors, (std::vector<DrinfeldPolynomial>{poly(3, {{1, 3}}), poly(3, {{1, 3}, {2, 0}})}));

  EXPECT_THROW(three_vertex_prime_check(poly(3, {{2, 0}, {2, 2}, {2, 8}})), NotApplicable);

  const auto d = three_vertex_prime_check(poly(3, {{1, 0}, {2, 20}, {3, 40}}));
  EXPECT_EQ(d.status, RouteStatus::component_route);
  EXPECT_EQ(d.factors.size(), 3u);
}

TEST(Decomp, MinimalSubdiagram) {
  // gap 3 between nodes 1 and 2 with r=s=1 lives on [1,2] already.
  EXPECT_EQ(minimal_subdiagram(A3, 1, 2, 3, 1, 1), (Subdiagram{1, 2}));
  // gap 4 at node 2 needs one step of room on both sides.
  EXPECT_EQ(minimal_subdiagram(A3, 2, 2, 4, 1, 1), (Subdiagram{1, 3}));
  EXPECT_EQ(minimal_subdiagram(A3, 2, 2, 2, 1, 1), (Subdiagram{2, 2}));
  EXPECT_EQ(minimal_subdiagram(A3, 2, 2, 6, 1, 1), std::nullopt);
}

TEST(Decomp, SmallRoute) {
  const auto a = prime_factorize_small(poly(3, {{2, 0}, {2, 2}, {2, 8}}));
  EXPECT_EQ(a.status, RouteStatus::component_route);
  EXPECT_EQ(sorted(a.factors), sorted({poly(3, {{2, 0}, {2, 2}}), poly(3, {{2, 8}})}));

  const auto b = prime_factorize_small(poly(3, {{2, 0}, {2, 4}}));
  EXPECT_EQ(b.status, RouteStatus::prime);

  const auto e = prime_factorize_small(one(A3));
  EXPECT_TRUE(e.factors.empty());

  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const auto p = oracle::random_drinfeld(seed, {4, 7, -6, 6, false, 3});
    const auto r = prime_factorize_small(p);
    DrinfeldPolynomial prod(p.diagram());
    for (const auto& f : r.factors) prod *= f;
    EXPECT_EQ(prod, p);
    if (r.status == RouteStatus::prime) {
      EXPECT_EQ(r.factors.size(), 1u);
    }
  }
}

// An mtos of the fundamental graph of a snake-support polynomial realizes
// the radical of the component it sits in, and conversely.
TEST(Decomp, MtosRealizeComponentRadicals) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto p = oracle::random_drinfeld(seed, {4, 8, -6, 6, true, 3});
    const auto g = fundamental_graph(p);
    const auto mtos = enumerate_mtos(g);
    for (const auto& comp : connected_components(g)) {
      const auto radical = bar(induced_subgraph(g, comp).polynomial());
      std::vector<std::vector<VertexId>> realizing;
      // every subset of the component with polynomial equal to the radical
      const auto k = comp.size();
      ASSERT_LE(k, 16u);
      for (std::uint32_t mask = 1; mask < (1U << k); ++mask) {
        std::vector<VertexId> sub;
        for (std::size_t b = 0; b < k; ++b) {
          if (mask >> b & 1U) sub.push_back(comp[b]);
        }
        if (induced_subgraph(g, sub).polynomial() == radical) realizing.push_back(sub);
      }
      std::vector<std::vector<VertexId>> in_comp;
      for (const auto& m : mtos) {
        if (std::includes(comp.begin(), comp.end(), m.begin(), m.end())) in_comp.push_back(m);
      }
      std::sort(realizing.begin(), realizing.end());
      EXPECT_EQ(in_comp, realizing) << to_text(p);
    }
  }
}
