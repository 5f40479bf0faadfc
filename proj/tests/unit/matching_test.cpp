#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <random>

#include "bracekit/errors.hpp"
#include "bracekit/factors.hpp"
#include "bracekit/fixtures.hpp"
#include "bracekit/graph6.hpp"
#include "bracekit/matching.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace bracekit;

namespace {

std::vector<std::vector<int>> as_index_sets(const Graph& g, const std::vector<Matching>& ms) {
  std::vector<std::vector<int>> out;
  for (const auto& m : ms) {
    std::vector<int> ids;
    for (const auto& e : m.edges) ids.push_back(g.edge_index(e));
    std::sort(ids.begin(), ids.end());
    out.push_back(ids);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Matching, EnumerationAgreesWithSubsetSearch) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 2 * (1 + static_cast<int>(rng() % 5));
    const Graph g = oracle::random_graph(n, 0.5, rng);
    const oracle::Plain p(g);
    auto want = oracle::perfect_matchings(p);
    std::sort(want.begin(), want.end());
    EXPECT_EQ(as_index_sets(g, enumerate_perfect_matchings(g)), want) << graph6_encode(g);
    EXPECT_EQ(count_perfect_matchings(g), want.size());
    EXPECT_EQ(has_perfect_matching(g), !want.empty());
    EXPECT_EQ(is_matching_covered(g), oracle::matching_covered(p)) << graph6_encode(g);
  }
}

TEST(Matching, KnownCounts) {
  EXPECT_EQ(count_perfect_matchings(fixture(FixtureId::kK33)), 6u);
  EXPECT_EQ(count_perfect_matchings(fixture(FixtureId::kCube)), 9u);
  EXPECT_EQ(count_perfect_matchings(fixture(FixtureId::kC4)), 2u);
  EXPECT_EQ(count_perfect_matchings(fixture(FixtureId::kHeawood)), 24u);
  EXPECT_EQ(count_perfect_matchings(fixture(FixtureId::kK4)), 3u);
  EXPECT_EQ(count_perfect_matchings(fixture(FixtureId::kFig7a)), 0u);
}

TEST(Matching, BudgetIsEnforced) {
  EXPECT_THROW(enumerate_perfect_matchings(fixture(FixtureId::kHeawood), 10), BudgetExceeded);
  try {
    count_perfect_matchings(fixture(FixtureId::kHeawood), 5);
    FAIL();
  } catch (const BudgetExceeded& e) {
    EXPECT_EQ(e.partial_count(), 5u);
  }
}

TEST(Matching, ForcedAndForbidden) {
  const Graph k33 = fixture(FixtureId::kK33);
  const std::vector<Edge> forced{k33.edges()[0]};
  const auto m = perfect_matching_with(k33, forced, {});
  ASSERT_TRUE(m);
  EXPECT_TRUE(std::binary_search(m->edges.begin(), m->edges.end(), forced[0]));
  // forbidding all three edges at vertex 0 leaves nothing
  std::vector<Edge> at_zero;
  for (Vertex w : k33.neighbours(0)) at_zero.push_back(make_edge(0, w));
  EXPECT_FALSE(perfect_matching_with(k33, {}, at_zero));
}

TEST(Matching, ExtendabilityAgreesWithDefinition) {
  for (int n : {4, 6, 8}) {
    for (const Graph& g : test_corpus::bipartite_min_degree(n, 2)) {
      const oracle::Plain p(g);
      for (int k = 1; k <= 2; ++k) {
        if (n < 2 * k + 2) {
          EXPECT_THROW(is_k_extendable(g, k), TooSmall);
          continue;
        }
        EXPECT_EQ(is_k_extendable(g, k), oracle::k_extendable(p, k)) << graph6_encode(g) << " k=" << k;
      }
    }
  }
}

TEST(Matching, BraceAgreesWithTightCutDefinition) {
  int braces = 0;
  for (int n : {4, 6, 8, 10}) {
    for (const Graph& g : test_corpus::bipartite_min_degree(n, 2)) {
      const bool want = oracle::brace(oracle::Plain(g));
      EXPECT_EQ(is_brace(g), want) << graph6_encode(g);
      braces += want;
    }
  }
  EXPECT_GT(braces, 10);
}

TEST(Matching, BraceAgreesWithExtendabilityOnTwelveVertices) {
  // the neighbourhood test against the 2-extendability definition
  int checked = 0;
  for (const Graph& g : test_corpus::geng({"-cbq", "-d3", "12"})) {
    if (++checked % 7) continue;
    EXPECT_EQ(is_brace(g), is_k_extendable(g, 2)) << graph6_encode(g);
  }
  EXPECT_GT(checked, 5000);
}

TEST(Matching, KonigPartition) {
  for (FixtureId id : {FixtureId::kK33, FixtureId::kCube, FixtureId::kHeawood, FixtureId::kC4}) {
    const Graph g = fixture(id);
    const auto parts = konig_partition(g);
    const int k = g.degree(0);
    ASSERT_EQ(static_cast<int>(parts.size()), k);
    std::vector<Edge> all;
    for (const auto& m : parts) {
      EXPECT_TRUE(m.is_perfect());
      EXPECT_TRUE(is_matching(g, m.edges));
      all.insert(all.end(), m.edges.begin(), m.edges.end());
    }
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, g.edges());
  }
  EXPECT_THROW(konig_partition(fixture(FixtureId::kPrism)), PreconditionError);
}

TEST(Factors, TwoFactorsAgreeWithSubsetSearch) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 150; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 7);
    const Graph g = oracle::random_graph(n, 0.55, rng);
    const oracle::Plain p(g);
    const auto want = oracle::two_factors(p);
    const auto got = enumerate_two_factors(g, Budgets{}.two_factors, TwoFactorRoute::kDegreeSearch);
    EXPECT_EQ(got.size(), want.size()) << graph6_encode(g);
    EXPECT_EQ(is_two_factor_hamiltonian(g).two_factor_hamiltonian, oracle::two_factor_hamiltonian(p));
    EXPECT_EQ(has_two_factor(g), !want.empty());
  }
}

TEST(Factors, CubicRoutesAgree) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const Graph g = oracle::random_cubic(4 + 2 * static_cast<int>(rng() % 5), rng);
    const auto a = enumerate_two_factors(g, Budgets{}.two_factors, TwoFactorRoute::kMatchingComplements);
    const auto b = enumerate_two_factors(g, Budgets{}.two_factors, TwoFactorRoute::kDegreeSearch);
    ASSERT_EQ(a.size(), b.size());
    for (const auto& f : a) EXPECT_NE(std::find(b.begin(), b.end(), f), b.end());
    EXPECT_EQ(is_two_factor_hamiltonian(g).two_factor_hamiltonian, oracle::two_factor_hamiltonian(oracle::Plain(g)));
  }
}

TEST(Factors, WitnessIsADisconnectedTwoFactor) {
  for (FixtureId id : {FixtureId::kCube, FixtureId::kPrism}) {
    const Graph g = fixture(id);
    const auto v = is_two_factor_hamiltonian(g);
    EXPECT_FALSE(v.two_factor_hamiltonian);
    ASSERT_TRUE(v.witness);
    EXPECT_GE(v.witness->components(), 2);
    const oracle::Plain p(g);
    std::vector<int> ids;
    for (const auto& e : v.witness->edges) ids.push_back(g.edge_index(e));
    EXPECT_EQ(oracle::cycle_count(p, ids), v.witness->components());
  }
  // Cube: two disjoint 4-cycles
  EXPECT_EQ(is_two_factor_hamiltonian(fixture(FixtureId::kCube)).witness->components(), 2);
}

TEST(Factors, VacuousWhenNoTwoFactor) {
  const auto v = is_two_factor_hamiltonian(fixture(FixtureId::kFig2c));
  EXPECT_TRUE(v.two_factor_hamiltonian);
  EXPECT_FALSE(v.has_two_factor);
  EXPECT_FALSE(v.witness);
}

TEST(Factors, BudgetIsEnforced) {
  EXPECT_THROW(is_two_factor_hamiltonian(fixture(FixtureId::kHeawood), 3), BudgetExceeded);
}
