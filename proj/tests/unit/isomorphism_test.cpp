#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "bracekit/fixtures.hpp"
#include "bracekit/graph6.hpp"
#include "bracekit/isomorphism.hpp"
#include "oracles.hpp"

using namespace bracekit;

namespace {

// Tries every permutation.
bool isomorphic_by_permutations(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return false;
  std::vector<int> perm(a.order());
  std::iota(perm.begin(), perm.end(), 0);
  do {
    bool ok = true;
    for (const auto& e : a.edges()) {
      if (!b.adjacent(perm[e.u], perm[e.v])) {
        ok = false;
        break;
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

TEST(Isomorphism, RelabelledFixtures) {
  std::mt19937_64 rng(51);
  for (FixtureId id : all_fixtures()) {
    const Graph g = fixture(id);
    std::vector<int> perm(g.order());
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    const Graph h = oracle::relabel(g, perm);
    const auto map = find_isomorphism(g, h);
    ASSERT_TRUE(map) << fixture_name(id);
    for (const auto& e : g.edges()) EXPECT_TRUE(h.adjacent((*map)[e.u], (*map)[e.v]));
  }
}

TEST(Isomorphism, DistinctFixtures) {
  EXPECT_FALSE(are_isomorphic(fixture(FixtureId::kK33), fixture(FixtureId::kCube)));
  EXPECT_FALSE(are_isomorphic(fixture(FixtureId::kPrism), fixture(FixtureId::kK33)));
  EXPECT_FALSE(are_isomorphic(fixture(FixtureId::kFig2b), fixture(FixtureId::kFig2c)));
}

TEST(Isomorphism, AgreesWithPermutationSearch) {
  std::mt19937_64 rng(53);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 3 + static_cast<int>(rng() % 5);
    const Graph a = oracle::random_graph(n, 0.5, rng);
    Graph b = oracle::random_graph(n, 0.5, rng);
    if (trial % 2) {
      std::vector<int> perm(n);
      std::iota(perm.begin(), perm.end(), 0);
      std::shuffle(perm.begin(), perm.end(), rng);
      b = oracle::relabel(a, perm);
    }
    EXPECT_EQ(are_isomorphic(a, b), isomorphic_by_permutations(a, b)) << graph6_encode(a) << ' ' << graph6_encode(b);
  }
}

TEST(Isomorphism, RegularGraphsOfEqualOrder) {
  // the two cubic graphs on 6 vertices
  EXPECT_FALSE(are_isomorphic(fixture(FixtureId::kK33), fixture(FixtureId::kPrism)));
  const Graph c6(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
  const Graph two_triangles(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}});
  EXPECT_FALSE(are_isomorphic(c6, two_triangles));
}
