#include <gtest/gtest.h>

#include <random>

#include "bracekit/errors.hpp"
#include "bracekit/fixtures.hpp"
#include "bracekit/graph6.hpp"
#include "bracekit/matching.hpp"
#include "bracekit/pfaffian.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace bracekit;

namespace {

std::vector<std::pair<int, int>> arcs(const Graph& g, const Orientation& o) {
  std::vector<std::pair<int, int>> out;
  for (int e = 0; e < g.size(); ++e) out.emplace_back(o.tail(g, e), o.head(g, e));
  return out;
}

bool pfaffian_by_determinant(const Graph& g, const Orientation& o) {
  return oracle::pfaffian_by_determinant(g.order(), arcs(g, o), count_perfect_matchings(g));
}

// Tries all 2^m orientations against the determinant criterion.
bool exists_pfaffian_orientation(const Graph& g) {
  const std::uint64_t pms = count_perfect_matchings(g);
  for (std::uint32_t bits = 0; bits < (1u << g.size()); ++bits) {
    std::vector<std::pair<int, int>> a;
    for (int e = 0; e < g.size(); ++e) {
      const auto& ed = g.edges()[e];
      a.push_back((bits >> e) & 1 ? std::pair{ed.v, ed.u} : std::pair{ed.u, ed.v});
    }
    if (oracle::pfaffian_by_determinant(g.order(), a, pms)) return true;
  }
  return false;
}

std::vector<Graph> small_graphs_with_matchings() {
  std::vector<Graph> out;
  for (int n : {4, 6, 8}) {
    for (const Graph& g : test_corpus::bipartite_min_degree(n, 2)) {
      if (g.size() <= 14 && has_perfect_matching(g)) out.push_back(g);
    }
  }
  std::mt19937_64 rng(31);
  while (out.size() < 250) {
    const Graph g = oracle::random_graph(2 * (2 + static_cast<int>(rng() % 3)), 0.5, rng);
    if (g.size() <= 14 && has_perfect_matching(g)) out.push_back(g);
  }
  return out;
}

}  // namespace

TEST(NiceCycles, AgreeWithAlternatingCycleOracleOnFixtures) {
  int compared = 0;
  for (FixtureId id : all_fixtures()) {
    const Graph g = fixture(id);
    if (g.order() > 10 || !has_perfect_matching(g)) continue;
    ++compared;
    std::set<std::vector<int>> got;
    for (const auto& c : nice_cycles(g)) got.insert(c.cycle);
    EXPECT_EQ(got, oracle::alternating_cycles(oracle::Plain(g))) << fixture_name(id);
  }
  EXPECT_GE(compared, 8);
}

TEST(NiceCycles, AgreeWithAlternatingCycleOracleOnRandomGraphs) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(2 * (2 + static_cast<int>(rng() % 3)), 0.5, rng);
    if (!has_perfect_matching(g)) continue;
    std::set<std::vector<int>> got;
    for (const auto& c : nice_cycles(g)) got.insert(c.cycle);
    EXPECT_EQ(got, oracle::alternating_cycles(oracle::Plain(g))) << graph6_encode(g);
  }
}

TEST(NiceCycles, Preconditions) {
  EXPECT_THROW(nice_cycles(fixture(FixtureId::kFig7a)), PreconditionError);
  EXPECT_THROW(nice_cycles(fixture(FixtureId::kHeawood), 3), BudgetExceeded);
}

TEST(Orientation, OddCycles) {
  const Graph c4 = fixture(FixtureId::kC4);
  Orientation o = Orientation::reference(c4);
  // reference: every edge points from smaller to larger; around 0-1-2-3 three go forward
  EXPECT_TRUE(is_oddly_oriented(c4, o, {0, 1, 2, 3}));
  EXPECT_TRUE(is_pfaffian_orientation(c4, o));
  o.reversed[0] = 1;
  EXPECT_FALSE(is_oddly_oriented(c4, o, {0, 1, 2, 3}));
  EXPECT_THROW(is_oddly_oriented(c4, o, {0, 2, 1, 3}), PreconditionError);
}

TEST(Orientation, SwitchingPreservesPfaffianness) {
  std::mt19937_64 rng(43);
  for (const Graph& g : small_graphs_with_matchings()) {
    Orientation o = Orientation::reference(g);
    for (auto& r : o.reversed) r = static_cast<char>(rng() & 1);
    const bool before = is_pfaffian_orientation(g, o);
    EXPECT_EQ(before, pfaffian_by_determinant(g, o)) << graph6_encode(g);
    const Orientation s = o.switched_at(g, static_cast<Vertex>(rng() % g.order()));
    EXPECT_EQ(is_pfaffian_orientation(g, s), before);
  }
}

TEST(Orientation, RoutesAgreeWithExhaustiveDeterminantSearch) {
  for (const Graph& g : small_graphs_with_matchings()) {
    const bool want = exists_pfaffian_orientation(g);
    EXPECT_EQ(is_pfaffian(g), want) << graph6_encode(g);
    for (auto route : {PfaffianSearch::kClassEnumeration, PfaffianSearch::kCycleSystem,
                       PfaffianSearch::kMatchingSystem}) {
      const auto o = find_pfaffian_orientation(g, {}, route);
      ASSERT_EQ(o.has_value(), want) << graph6_encode(g) << " route " << static_cast<int>(route);
      if (o) EXPECT_TRUE(pfaffian_by_determinant(g, *o));
    }
  }
}

TEST(Orientation, Fixtures) {
  for (FixtureId id : {FixtureId::kHeawood, FixtureId::kCube, FixtureId::kC4, FixtureId::kK4}) {
    const Graph g = fixture(id);
    for (auto route : {PfaffianSearch::kClassEnumeration, PfaffianSearch::kCycleSystem,
                       PfaffianSearch::kMatchingSystem}) {
      const auto o = find_pfaffian_orientation(g, {}, route);
      ASSERT_TRUE(o) << fixture_name(id);
      EXPECT_TRUE(pfaffian_by_determinant(g, *o)) << fixture_name(id);
      EXPECT_TRUE(is_pfaffian_orientation(g, *o));
    }
  }
  const Graph k33 = fixture(FixtureId::kK33);
  EXPECT_FALSE(exists_pfaffian_orientation(k33));
  for (auto route : {PfaffianSearch::kClassEnumeration, PfaffianSearch::kCycleSystem,
                     PfaffianSearch::kMatchingSystem}) {
    EXPECT_FALSE(find_pfaffian_orientation(k33, {}, route));
  }
}

TEST(Orientation, ClassBudget) {
  Budgets tight;
  tight.orientation_class_exponent = 3;
  // Heawood: 21 - 14 + 1 = 8 independent cycles
  EXPECT_THROW(find_pfaffian_orientation(fixture(FixtureId::kHeawood), tight, PfaffianSearch::kClassEnumeration),
               BudgetExceeded);
}

TEST(GirthTheorem, Branches) {
  using Branch = GirthTheoremVerdict::Branch;
  EXPECT_EQ(check_pfaffian_girth_theorem(fixture(FixtureId::kHeawood)).branch, Branch::kHeawood);
  EXPECT_EQ(check_pfaffian_girth_theorem(fixture(FixtureId::kCube)).branch, Branch::kGirthFour);
  EXPECT_EQ(check_pfaffian_girth_theorem(fixture(FixtureId::kK33)).branch, Branch::kNotPfaffian);
  EXPECT_THROW(check_pfaffian_girth_theorem(fixture(FixtureId::kPrism)), PreconditionError);
}
