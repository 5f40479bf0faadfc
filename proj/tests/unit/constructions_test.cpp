#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "bracekit/constructions.hpp"
#include "bracekit/errors.hpp"
#include "bracekit/factors.hpp"
#include "bracekit/fixtures.hpp"
#include "bracekit/graph6.hpp"
#include "bracekit/isomorphism.hpp"
#include "bracekit/matching.hpp"
#include "bracekit/planar.hpp"
#include "oracles.hpp"

using namespace bracekit;

TEST(Star, SizesAndCut) {
  const Graph k33 = fixture(FixtureId::kK33);
  const Graph heawood = fixture(FixtureId::kHeawood);
  for (const Pairing& p : all_pairings()) {
    const auto sp = star_product({k33, 2, heawood, 5, p});
    EXPECT_EQ(sp.graph.order(), 6 + 14 - 2);
    EXPECT_EQ(sp.graph.size(), 9 + 21 - 3);
    EXPECT_TRUE(sp.graph.is_cubic());
    EXPECT_EQ(sp.principal_cut.shore.size(), 5u);
    EXPECT_EQ(sp.principal_cut.delta.size(), 3u);
    EXPECT_EQ(sp.from_first[2], -1);
    EXPECT_EQ(sp.from_second[5], -1);
    EXPECT_TRUE(principal_cut_is_induced_matching(sp.graph, sp.principal_cut));
  }
}

TEST(Star, PairingFollowsSortedNeighbourhoods) {
  const Graph k4 = fixture(FixtureId::kK4);
  const auto sp = star_product({k4, 0, k4, 0, {2, 0, 1}});
  // N(0) = {1,2,3} in both copies; first copy keeps 1,2,3 as 0,1,2, second as 3,4,5
  EXPECT_TRUE(sp.graph.adjacent(0, 5));
  EXPECT_TRUE(sp.graph.adjacent(1, 3));
  EXPECT_TRUE(sp.graph.adjacent(2, 4));
}

TEST(Star, AllPairingsArePermutations) {
  const auto ps = all_pairings();
  EXPECT_EQ(ps.size(), 6u);
  std::set<Pairing> seen(ps.begin(), ps.end());
  EXPECT_EQ(seen.size(), 6u);
  EXPECT_EQ(ps.front(), kIdentityPairing);
}

TEST(Star, RejectsBadInput) {
  const Graph k33 = fixture(FixtureId::kK33);
  EXPECT_THROW(star_product({fixture(FixtureId::kC4), 0, k33, 0}), PreconditionError);
  EXPECT_THROW(star_product({k33, 6, k33, 0}), PreconditionError);
  EXPECT_THROW(star_product({k33, 0, k33, 0, {0, 0, 1}}), PreconditionError);
}

TEST(Star, NonBipartiteFactorsGiveTheFigureGraphs) {
  const Graph k4m = fixture(FixtureId::kK4minus);
  bool fig2b = false;
  bool fig2c = false;
  for (Vertex a = 0; a < 4; ++a) {
    for (Vertex b = 0; b < 4; ++b) {
      if (k4m.degree(a) != 3 || k4m.degree(b) != 3) continue;
      for (const Pairing& p : all_pairings()) {
        const Graph g = star_product({k4m, a, k4m, b, p}).graph;
        fig2b = fig2b || are_isomorphic(g, fixture(FixtureId::kFig2b));
        fig2c = fig2c || are_isomorphic(g, fixture(FixtureId::kFig2c));
      }
    }
  }
  EXPECT_TRUE(fig2b);
  EXPECT_TRUE(fig2c);
}

TEST(Star, TwoFactorHamiltonicityAgreesWithBruteForce) {
  const Graph k33 = fixture(FixtureId::kK33);
  const Graph cube = fixture(FixtureId::kCube);
  for (const auto& [a, b] : {std::pair{k33, k33}, std::pair{k33, cube}, std::pair{cube, cube}}) {
    for (const Pairing& p : all_pairings()) {
      const Graph g = star_product({a, 0, b, 0, p}).graph;
      EXPECT_EQ(is_two_factor_hamiltonian(g).two_factor_hamiltonian,
                oracle::two_factor_hamiltonian(oracle::Plain(g)));
    }
  }
}

TEST(Trisum, ThreeCubesOnAFace) {
  const Graph cube = fixture(FixtureId::kCube);
  const TrisumSpec spec{{cube, cube, cube}, {{{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}}}, {}};
  const Trisum t = trisum(spec);
  EXPECT_EQ(t.graph.order(), 4 + 3 * 4);
  EXPECT_EQ(t.graph.size(), 4 + 3 * 8);
  EXPECT_TRUE(is_bipartite(t.graph));
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 4; ++j) EXPECT_EQ(t.maps[i][j], j);
    for (const auto& e : cube.edges()) EXPECT_TRUE(t.graph.adjacent(t.maps[i][e.u], t.maps[i][e.v]));
  }
  EXPECT_TRUE(is_brace(t.graph));
}

TEST(Trisum, RemovedCycleEdges) {
  const Graph cube = fixture(FixtureId::kCube);
  const TrisumSpec spec{{cube, cube, cube}, {{{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}}}, {0, 2}};
  const Trisum t = trisum(spec);
  EXPECT_EQ(t.graph.size(), 2 + 3 * 8);
  EXPECT_FALSE(t.graph.adjacent(0, 1));
  EXPECT_FALSE(t.graph.adjacent(2, 3));
  EXPECT_TRUE(t.graph.adjacent(1, 2));
}

TEST(Trisum, RejectsBadInput) {
  const Graph cube = fixture(FixtureId::kCube);
  const Graph prism = fixture(FixtureId::kPrism);
  const std::array<Vertex, 4> face{0, 1, 2, 3};
  EXPECT_THROW(trisum({{prism, cube, cube}, {face, face, face}, {}}), PreconditionError);
  EXPECT_THROW(trisum({{cube, cube, cube}, {{{0, 2, 1, 3}, face, face}}, {}}), PreconditionError);
  EXPECT_THROW(trisum({{cube, cube, cube}, {face, face, face}, {4}}), PreconditionError);
  EXPECT_THROW(trisum({{fixture(FixtureId::kC4), cube, cube}, {face, face, face}, {}}), PreconditionError);
}

TEST(Family, CutsAreTightAndProductsCubic) {
  const std::vector<FamilyStep> recipe{{"K33"}, {"Heawood", 0}, {"K33", 3, {1, 2, 0}}, {"K33", 0}};
  const auto r = diwan_family(recipe);
  EXPECT_EQ(r.graph.order(), 6 + 12 + 4 + 4);
  EXPECT_TRUE(r.graph.is_cubic());
  EXPECT_TRUE(is_bipartite(r.graph));
  ASSERT_EQ(r.cuts.size(), 3u);
  for (const auto& c : r.cuts) {
    EXPECT_EQ(c.delta.size(), 3u);
    EXPECT_TRUE(is_tight(r.graph, c));
  }
  EXPECT_TRUE(is_two_factor_hamiltonian(r.graph).two_factor_hamiltonian);
}

TEST(Family, Errors) {
  EXPECT_THROW(diwan_family(std::vector<FamilyStep>{}), PreconditionError);
  try {
    diwan_family(std::vector<FamilyStep>{{"K33"}, {"K33", 40}});
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("step 2: ", 0), 0u) << e.what();
  }
  try {
    diwan_family(std::vector<FamilyStep>{{"K33"}, {"K33", 0}, {"Nope", 0}});
    FAIL();
  } catch (const PreconditionError& e) {
    EXPECT_EQ(std::string(e.what()).rfind("step 3: ", 0), 0u) << e.what();
  }
}

TEST(Family, RecipeGrammar) {
  std::istringstream in("# a comment\nK33\n\nHeawood 0   # expand vertex 0\nK33 4 210\n");
  const auto steps = parse_recipe(in);
  ASSERT_EQ(steps.size(), 3u);
  EXPECT_EQ(steps[0].base, "K33");
  EXPECT_EQ(steps[1].base, "Heawood");
  EXPECT_EQ(steps[1].vertex, 0);
  EXPECT_EQ(steps[2].pairing, (Pairing{2, 1, 0}));

  auto error_line = [](const std::string& text) -> std::size_t {
    std::istringstream s(text);
    try {
      parse_recipe(s);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return 0;
  };
  EXPECT_EQ(error_line("K33 1\n"), 1u);
  EXPECT_EQ(error_line("K33\nK33\n"), 2u);
  EXPECT_EQ(error_line("K33\nK33 x\n"), 2u);
  EXPECT_EQ(error_line("K33\n\nK33 0 011\n"), 3u);
  EXPECT_EQ(error_line("K33\nK33 0 01\n"), 2u);
}
