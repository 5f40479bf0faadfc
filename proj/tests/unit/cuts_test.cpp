#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "bracekit/constructions.hpp"
#include "bracekit/cuts.hpp"
#include "bracekit/errors.hpp"
#include "bracekit/fixtures.hpp"
#include "bracekit/graph6.hpp"
#include "bracekit/isomorphism.hpp"
#include "bracekit/matching.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace bracekit;

namespace {

std::uint32_t mask_of(const std::vector<Vertex>& shore) {
  std::uint32_t m = 0;
  for (Vertex v : shore) m |= 1u << v;
  return m;
}

// Small matching covered graphs: bipartite corpora plus random non-bipartite ones.
std::vector<Graph> matching_covered_sample() {
  std::vector<Graph> out;
  for (int n : {4, 6, 8}) {
    for (const Graph& g : test_corpus::bipartite_min_degree(n, 2)) {
      if (is_matching_covered(g)) out.push_back(g);
    }
  }
  std::mt19937_64 rng(21);
  while (out.size() < 400) {
    const Graph g = oracle::random_graph(2 * (2 + static_cast<int>(rng() % 4)), 0.5, rng);
    if (is_matching_covered(g)) out.push_back(g);
  }
  return out;
}

bool is_brick_by_definition(const Graph& g) {
  const oracle::Plain p(g);
  return !oracle::bipartite(p) && oracle::matching_covered(p) && !oracle::has_nontrivial_tight_cut(p);
}

}  // namespace

TEST(Cuts, CutAroundAndComplement) {
  const Graph k33 = fixture(FixtureId::kK33);
  const std::vector<Vertex> shore{0};
  const EdgeCut c = cut_around(k33, shore);
  EXPECT_TRUE(c.trivial());
  EXPECT_EQ(c.delta.size(), 3u);
  EXPECT_EQ(c.complement(), (std::vector<Vertex>{1, 2, 3, 4, 5}));
  EXPECT_THROW(cut_around(k33, std::vector<Vertex>{}), PreconditionError);
  EXPECT_THROW(cut_around(k33, std::vector<Vertex>{0, 1, 2, 3, 4, 5}), PreconditionError);
}

TEST(Cuts, TightnessAgreesWithBruteForce) {
  for (const Graph& g : matching_covered_sample()) {
    const oracle::Plain p(g);
    const auto pms = oracle::perfect_matchings(p);
    for (std::uint32_t shore = 1; shore + 1 < (1u << g.order()); shore += 3) {
      std::vector<Vertex> side;
      for (int v = 0; v < g.order(); ++v) {
        if ((shore >> v) & 1) side.push_back(v);
      }
      EXPECT_EQ(is_tight(g, cut_around(g, side)), oracle::cut_is_tight(p, shore, pms)) << graph6_encode(g);
    }
  }
}

TEST(Cuts, SearchFindsATightCutExactlyWhenOneExists) {
  for (const Graph& g : matching_covered_sample()) {
    const oracle::Plain p(g);
    const bool want = oracle::has_nontrivial_tight_cut(p);
    for (auto order : {CutSearchOrder::kAscending, CutSearchOrder::kDescending}) {
      const auto cut = find_nontrivial_tight_cut(g, {}, order);
      ASSERT_EQ(cut.has_value(), want) << graph6_encode(g);
      if (!cut) continue;
      EXPECT_FALSE(cut->trivial());
      EXPECT_TRUE(cut->in_shore(0));
      EXPECT_TRUE(oracle::cut_is_tight(p, mask_of(cut->shore), oracle::perfect_matchings(p)));
    }
  }
}

TEST(Cuts, SearchRequiresMatchingCovered) {
  EXPECT_THROW(find_nontrivial_tight_cut(fixture(FixtureId::kFig7a)), NotMatchingCovered);
  EXPECT_THROW(decompose(fixture(FixtureId::kFig2c)), NotMatchingCovered);
}

TEST(Cuts, ShoreLimitIsABudget) {
  Budgets tiny;
  tiny.cut_shore_size = 1;
  EXPECT_THROW(find_nontrivial_tight_cut(fixture(FixtureId::kFig6b), tiny), BudgetExceeded);
}

TEST(Cuts, PiecesAreBracesAndBricksByDefinition) {
  int split = 0;
  for (const Graph& g : matching_covered_sample()) {
    const auto r = decompose(g);
    split += r.pieces.size() > 1;
    for (const auto& piece : r.pieces) {
      if (piece.kind == PieceKind::kBrace) {
        EXPECT_TRUE(oracle::brace(oracle::Plain(piece.graph))) << graph6_encode(g);
      } else {
        EXPECT_TRUE(is_brick_by_definition(piece.graph)) << graph6_encode(g);
      }
    }
    EXPECT_EQ(r.cut_trace.size() + 1, r.pieces.size());
  }
  EXPECT_GT(split, 20);
}

TEST(Cuts, PieceMultisetDoesNotDependOnOrder) {
  auto key = [](const DecompositionResult& r) {
    std::vector<std::pair<int, int>> k;
    for (const auto& p : r.pieces) k.emplace_back(p.graph.order(), p.graph.size());
    std::sort(k.begin(), k.end());
    return k;
  };
  for (const Graph& g : matching_covered_sample()) {
    const auto a = decompose(g, {}, CutSearchOrder::kAscending);
    const auto b = decompose(g, {}, CutSearchOrder::kDescending);
    EXPECT_EQ(key(a), key(b)) << graph6_encode(g);
  }
}

TEST(Cuts, ContractionShape) {
  const Graph k33 = fixture(FixtureId::kK33);
  const auto sp = star_product({k33, 0, k33, 0});
  const auto [first, second] = tight_cut_contractions(sp.graph, sp.principal_cut);
  EXPECT_EQ(first.graph.order(), static_cast<int>(sp.principal_cut.shore.size()) + 1);
  EXPECT_EQ(first.contraction_vertex, first.graph.order() - 1);
  EXPECT_EQ(first.graph.degree(first.contraction_vertex), 3);
  EXPECT_EQ(first.origin.back(), -1);
  EXPECT_TRUE(are_isomorphic(first.graph, k33));
  EXPECT_TRUE(are_isomorphic(second.graph, k33));
  for (int v = 0; v < first.contraction_vertex; ++v) EXPECT_TRUE(sp.principal_cut.in_shore(first.origin[v]));
  EXPECT_THROW(tight_cut_contractions(sp.graph, cut_around(sp.graph, std::vector<Vertex>{0})), PreconditionError);
}

TEST(Cuts, ContractionDropsParallelEdges) {
  // C6 with a chord; contracting a path of three vertices merges two edges
  const Graph g(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
  const std::vector<Vertex> shore{0, 1, 2};
  const EdgeCut cut = cut_around(g, shore);
  ASSERT_TRUE(is_tight(g, cut));
  const auto [first, second] = tight_cut_contractions(g, cut);
  EXPECT_EQ(first.graph.size(), 4);  // 0-1-2 plus the hub joined to 0 and 2
  EXPECT_EQ(second.graph.size(), 4);
}

TEST(Cuts, InducedMatching) {
  const Graph cube = fixture(FixtureId::kCube);
  EXPECT_TRUE(is_induced_matching(cube, std::vector<Edge>{make_edge(0, 4), make_edge(2, 6)}));
  EXPECT_FALSE(is_induced_matching(cube, std::vector<Edge>{make_edge(0, 4), make_edge(1, 5)}));
  EXPECT_FALSE(is_induced_matching(cube, std::vector<Edge>{make_edge(0, 4), make_edge(0, 1)}));
}

TEST(Cuts, QuasiTightHoldsVacuously) {
  const Graph fig7a = fixture(FixtureId::kFig7a);
  const std::vector<Vertex> shore{0, 1, 2};
  EXPECT_TRUE(is_quasi_tight(fig7a, cut_around(fig7a, shore)));
  EXPECT_THROW(is_tight(fig7a, cut_around(fig7a, shore)), NotMatchingCovered);
}

TEST(Cuts, BalanceHypotheses) {
  using Reason = CutHypothesisError::Reason;
  auto reason_of = [](const Graph& g, const std::vector<Vertex>& shore) {
    try {
      verify_cut_balance(g, cut_around(g, shore));
    } catch (const CutHypothesisError& e) {
      return static_cast<int>(e.reason());
    }
    return -1;
  };
  EXPECT_EQ(reason_of(fixture(FixtureId::kPrism), {0, 1, 2}), static_cast<int>(Reason::kNotBipartite));
  EXPECT_EQ(reason_of(fixture(FixtureId::kCube), {0, 1}), static_cast<int>(Reason::kMixedEndpointColours));
  // two disjoint C4s: empty cut around one of them
  const Graph two(8, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {4, 5}, {5, 6}, {6, 7}, {7, 4}});
  EXPECT_EQ(reason_of(two, {0, 1, 2, 3}), static_cast<int>(Reason::kEmptyCut));
  // even shore on a path: every perfect matching meets the cut an even number of times
  const Graph path(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}});
  EXPECT_EQ(reason_of(path, {0, 1, 2, 3}), static_cast<int>(Reason::kNoSingleCrossingMatching));
}

TEST(Cuts, BalanceOnStarProducts) {
  const Graph k33 = fixture(FixtureId::kK33);
  const Graph heawood = fixture(FixtureId::kHeawood);
  for (const auto& [a, b] : {std::pair{k33, k33}, std::pair{k33, heawood}}) {
    const auto sp = star_product({a, 0, b, 0});
    const auto balance = verify_cut_balance(sp.graph, sp.principal_cut);
    EXPECT_EQ(balance.shore_excess(), 1);
    EXPECT_EQ(balance.far_excess(), 1);
    EXPECT_TRUE(balance.every_matching_crosses_once);
    EXPECT_TRUE(balance.holds());
  }
}
