#include <gtest/gtest.h>

#include <cmath>
#include <random>
#include <sstream>

#include "bracekit/constructions.hpp"
#include "bracekit/errors.hpp"
#include "bracekit/fixtures.hpp"
#include "bracekit/matching.hpp"
#include "bracekit/planar.hpp"
#include "oracles.hpp"

using namespace bracekit;

namespace {

struct Drawing {
  Graph graph;
  std::vector<std::pair<double, double>> at;
};

// Counter-clockwise neighbour order read off straight-line coordinates.
RotationSystem rotation_from_coordinates(const Drawing& d) {
  std::vector<std::vector<Vertex>> order(d.graph.order());
  for (Vertex v = 0; v < d.graph.order(); ++v) {
    const auto nb = d.graph.neighbours(v);
    order[v].assign(nb.begin(), nb.end());
    auto angle = [&](Vertex w) {
      return std::atan2(d.at[w].second - d.at[v].second, d.at[w].first - d.at[v].first);
    };
    std::sort(order[v].begin(), order[v].end(), [&](Vertex a, Vertex b) { return angle(a) < angle(b); });
  }
  return make_rotation_system(d.graph, order);
}

// Prism over a k-cycle: outer ring 0..k-1 at radius 2, inner ring at radius 1.
Drawing prism(int k) {
  std::vector<std::pair<int, int>> edges;
  std::vector<std::pair<double, double>> at(2 * k);
  const double pi = std::acos(-1.0);
  for (int i = 0; i < k; ++i) {
    edges.emplace_back(i, (i + 1) % k);
    edges.emplace_back(k + i, k + (i + 1) % k);
    edges.emplace_back(i, k + i);
    const double t = 2 * pi * i / k;
    at[i] = {2 * std::cos(t), 2 * std::sin(t)};
    at[k + i] = {std::cos(t), std::sin(t)};
  }
  return {oracle::to_graph(2 * k, edges), at};
}

// Every rotation system of a graph whose vertices all have degree <= 3.
std::vector<RotationSystem> all_rotations(const Graph& g) {
  std::vector<RotationSystem> out;
  const int n = g.order();
  for (std::uint32_t flips = 0; flips < (1u << n); ++flips) {
    std::vector<std::vector<Vertex>> order(n);
    for (Vertex v = 0; v < n; ++v) {
      const auto nb = g.neighbours(v);
      order[v].assign(nb.begin(), nb.end());
      if ((flips >> v) & 1) std::reverse(order[v].begin(), order[v].end());
    }
    out.push_back(make_rotation_system(g, order));
  }
  return out;
}

}  // namespace

TEST(Faces, EvenPrismsFromCoordinates) {
  for (int k : {4, 6, 8, 10}) {
    const Drawing d = prism(k);
    const RotationSystem r = rotation_from_coordinates(d);
    const FaceTrace t = trace_faces(d.graph, r);
    EXPECT_TRUE(t.planar());
    EXPECT_EQ(static_cast<int>(t.faces.size()), k + 2);
    EXPECT_EQ(count_quadrilateral_faces(d.graph, r), k == 4 ? 6 : k);
    EXPECT_TRUE(is_brace(d.graph)) << k;
  }
}

TEST(Faces, CubeFixtureRotation) {
  const Graph cube = fixture(FixtureId::kCube);
  const auto r = fixture_rotation(FixtureId::kCube);
  ASSERT_TRUE(r);
  EXPECT_EQ(count_quadrilateral_faces(cube, *r), 6);
  const auto c4 = fixture_rotation(FixtureId::kC4);
  ASSERT_TRUE(c4);
  EXPECT_EQ(trace_faces(fixture(FixtureId::kC4), *c4).faces.size(), 2u);
}

TEST(Faces, CubeHasExactlyTwoPlanarRotations) {
  // a 3-connected planar graph embeds uniquely up to reflection
  const Graph cube = fixture(FixtureId::kCube);
  int planar = 0;
  for (const auto& r : all_rotations(cube)) planar += trace_faces(cube, r).planar();
  EXPECT_EQ(planar, 2);
}

TEST(Faces, NoRotationOfK33IsPlanar) {
  const Graph k33 = fixture(FixtureId::kK33);
  for (const auto& r : all_rotations(k33)) {
    const auto t = trace_faces(k33, r);
    EXPECT_GE(t.genus, 1);
    EXPECT_THROW(count_quadrilateral_faces(k33, r), PreconditionError);
  }
}

TEST(Faces, RejectsBadRotations) {
  const Graph c4 = fixture(FixtureId::kC4);
  EXPECT_THROW(make_rotation_system(c4, {{1, 3}, {2, 0}, {3, 1}}), PreconditionError);
  EXPECT_THROW(make_rotation_system(c4, {{1, 2}, {2, 0}, {3, 1}, {0, 2}}), PreconditionError);
  const Graph two(4, {{0, 1}, {2, 3}});
  EXPECT_THROW(trace_faces(two, make_rotation_system(two, {{1}, {0}, {3}, {2}})), PreconditionError);
}

TEST(FourCycles, AgreeWithQuadrupleSearch) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(4 + static_cast<int>(rng() % 8), 0.4, rng);
    const auto want = oracle::four_cycles(oracle::Plain(g));
    const auto got = all_four_cycles(g);
    EXPECT_EQ(std::set<FourCycle>(got.begin(), got.end()), want);
    EXPECT_EQ(got.size(), want.size());
    EXPECT_TRUE(std::is_sorted(got.begin(), got.end()));
    for (const auto& c : got) {
      EXPECT_EQ(canonical_four_cycle(c), c);
      EXPECT_TRUE(is_four_cycle(g, c));
    }
  }
}

TEST(FourCycles, CanonicalForm) {
  EXPECT_EQ(canonical_four_cycle({5, 2, 7, 3}), (FourCycle{2, 5, 3, 7}));
  EXPECT_EQ(canonical_four_cycle({1, 0, 3, 2}), (FourCycle{0, 1, 2, 3}));
  const Graph c4 = fixture(FixtureId::kC4);
  EXPECT_TRUE(is_four_cycle(c4, {0, 1, 2, 3}));
  EXPECT_FALSE(is_four_cycle(c4, {0, 2, 1, 3}));
  EXPECT_FALSE(is_four_cycle(c4, {0, 1, 0, 1}));
}

TEST(FourCycles, PartnersInPlanarBraces) {
  for (int k : {4, 6, 8}) {
    const Drawing d = prism(k);
    for (const auto& c : all_four_cycles(d.graph)) {
      const auto partner = edge_disjoint_partner(d.graph, c);
      ASSERT_TRUE(partner);
      EXPECT_TRUE(is_four_cycle(d.graph, *partner));
      const auto ec = four_cycle_edges(c);
      for (const Edge& e : four_cycle_edges(*partner)) EXPECT_EQ(std::count(ec.begin(), ec.end(), e), 0);
    }
  }
  // C4 alone has no partner
  EXPECT_FALSE(edge_disjoint_partner(fixture(FixtureId::kC4), {0, 1, 2, 3}));
  EXPECT_THROW(edge_disjoint_partner(fixture(FixtureId::kC4), {0, 2, 1, 3}), PreconditionError);
}

TEST(FourCycles, ThreeEdgeDisjoint) {
  const Graph cube = fixture(FixtureId::kCube);
  const Trisum t = trisum({{cube, cube, cube}, {{{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}}}, {}});
  const auto triple = three_edge_disjoint_four_cycles(t.graph);
  ASSERT_TRUE(triple);
  std::set<Edge> used;
  for (const auto& c : *triple) {
    for (const Edge& e : four_cycle_edges(c)) EXPECT_TRUE(used.insert(e).second);
  }
  // the six faces of the cube pairwise meet unless opposite
  EXPECT_FALSE(three_edge_disjoint_four_cycles(cube));
  EXPECT_FALSE(three_edge_disjoint_four_cycles(fixture(FixtureId::kK33)));
  EXPECT_FALSE(three_edge_disjoint_four_cycles(fixture(FixtureId::kHeawood)));
}

TEST(Minors, K33WitnessInTrisum) {
  const Graph cube = fixture(FixtureId::kCube);
  const Trisum t = trisum({{cube, cube, cube}, {{{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}}}, {}});
  std::vector<std::vector<Vertex>> sets(6);
  for (int i = 0; i < 3; ++i) {
    for (Vertex v = 4; v < 8; ++v) sets[i].push_back(t.maps[i][v]);
  }
  sets[3] = {0};
  sets[4] = {1};
  sets[5] = {2};
  const Graph k33 = fixture(FixtureId::kK33);
  // K33 fixture: V1..V3 = 0..2 on one side
  std::vector<std::vector<Vertex>> ordered{sets[0], sets[1], sets[2], sets[3], sets[4], sets[5]};
  EXPECT_TRUE(is_minor_witness(t.graph, k33, ordered));
  auto overlapping = ordered;
  overlapping[3] = {0, 1};
  EXPECT_FALSE(is_minor_witness(t.graph, k33, overlapping));
  auto missing = ordered;
  missing[5] = {sets[0].front()};
  missing[0].erase(missing[0].begin());
  EXPECT_FALSE(is_minor_witness(t.graph, k33, missing));
  EXPECT_FALSE(is_minor_witness(t.graph, k33, {sets[0], sets[1]}));
}

TEST(Minors, DisconnectedBranchSetRejected) {
  const Graph c4 = fixture(FixtureId::kC4);
  const Graph k2(2, {{0, 1}});
  EXPECT_TRUE(is_minor_witness(c4, k2, {{0, 1}, {2, 3}}));
  EXPECT_FALSE(is_minor_witness(c4, k2, {{0, 2}, {1, 3}}));
}

TEST(RotationFiles, RoundTripAndErrors) {
  const Graph cube = fixture(FixtureId::kCube);
  std::ostringstream out;
  write_rotation_system(out, *fixture_rotation(FixtureId::kCube));
  std::istringstream in("# cube\n\n" + out.str());
  EXPECT_EQ(read_rotation_system(cube, in), *fixture_rotation(FixtureId::kCube));

  auto error_line = [&](const std::string& text) -> std::size_t {
    std::istringstream s(text);
    try {
      read_rotation_system(fixture(FixtureId::kC4), s);
    } catch (const ParseError& e) {
      return e.offset();
    }
    return 0;
  };
  EXPECT_EQ(error_line("0: 1 3\n1 2 0\n"), 2u);
  EXPECT_EQ(error_line("0: 1 3\n1: 2 x\n"), 2u);
  EXPECT_EQ(error_line("0: 1 3\n# c\n0: 1 3\n"), 3u);
  EXPECT_EQ(error_line("0: 1 3\n9: 1\n"), 2u);
  std::istringstream bad_order("0: 1 2\n1: 2 0\n2: 3 1\n3: 0 2\n");
  EXPECT_THROW(read_rotation_system(fixture(FixtureId::kC4), bad_order), PreconditionError);
}
