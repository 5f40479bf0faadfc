#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "bracekit/cuts.hpp"
#include "bracekit/errors.hpp"
#include "bracekit/fixtures.hpp"
#include "bracekit/graph6.hpp"
#include "bracekit/isomorphism.hpp"
#include "bracekit/matching.hpp"
#include "oracles.hpp"

using namespace bracekit;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Fixtures, Counts) {
  const std::map<std::string, std::pair<int, int>> want{
      {"C4", {4, 4}},      {"K4", {4, 6}},       {"K4minus", {4, 5}}, {"K33", {6, 9}},    {"Cube", {8, 12}},
      {"Prism", {6, 9}},   {"Heawood", {14, 21}}, {"Fig2b", {6, 7}},  {"Fig2c", {6, 7}},  {"Fig4a", {7, 10}},
      {"Fig4b", {18, 27}}, {"Fig5a", {7, 10}},   {"Fig5b", {12, 17}}, {"Fig6a", {8, 10}}, {"Fig6b", {14, 17}},
      {"Fig7a", {16, 24}}, {"Fig7b", {18, 27}},
  };
  ASSERT_EQ(all_fixtures().size(), want.size());
  for (FixtureId id : all_fixtures()) {
    const Graph g = fixture(id);
    const auto& [n, m] = want.at(std::string(fixture_name(id)));
    EXPECT_EQ(g.order(), n) << fixture_name(id);
    EXPECT_EQ(g.size(), m) << fixture_name(id);
    EXPECT_EQ(fixture_id(fixture_name(id)), id);
    EXPECT_EQ(static_cast<int>(fixture_labels(id).size()), n);
  }
  EXPECT_THROW(fixture("Petersen"), UnknownFixture);
}

TEST(Fixtures, HeawoodIsTheFanoIncidenceGraph) {
  oracle::EdgeList edges;
  for (int line = 0; line < 7; ++line) {
    for (int step : {0, 1, 3}) edges.emplace_back((line + step) % 7, 7 + line);
  }
  const Graph fano = oracle::to_graph(14, edges);
  const Graph h = fixture(FixtureId::kHeawood);
  EXPECT_TRUE(are_isomorphic(h, fano));
  const oracle::Plain p(h);
  EXPECT_EQ(oracle::girth(p), 6);
  EXPECT_TRUE(oracle::bipartite(p));
}

TEST(Fixtures, SmallGraphsByDefinition) {
  EXPECT_EQ(oracle::girth(oracle::Plain(fixture(FixtureId::kK33))), 4);
  EXPECT_EQ(oracle::girth(oracle::Plain(fixture(FixtureId::kCube))), 4);
  EXPECT_EQ(oracle::girth(oracle::Plain(fixture(FixtureId::kPrism))), 3);
  EXPECT_TRUE(fixture(FixtureId::kK4).is_regular(3));
  EXPECT_EQ(degree_sequence(fixture(FixtureId::kK4minus)), (std::vector<int>{3, 3, 2, 2}));
}

TEST(Fixtures, PrincipalShoresGiveThreeEdgeCuts) {
  int with_shore = 0;
  for (FixtureId id : all_fixtures()) {
    const auto shore = principal_shore(id);
    if (!shore) continue;
    ++with_shore;
    const Graph g = fixture(id);
    const EdgeCut cut = cut_around(g, *shore);
    EXPECT_EQ(cut.delta.size(), 3u) << fixture_name(id);
    EXPECT_FALSE(cut.trivial()) << fixture_name(id);
  }
  EXPECT_GE(with_shore, 7);
}

TEST(Fixtures, BridgedFigureHasAllBridgesAtOneVertex) {
  const Graph g = fixture(FixtureId::kFig7a);
  const auto labels = fixture_labels(FixtureId::kFig7a);
  const auto b = bridges(g);
  ASSERT_EQ(b.size(), 3u);
  const Vertex hub = std::find(labels.begin(), labels.end(), "A6") - labels.begin();
  for (const auto& e : b) EXPECT_TRUE(e.u == hub || e.v == hub);
  EXPECT_EQ(oracle::bridges(oracle::Plain(g)).size(), 3u);
}

TEST(Fixtures, ShippedBundleIsCurrent) {
  std::ostringstream graphs, index;
  write_fixture_bundle(graphs, index);
  EXPECT_EQ(slurp(std::string(BRACEKIT_DATA_DIR) + "/fixtures.g6"), graphs.str());
  EXPECT_EQ(slurp(std::string(BRACEKIT_DATA_DIR) + "/fixtures.tsv"), index.str());
  std::istringstream lines(graphs.str());
  std::string line;
  std::size_t i = 0;
  while (std::getline(lines, line)) EXPECT_EQ(graph6_decode(line), fixture(all_fixtures()[i++]));
}

TEST(Fixtures, ShippedRotationFiles) {
  for (FixtureId id : {FixtureId::kC4, FixtureId::kCube}) {
    std::ifstream in(std::string(BRACEKIT_DATA_DIR) + "/" + std::string(fixture_name(id)) + ".rot");
    ASSERT_TRUE(in) << fixture_name(id);
    EXPECT_EQ(read_rotation_system(fixture(id), in), *fixture_rotation(id));
  }
}
