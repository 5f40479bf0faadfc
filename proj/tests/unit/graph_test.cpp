#include <gtest/gtest.h>

#include <random>
#include <string>

#include "bracekit/errors.hpp"
#include "bracekit/fixtures.hpp"
#include "bracekit/graph.hpp"
#include "bracekit/graph6.hpp"
#include "oracles.hpp"

using namespace bracekit;

namespace {

// Bit-level graph6 writer, straight from the format description.
std::string reference_graph6(const Graph& g) {
  const int n = g.order();
  std::string s;
  if (n <= 62) {
    s += static_cast<char>(63 + n);
  } else {
    s += '~';
    s += static_cast<char>(63 + ((n >> 12) & 63));
    s += static_cast<char>(63 + ((n >> 6) & 63));
    s += static_cast<char>(63 + (n & 63));
  }
  std::vector<int> bits;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i) bits.push_back(g.adjacent(i, j) ? 1 : 0);
  }
  while (bits.size() % 6) bits.push_back(0);
  for (std::size_t k = 0; k < bits.size(); k += 6) {
    int v = 0;
    for (int b = 0; b < 6; ++b) v = (v << 1) | bits[k + b];
    s += static_cast<char>(63 + v);
  }
  return s;
}

}  // namespace

TEST(Graph6, FormatDocumentExample) {
  // order 5 with edges 0-2, 0-4, 1-3, 3-4
  const Graph g = graph6_decode("DQc");
  EXPECT_EQ(g.order(), 5);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 2}, {0, 4}, {1, 3}, {3, 4}}));
  EXPECT_EQ(graph6_encode(g), "DQc");
}

TEST(Graph6, MatchesReferenceEncoderOnRandomGraphs) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = 1 + static_cast<int>(rng() % 80);
    const Graph g = oracle::random_graph(n, 0.3, rng);
    const std::string s = graph6_encode(g);
    EXPECT_EQ(s, reference_graph6(g));
    EXPECT_EQ(graph6_decode(s), g);
  }
}

TEST(Graph6, LongSizeHeader) {
  const Graph g = oracle::to_graph(100, {{0, 99}, {5, 6}});
  const std::string s = graph6_encode(g);
  EXPECT_EQ(s.substr(0, 4), "~?@c");
  EXPECT_EQ(graph6_decode(s), g);
}

TEST(Graph6, RejectsMalformed) {
  EXPECT_THROW(graph6_decode(""), ParseError);
  EXPECT_THROW(graph6_decode("C"), ParseError);      // truncated body
  EXPECT_THROW(graph6_decode("C~~"), ParseError);    // trailing bytes
  EXPECT_THROW(graph6_decode("C\x20"), ParseError);  // below the printable range
  try {
    graph6_decode("Dq c");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 2u);
  }
}

TEST(Graph6, AcceptsHeaderAndNewline) {
  EXPECT_EQ(graph6_decode(">>graph6<<DQc\n"), graph6_decode("DQc"));
}

TEST(Graph, ConstructorNormalisesEdges) {
  const Graph g(4, {{3, 1}, {0, 1}, {2, 3}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {1, 3}, {2, 3}}));
  EXPECT_EQ(g.edge_index(3, 1), 1);
  EXPECT_EQ(g.edge_index(0, 2), -1);
  EXPECT_THROW(Graph(3, {{0, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 1}, {1, 0}}), std::invalid_argument);
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST(Graph, PropertiesAgreeWithBruteForce) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const int n = 2 + static_cast<int>(rng() % 10);
    const Graph g = oracle::random_graph(n, 0.2 + 0.05 * (trial % 10), rng);
    const oracle::Plain p(g);
    SCOPED_TRACE(graph6_encode(g));
    EXPECT_EQ(is_bipartite(g), oracle::bipartite(p));
    EXPECT_EQ(is_connected(g), oracle::connected(p));
    EXPECT_EQ(girth(g).value_or(0), oracle::girth(p));
    for (int k = 1; k <= 3; ++k) EXPECT_EQ(is_k_connected(g, k), oracle::k_connected(p, k)) << "k=" << k;
    std::vector<std::pair<int, int>> found;
    for (const auto& e : bridges(g)) found.emplace_back(e.u, e.v);
    EXPECT_EQ(found, oracle::bridges(p));
  }
}

TEST(Graph, BipartitionClassesAreProper) {
  const Graph h = fixture(FixtureId::kHeawood);
  const auto parts = bipartition(h);
  ASSERT_TRUE(parts);
  EXPECT_EQ(parts->class_a.size(), 7u);
  for (const auto& e : h.edges()) EXPECT_NE(parts->colour[e.u], parts->colour[e.v]);
  EXPECT_FALSE(bipartition(fixture(FixtureId::kPrism)));
}

TEST(Graph, CyclicFourConnectivity) {
  EXPECT_TRUE(is_cyclically_4_connected(fixture(FixtureId::kHeawood)));
  EXPECT_TRUE(is_cyclically_4_connected(fixture(FixtureId::kCube)));
  // two triangles joined by a 3-edge cut
  EXPECT_FALSE(is_cyclically_4_connected(fixture(FixtureId::kPrism)));
}

TEST(Graph, InducedAndRelabelled) {
  const Graph c = fixture(FixtureId::kCube);
  const std::vector<Vertex> face{0, 1, 2, 3};
  const Graph f = c.induced(face);
  EXPECT_EQ(f.order(), 4);
  EXPECT_EQ(f.size(), 4);
  std::vector<Vertex> perm{7, 6, 5, 4, 3, 2, 1, 0};
  const Graph r = c.relabelled(perm);
  EXPECT_EQ(r.size(), 12);
  for (const auto& e : c.edges()) EXPECT_TRUE(r.adjacent(perm[e.u], perm[e.v]));
}
