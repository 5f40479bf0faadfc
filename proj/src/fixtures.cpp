#include "bracekit/fixtures.hpp"

#include <algorithm>
#include <array>
#include <ostream>
#include <utility>

#include "bracekit/errors.hpp"
#include "bracekit/graph6.hpp"

namespace bracekit {

namespace {

using LabelEdge = std::pair<std::string_view, std::string_view>;

struct Table {
  std::string_view name;
  std::vector<std::string_view> labels;  // vertex i carries labels[i]
  std::vector<LabelEdge> edges;
  std::vector<std::string_view> shore;   // principal cut shore, if any
};

// Coordinates in the comments are the drawing positions (x, y).

Table c4() {
  return {"C4", {"0", "1", "2", "3"}, {{"0", "1"}, {"1", "2"}, {"2", "3"}, {"3", "0"}}, {}};
}

Table k4() {
  return {"K4",
          {"A1",   // (0,0)
           "A2",   // (0,2)
           "A3",   // (1,1)
           "A4"},  // (2,1)
          {{"A1", "A2"}, {"A1", "A3"}, {"A1", "A4"}, {"A2", "A3"}, {"A2", "A4"}, {"A3", "A4"}},
          {}};
}

Table k4minus() {
  // A2A4 is the missing edge; A1 and A3 have degree 3.
  return {"K4minus",
          {"A1",   // (0,1)
           "A2",   // (1,0)
           "A3",   // (2,1)
           "A4"},  // (1,2)
          {{"A1", "A2"}, {"A2", "A3"}, {"A3", "A4"}, {"A3", "A1"}, {"A4", "A1"}},
          {}};
}

Table k33() {
  return {"K33",
          {"V1", "V2", "V3",   // bottom row, unfilled
           "U1", "U2", "U3"},  // top row, filled
          {{"V1", "U1"}, {"V1", "U2"}, {"V1", "U3"}, {"V2", "U1"}, {"V2", "U2"}, {"V2", "U3"},
           {"V3", "U1"}, {"V3", "U2"}, {"V3", "U3"}},
          {}};
}

Table cube() {
  return {"Cube",
          {"V1",   // (0,0) outer
           "V2",   // (3,0)
           "V3",   // (3,3)
           "V4",   // (0,3)
           "U1",   // (1,1) inner
           "U2",   // (2,1)
           "U3",   // (2,2)
           "U4"},  // (1,2)
          {{"V1", "V2"}, {"V2", "V3"}, {"V3", "V4"}, {"V4", "V1"}, {"U1", "U2"}, {"U2", "U3"},
           {"U3", "U4"}, {"U4", "U1"}, {"V1", "U1"}, {"V2", "U2"}, {"V3", "U3"}, {"V4", "U4"}},
          {}};
}

Table prism() {
  // Triangles A1A2A3 and A4A5A6; the last three edges form the principal cut.
  return {"Prism",
          {"A1",   // (0,0)
           "A2",   // (0,2)
           "A3",   // (1,1)
           "A4",   // (3,1)
           "A5",   // (4,0)
           "A6"},  // (4,2)
          {{"A1", "A2"}, {"A2", "A3"}, {"A4", "A5"}, {"A5", "A6"}, {"A1", "A3"}, {"A4", "A6"},
           {"A2", "A6"}, {"A1", "A5"}, {"A3", "A4"}},
          {"A1", "A2", "A3"}};
}

Table heawood() {
  // Vi sits at angle 360*i/14 on the circle; odd i filled.
  Table t{"Heawood", {"V1", "V2", "V3", "V4", "V5", "V6", "V7", "V8", "V9", "V10", "V11", "V12", "V13", "V14"},
          {}, {}};
  for (std::size_t i = 0; i < 14; ++i) t.edges.emplace_back(t.labels[i], t.labels[(i + 1) % 14]);
  t.edges.insert(t.edges.end(), {{"V1", "V6"}, {"V2", "V11"}, {"V3", "V8"}, {"V4", "V13"}, {"V5", "V10"},
                                 {"V7", "V12"}, {"V9", "V14"}});
  return t;
}

Table fig2b() {
  return {"Fig2b",
          {"A1",   // (0,0) filled
           "A2",   // (2,1) filled
           "A3",   // (0,2) filled
           "B1",   // (2,0)
           "B2",   // (0,1)
           "B3"},  // (2,2)
          {{"A1", "B1"}, {"A2", "B2"}, {"A3", "B3"}, {"A1", "B2"}, {"B1", "A2"}, {"A2", "B3"}, {"B2", "A3"}},
          {"A1", "A3", "B2"}};
}

Table fig2c() {
  return {"Fig2c",
          {"A1",   // (0,0)
           "A2",   // (2,1)
           "A3",   // (0,2)
           "B1",   // (2,0)
           "B2",   // (0,1)
           "B3"},  // (2,2)
          {{"A1", "B1"}, {"A2", "B2"}, {"A3", "B3"}, {"A1", "B2"}, {"B2", "A3"}, {"A2", "B3"}, {"B1", "B3"}},
          {"A1", "A3", "B2"}};
}

Table fig5a(std::string_view name) {
  return {name,
          {"A1",   // (0,2) filled
           "A2",   // (2,1)
           "A3",   // (2,3)
           "A4",   // (4,2)
           "B1",   // (2,0) unfilled
           "B2",   // (2,2)
           "B3"},  // (2,4)
          {{"A1", "B1"}, {"A1", "B2"}, {"A1", "B3"}, {"A4", "B1"}, {"A4", "B2"}, {"A4", "B3"},
           {"A2", "B1"}, {"A2", "B2"}, {"A3", "B2"}, {"A3", "B3"}},
          {}};
}

Table fig5b() {
  return {"Fig5b",
          {"A1",   // (0,2) filled
           "A2",   // (2,1)
           "A3",   // (2,3)
           "A4",   // (4,0)
           "A5",   // (4,2)
           "A6",   // (4,4)
           "B1",   // (2,0) unfilled
           "B2",   // (2,2)
           "B3",   // (2,4)
           "B4",   // (4,1)
           "B5",   // (4,3)
           "B6"},  // (6,2)
          {{"A1", "B1"}, {"A1", "B2"}, {"A1", "B3"}, {"A2", "B1"}, {"A2", "B2"}, {"A3", "B2"},
           {"A3", "B3"}, {"A4", "B1"}, {"A4", "B4"}, {"A4", "B6"}, {"A5", "B2"}, {"A5", "B4"},
           {"A5", "B5"}, {"A5", "B6"}, {"A6", "B3"}, {"A6", "B5"}, {"A6", "B6"}},
          {"A1", "A2", "A3", "B1", "B2", "B3"}};
}

Table fig6a() {
  return {"Fig6a",
          {"A1",   // (0,0) filled
           "A2",   // (1,1)
           "A3",   // (0,2)
           "A4",   // (1,3)
           "B1",   // (1,0) unfilled
           "B2",   // (0,1)
           "B3",   // (1,2)
           "B4"},  // (0,3)
          {{"A1", "B1"}, {"A2", "B2"}, {"A3", "B3"}, {"A4", "B4"}, {"A1", "B2"}, {"A2", "B3"},
           {"A3", "B4"}, {"B1", "A2"}, {"B2", "A3"}, {"B3", "A4"}},
          {}};
}

Table fig6b() {
  // The drawing joins B3 to C3; both are unfilled, so A4C3 is used instead.
  return {"Fig6b",
          {"A1",   // (0,0) filled
           "A2",   // (1,1)
           "A3",   // (0,2)
           "A4",   // (1,3)
           "B1",   // (1,0) unfilled
           "B2",   // (0,1)
           "B3",   // (0,3)
           "C1",   // (2,1) unfilled
           "C2",   // (3,2)
           "C3",   // (2,3)
           "C4",   // (3,4)
           "D1",   // (3,1) filled
           "D2",   // (3,3)
           "D3"},  // (2,4)
          {{"A1", "B1"}, {"A2", "B2"}, {"A3", "B3"}, {"C1", "D1"}, {"C2", "D2"}, {"C3", "D3"},
           {"A1", "B2"}, {"A2", "B1"}, {"A2", "C1"}, {"A3", "B2"}, {"A3", "C2"}, {"A4", "B3"},
           {"A4", "C3"}, {"D1", "C2"}, {"C3", "D2"}, {"C4", "D2"}, {"C4", "D3"}},
          {"A1", "A2", "A3", "A4", "B1", "B2", "B3"}};
}

std::vector<LabelEdge> fig7_common() {
  return {{"A1", "A2"},  {"A1", "A3"},  {"A1", "A5"},  {"A2", "A3"},   {"A2", "A4"},   {"A3", "A5"},
          {"A4", "A5"},  {"A4", "A6"},  {"A6", "A7"},  {"A6", "A12"},  {"A7", "A8"},   {"A7", "A9"},
          {"A8", "A10"}, {"A8", "A11"}, {"A9", "A10"}, {"A9", "A11"},  {"A10", "A11"}, {"A12", "A13"},
          {"A12", "A15"}, {"A13", "A16"}, {"A15", "A16"}};
}

std::vector<std::string_view> fig7_labels() {
  return {"A1",    // (0,1)
          "A2",    // (1,3)
          "A3",    // (1,2)
          "A4",    // (2,3)
          "A5",    // (2,1)
          "A6",    // (2.5,3)
          "A7",    // (2.5,2)
          "A8",    // (2.5,0)
          "A9",    // (3.5,2)
          "A10",   // (3.5,1)
          "A11",   // (4.5,0)
          "A12",   // (5,3)
          "A13"};  // (5,0)
}

Table fig7a() {
  Table t{"Fig7a", fig7_labels(), fig7_common(), {}};
  t.labels.insert(t.labels.end(), {"A14",    // (6,1.5)
                                   "A15",    // (7,3)
                                   "A16"});  // (7,0)
  t.edges.insert(t.edges.end(), {{"A13", "A14"}, {"A14", "A15"}, {"A14", "A16"}});
  return t;
}

Table fig7b(std::string_view name) {
  // Fig7a with A14 replaced by the triangle C1 C2 C3.
  Table t{name, fig7_labels(), fig7_common(), {}};
  t.labels.insert(t.labels.end(), {"A15",   // (7,3)
                                   "A16",   // (7,0)
                                   "C1",    // (5.65,1)
                                   "C2",    // (6.35,1)
                                   "C3"});  // (6.35,2)
  t.edges.insert(t.edges.end(),
                 {{"C1", "C2"}, {"C1", "C3"}, {"C2", "C3"}, {"C1", "A13"}, {"C2", "A16"}, {"C3", "A15"}});
  t.shore = fig7_labels();
  t.shore.insert(t.shore.end(), {"A15", "A16"});
  return t;
}

Table table_for(FixtureId id) {
  switch (id) {
    case FixtureId::kC4: return c4();
    case FixtureId::kK4: return k4();
    case FixtureId::kK4minus: return k4minus();
    case FixtureId::kK33: return k33();
    case FixtureId::kCube: return cube();
    case FixtureId::kPrism: return prism();
    case FixtureId::kHeawood: return heawood();
    case FixtureId::kFig2b: return fig2b();
    case FixtureId::kFig2c: return fig2c();
    case FixtureId::kFig4a: return fig5a("Fig4a");
    case FixtureId::kFig4b: return fig7b("Fig4b");
    case FixtureId::kFig5a: return fig5a("Fig5a");
    case FixtureId::kFig5b: return fig5b();
    case FixtureId::kFig6a: return fig6a();
    case FixtureId::kFig6b: return fig6b();
    case FixtureId::kFig7a: return fig7a();
    case FixtureId::kFig7b: return fig7b("Fig7b");
  }
  throw UnknownFixture("#" + std::to_string(static_cast<int>(id)));
}

Vertex index_of(const Table& t, std::string_view label) {
  const auto it = std::find(t.labels.begin(), t.labels.end(), label);
  if (it == t.labels.end()) throw Error("fixture " + std::string(t.name) + " has no vertex " + std::string(label));
  return static_cast<Vertex>(it - t.labels.begin());
}

constexpr std::array kAll{
    FixtureId::kC4,    FixtureId::kK4,    FixtureId::kK4minus, FixtureId::kK33,   FixtureId::kCube,  FixtureId::kPrism,
    FixtureId::kHeawood, FixtureId::kFig2b, FixtureId::kFig2c, FixtureId::kFig4a, FixtureId::kFig4b, FixtureId::kFig5a,
    FixtureId::kFig5b, FixtureId::kFig6a, FixtureId::kFig6b,   FixtureId::kFig7a, FixtureId::kFig7b,
};

constexpr std::array<std::string_view, kAll.size()> kNames{
    "C4",    "K4",    "K4minus", "K33",   "Cube",  "Prism", "Heawood", "Fig2b", "Fig2c",
    "Fig4a", "Fig4b", "Fig5a",   "Fig5b", "Fig6a", "Fig6b", "Fig7a",   "Fig7b",
};

}  // namespace

std::span<const FixtureId> all_fixtures() { return kAll; }

std::string_view fixture_name(FixtureId id) { return kNames[static_cast<std::size_t>(id)]; }

FixtureId fixture_id(std::string_view name) {
  for (std::size_t i = 0; i < kNames.size(); ++i) {
    if (kNames[i] == name) return kAll[i];
  }
  throw UnknownFixture(std::string(name));
}

Graph fixture(FixtureId id) {
  const Table t = table_for(id);
  std::vector<Edge> edges;
  for (const auto& [a, b] : t.edges) edges.push_back(make_edge(index_of(t, a), index_of(t, b)));
  return Graph(static_cast<int>(t.labels.size()), edges);
}

Graph fixture(std::string_view name) { return fixture(fixture_id(name)); }

std::vector<std::string> fixture_labels(FixtureId id) {
  const Table t = table_for(id);
  return {t.labels.begin(), t.labels.end()};
}

std::optional<std::vector<Vertex>> principal_shore(FixtureId id) {
  const Table t = table_for(id);
  if (t.shore.empty()) return std::nullopt;
  std::vector<Vertex> shore;
  for (auto label : t.shore) shore.push_back(index_of(t, label));
  std::sort(shore.begin(), shore.end());
  return shore;
}

std::optional<RotationSystem> fixture_rotation(FixtureId id) {
  switch (id) {
    case FixtureId::kC4:
      return make_rotation_system(fixture(id), {{1, 3}, {2, 0}, {3, 1}, {0, 2}});
    case FixtureId::kCube:
      // counter-clockwise around each vertex of the drawing
      return make_rotation_system(fixture(id), {{1, 4, 3}, {2, 5, 0}, {3, 6, 1}, {0, 7, 2},
                                                {5, 7, 0}, {6, 4, 1}, {2, 7, 5}, {6, 3, 4}});
    default:
      return std::nullopt;
  }
}

void write_fixture_bundle(std::ostream& graphs, std::ostream& index) {
  int line = 0;
  for (FixtureId id : kAll) {
    const Graph g = fixture(id);
    graphs << graph6_encode(g) << '\n';
    index << ++line << '\t' << fixture_name(id) << '\t' << g.order() << '\t' << g.size() << '\n';
  }
}

}  // namespace bracekit
