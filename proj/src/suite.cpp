#include "bracekit/suite.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <optional>
#include <sstream>

#include "bracekit/constructions.hpp"
#include "bracekit/cuts.hpp"
#include "bracekit/errors.hpp"
#include "bracekit/factors.hpp"
#include "bracekit/fixtures.hpp"
#include "bracekit/isomorphism.hpp"
#include "bracekit/matching.hpp"
#include "bracekit/pfaffian.hpp"
#include "bracekit/planar.hpp"

namespace bracekit {

std::string_view to_string(SuiteOutcome o) {
  switch (o) {
    case SuiteOutcome::kPass: return "PASS";
    case SuiteOutcome::kFail: return "FAIL";
    case SuiteOutcome::kInconclusive: return "INCONCLUSIVE";
  }
  return "INCONCLUSIVE";
}

const std::map<std::string, bool>& default_two_factor_labels() {
  static const std::map<std::string, bool> labels{
      {"C4", true},     {"K4", true},     {"K4minus", true}, {"K33", true},   {"Cube", false},  {"Prism", false},
      {"Heawood", true}, {"Fig2b", true}, {"Fig2c", true},   {"Fig4a", true}, {"Fig4b", true},  {"Fig5a", true},
      {"Fig5b", false}, {"Fig6a", false}, {"Fig6b", true},   {"Fig7a", true}, {"Fig7b", true},
  };
  return labels;
}

namespace {

class Check {
 public:
  void expect(bool condition, const std::string& what) {
    if (!condition) {
      ok_ = false;
      failures_ << (failures_.tellp() > 0 ? "; " : "") << what;
    }
  }
  std::ostringstream& note() { return notes_; }
  bool ok() const { return ok_; }
  std::string evidence() const {
    std::string s = notes_.str();
    if (!ok_) s += (s.empty() ? "" : " | ") + std::string("failed: ") + failures_.str();
    return s;
  }

 private:
  bool ok_ = true;
  std::ostringstream notes_;
  std::ostringstream failures_;
};

struct Context {
  const SuiteInputs& inputs;

  Graph get(FixtureId id) const {
    const auto it = inputs.fixtures.find(std::string(fixture_name(id)));
    return it != inputs.fixtures.end() ? it->second : fixture(id);
  }
  bool label(FixtureId id) const {
    const std::string name(fixture_name(id));
    const auto it = inputs.two_factor_labels.find(name);
    return it != inputs.two_factor_labels.end() ? it->second : default_two_factor_labels().at(name);
  }
  const Budgets& budgets() const { return inputs.budgets; }
};

StarProduct star(const Graph& a, const Graph& b, Vertex va = 0, Vertex vb = 0, Pairing p = kIdentityPairing) {
  return star_product({a, va, b, vb, p});
}

bool two_factor_hamiltonian(const Graph& g, const Budgets& b) {
  return is_two_factor_hamiltonian(g, b.two_factors).two_factor_hamiltonian;
}

// Some choice of degree-3 vertices and pairing makes g the star product of a and b.
bool is_star_of(const Graph& g, const Graph& a, const Graph& b) {
  if (g.order() != a.order() + b.order() - 2) return false;
  for (Vertex va = 0; va < a.order(); ++va) {
    if (a.degree(va) != 3) continue;
    for (Vertex vb = 0; vb < b.order(); ++vb) {
      if (b.degree(vb) != 3) continue;
      for (const Pairing& p : all_pairings()) {
        if (are_isomorphic(g, star(a, b, va, vb, p).graph)) return true;
      }
    }
  }
  return false;
}

struct NamedHost {
  std::string name;
  Graph graph;
  std::optional<EdgeCut> principal;
  Graph first;
  Graph second;
};

// Cubic bipartite star products used across several entries.
std::vector<NamedHost> cubic_bipartite_products(const Context& ctx) {
  const Graph k33 = ctx.get(FixtureId::kK33);
  const Graph heawood = ctx.get(FixtureId::kHeawood);
  const Graph cube = ctx.get(FixtureId::kCube);
  std::vector<NamedHost> out;
  auto add = [&](const std::string& name, const Graph& a, const Graph& b) {
    auto sp = star(a, b);
    out.push_back({name, sp.graph, sp.principal_cut, a, b});
  };
  add("K33*K33", k33, k33);
  add("K33*Heawood", k33, heawood);
  add("Cube*K33", cube, k33);
  add("Cube*Cube", cube, cube);
  return out;
}

std::string host_list(const std::vector<NamedHost>& hosts) {
  std::string s;
  for (const auto& h : hosts) s += (s.empty() ? "" : ", ") + h.name;
  return s;
}

// Prism over an even cycle with its ring embedding.
std::pair<Graph, RotationSystem> even_prism(int k) {
  std::vector<Edge> edges;
  for (int i = 0; i < k; ++i) {
    edges.push_back(make_edge(i, (i + 1) % k));
    edges.push_back(make_edge(k + i, k + (i + 1) % k));
    edges.push_back(make_edge(i, k + i));
  }
  Graph g(2 * k, edges);
  std::vector<std::vector<Vertex>> order(2 * k);
  for (int i = 0; i < k; ++i) {
    order[i] = {(i + 1) % k, k + i, (i + k - 1) % k};
    order[k + i] = {k + (i + k - 1) % k, i, k + (i + 1) % k};
  }
  return {g, make_rotation_system(g, order)};
}

struct PlanarBrace {
  std::string name;
  Graph graph;
  RotationSystem rotation;
};

std::vector<PlanarBrace> planar_braces(const Context& ctx) {
  std::vector<PlanarBrace> out;
  out.push_back({"Cube", ctx.get(FixtureId::kCube), *fixture_rotation(FixtureId::kCube)});
  for (int k : {6, 8}) {
    auto [g, r] = even_prism(k);
    out.push_back({"Prism" + std::to_string(2 * k), g, r});
  }
  return out;
}

// Three cubes sharing the face V1 V2 V3 V4, nothing removed; the shared
// cycle is vertices 0..3 of the result.
Trisum three_cube_trisum(const Context& ctx) {
  const Graph cube = ctx.get(FixtureId::kCube);
  TrisumSpec spec{{cube, cube, cube}, {{{0, 1, 2, 3}, {0, 1, 2, 3}, {0, 1, 2, 3}}}, {}};
  return trisum(spec);
}

Graph complete_bipartite_33() {
  return Graph(6, {{0, 3}, {0, 4}, {0, 5}, {1, 3}, {1, 4}, {1, 5}, {2, 3}, {2, 4}, {2, 5}});
}

// ---------------------------------------------------------------- entries

void fixture_sanity(const Context& ctx, Check& c) {
  const Graph k33 = ctx.get(FixtureId::kK33);
  const Graph heawood = ctx.get(FixtureId::kHeawood);
  const Graph cube = ctx.get(FixtureId::kCube);
  c.expect(k33.order() == 6 && k33.size() == 9, "K33 is not (6,9)");
  c.expect(heawood.order() == 14 && heawood.size() == 21, "Heawood is not (14,21)");
  c.expect(cube.order() == 8 && cube.size() == 12, "Cube is not (8,12)");
  c.expect(girth(k33) == 4, "girth(K33) != 4");
  c.expect(girth(heawood) == 6, "girth(Heawood) != 6");
  c.expect(girth(cube) == 4, "girth(Cube) != 4");
  for (FixtureId id : {FixtureId::kK33, FixtureId::kHeawood, FixtureId::kCube}) {
    const auto parts = bipartition(ctx.get(id));
    c.expect(parts && parts->class_a.size() == parts->class_b.size(),
             std::string(fixture_name(id)) + " lacks balanced colour classes");
  }
  c.note() << "K33 (6,9,g4), Heawood (14,21,g6), Cube (8,12,g4)";
}

void two_factor_labels(const Context& ctx, Check& c) {
  int checked = 0;
  for (FixtureId id : all_fixtures()) {
    const bool computed = two_factor_hamiltonian(ctx.get(id), ctx.budgets());
    c.expect(computed == ctx.label(id), std::string(fixture_name(id)) + " computed 2FH=" + (computed ? "yes" : "no"));
    ++checked;
  }
  c.note() << checked << " fixtures compared with their stated labels";
}

void two_factor_base_cases(const Context& ctx, Check& c) {
  const Graph heawood = ctx.get(FixtureId::kHeawood);
  for (FixtureId id : {FixtureId::kK33, FixtureId::kHeawood}) {
    c.expect(two_factor_hamiltonian(ctx.get(id), ctx.budgets()), std::string(fixture_name(id)) + " not 2FH");
  }
  for (FixtureId id : {FixtureId::kCube, FixtureId::kPrism}) {
    const auto v = is_two_factor_hamiltonian(ctx.get(id), ctx.budgets().two_factors);
    c.expect(!v.two_factor_hamiltonian && v.witness && v.witness->components() >= 2,
             std::string(fixture_name(id)) + " lacks a disconnected 2-factor");
  }
  const auto matchings = enumerate_perfect_matchings(heawood, ctx.budgets().matchings);
  int hamiltonian = 0;
  for (const auto& m : matchings) {
    const Graph rest = heawood.without_edges(m.edges);
    hamiltonian += make_two_factor(heawood, rest.edges()).is_hamiltonian_cycle();
  }
  c.expect(matchings.size() == 24, "Heawood has " + std::to_string(matchings.size()) + " perfect matchings");
  c.expect(hamiltonian == static_cast<int>(matchings.size()), "a Heawood matching complement is not a 14-cycle");
  c.note() << "Heawood: " << matchings.size() << " perfect matchings, " << hamiltonian << " complements Hamiltonian";
}

void konig(const Context& ctx, Check& c) {
  int hosts = 0;
  for (FixtureId id : all_fixtures()) {
    const Graph g = ctx.get(id);
    if (!g.is_cubic() || !is_bipartite(g)) continue;
    ++hosts;
    const auto parts = konig_partition(g);
    std::vector<Edge> all;
    for (const auto& m : parts) {
      c.expect(m.is_perfect() && is_matching(g, m.edges), std::string(fixture_name(id)) + ": part not perfect");
      all.insert(all.end(), m.edges.begin(), m.edges.end());
    }
    std::sort(all.begin(), all.end());
    c.expect(parts.size() == 3 && all == g.edges(), std::string(fixture_name(id)) + ": parts do not partition E");
  }
  c.note() << hosts << " cubic bipartite fixtures split into 3 perfect matchings";
}

void petersen(const Context& ctx, Check& c) {
  int hosts = 0;
  for (FixtureId id : all_fixtures()) {
    const Graph g = ctx.get(id);
    if (!g.is_cubic() || !bridges(g).empty()) continue;
    ++hosts;
    c.expect(has_perfect_matching(g), std::string(fixture_name(id)) + " has no perfect matching");
  }
  c.note() << hosts << " cubic bridgeless fixtures have perfect matchings";
}

void cubic_matching_covered(const Context& ctx, Check& c) {
  int hosts = 0;
  for (FixtureId id : all_fixtures()) {
    const Graph g = ctx.get(id);
    if (!g.is_cubic()) continue;
    ++hosts;
    c.expect(is_matching_covered(g) == is_k_connected(g, 2), std::string(fixture_name(id)) + " disagrees");
  }
  c.note() << hosts << " cubic fixtures: matching covered iff 2-connected";
}

void tight_iff_induced(const Context& ctx, Check& c) {
  std::vector<NamedHost> hosts;
  hosts.push_back({"K33", ctx.get(FixtureId::kK33), std::nullopt, ctx.get(FixtureId::kK33), ctx.get(FixtureId::kK33)});
  hosts.push_back({"Heawood", ctx.get(FixtureId::kHeawood), std::nullopt, ctx.get(FixtureId::kHeawood),
                   ctx.get(FixtureId::kHeawood)});
  for (auto& h : cubic_bipartite_products(ctx)) {
    if (h.name == "K33*K33" || h.name == "K33*Heawood") hosts.push_back(std::move(h));
  }
  std::uint64_t cuts = 0;
  std::uint64_t tight = 0;
  for (const auto& h : hosts) {
    const Graph& g = h.graph;
    c.expect(g.is_cubic() && is_bipartite(g) && is_k_connected(g, 3), h.name + " is not 3-connected cubic bipartite");
    const int n = g.order();
    // shores containing vertex 0, both sides of size >= 2
    for (VertexMask rest = 0; rest < (VertexMask{1} << (n - 1)); ++rest) {
      const VertexMask shore = (rest << 1) | 1;
      const int size = std::popcount(shore);
      if (size < 2 || size > n - 2) continue;
      ++cuts;
      std::vector<Edge> delta;
      for (const Edge& e : g.edges()) {
        if (((shore >> e.u) & 1) != ((shore >> e.v) & 1)) delta.push_back(e);
      }
      const bool induced = delta.size() == 3 && is_induced_matching(g, delta);
      bool is_tight_cut = true;
      for_each_perfect_matching(g, [&](std::span<const Edge> m) {
        int crossing = 0;
        for (const Edge& e : m) crossing += ((shore >> e.u) & 1) != ((shore >> e.v) & 1);
        is_tight_cut = crossing == 1;
        return is_tight_cut;
      });
      tight += is_tight_cut;
      if (is_tight_cut != induced) {
        c.expect(false, h.name + ": cut of size " + std::to_string(delta.size()) + " breaks the equivalence");
      }
    }
  }
  c.note() << host_list(hosts) << ": " << cuts << " non-trivial cuts, " << tight << " tight";
}

void principal_cut_induced(const Context& ctx, Check& c) {
  int products = 0;
  for (const auto& h : cubic_bipartite_products(ctx)) {
    for (const Pairing& p : all_pairings()) {
      const auto sp = star(h.first, h.second, 0, 0, p);
      ++products;
      c.expect(principal_cut_is_induced_matching(sp.graph, sp.principal_cut), h.name + ": principal cut not induced");
    }
  }
  c.note() << products << " cubic bipartite star products (all pairings)";
}

void contraction_shape(const Context& ctx, Check& c) {
  int contractions = 0;
  std::vector<NamedHost> hosts = cubic_bipartite_products(ctx);
  const auto family = diwan_family(std::vector<FamilyStep>{{"K33"}, {"Heawood", 0}, {"K33", 5}});
  hosts.push_back({"K33*Heawood*K33", family.graph, std::nullopt, family.graph, family.graph});
  for (const auto& h : hosts) {
    const auto result = decompose(h.graph, ctx.budgets());
    for (const auto& step : result.cut_trace) {
      const auto [first, second] = tight_cut_contractions(step.host, step.cut, ctx.budgets().matchings);
      for (const Graph* piece : {&first.graph, &second.graph}) {
        ++contractions;
        c.expect(piece->is_cubic() && is_bipartite(*piece) && is_k_connected(*piece, 3),
                 h.name + ": contraction not cubic 3-connected bipartite");
      }
    }
  }
  c.note() << contractions << " contractions from " << hosts.size() << " hosts";
}

void contraction_transfer(const Context& ctx, Check& c) {
  int positive = 0;
  int negative = 0;
  for (const auto& h : cubic_bipartite_products(ctx)) {
    const auto [first, second] = tight_cut_contractions(h.graph, *h.principal, ctx.budgets().matchings);
    const bool whole = two_factor_hamiltonian(h.graph, ctx.budgets());
    const bool parts = two_factor_hamiltonian(first.graph, ctx.budgets()) &&
                       two_factor_hamiltonian(second.graph, ctx.budgets());
    c.expect(whole == parts, h.name + ": 2FH does not transfer");
    (whole ? positive : negative)++;
  }
  c.expect(positive > 0 && negative > 0, "both directions need an instance");
  c.note() << positive << " 2FH hosts, " << negative << " non-2FH hosts";
}

void star_round_trip(const Context& ctx, Check& c) {
  const Graph k33 = ctx.get(FixtureId::kK33);
  const Graph heawood = ctx.get(FixtureId::kHeawood);
  int products = 0;
  for (const auto& [a, b] : {std::pair{k33, k33}, std::pair{k33, heawood}, std::pair{heawood, k33}}) {
    for (const Pairing& p : all_pairings()) {
      const auto sp = star(a, b, 0, 0, p);
      const auto result = decompose(sp.graph, ctx.budgets());
      ++products;
      bool match = result.pieces.size() == 2;
      if (match) {
        const Graph& x = result.pieces[0].graph;
        const Graph& y = result.pieces[1].graph;
        match = (are_isomorphic(x, a) && are_isomorphic(y, b)) || (are_isomorphic(x, b) && are_isomorphic(y, a));
      }
      c.expect(match, "pieces of a star product differ from its factors");
    }
  }
  c.note() << products << " products decomposed back into their factors";
}

bool same_pieces(const DecompositionResult& x, const DecompositionResult& y) {
  if (x.pieces.size() != y.pieces.size()) return false;
  std::vector<char> used(y.pieces.size(), 0);
  for (const auto& p : x.pieces) {
    bool found = false;
    for (std::size_t i = 0; i < y.pieces.size() && !found; ++i) {
      if (!used[i] && p.kind == y.pieces[i].kind && are_isomorphic(p.graph, y.pieces[i].graph)) {
        used[i] = 1;
        found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

void decomposition_order(const Context& ctx, Check& c) {
  int hosts = 0;
  std::vector<std::pair<std::string, Graph>> graphs;
  for (FixtureId id : all_fixtures()) {
    const Graph g = ctx.get(id);
    if (is_matching_covered(g)) graphs.emplace_back(std::string(fixture_name(id)), g);
  }
  for (const auto& h : cubic_bipartite_products(ctx)) graphs.emplace_back(h.name, h.graph);
  for (const auto& [name, g] : graphs) {
    const auto up = decompose(g, ctx.budgets(), CutSearchOrder::kAscending);
    const auto down = decompose(g, ctx.budgets(), CutSearchOrder::kDescending);
    ++hosts;
    c.expect(same_pieces(up, down), name + ": piece lists differ between search orders");
  }
  c.note() << hosts << " matching covered hosts, two cut orders each";
}

void pfaffian_pieces(const Context& ctx, Check& c) {
  std::vector<std::pair<std::string, Graph>> graphs;
  for (FixtureId id : {FixtureId::kC4, FixtureId::kK33, FixtureId::kCube, FixtureId::kHeawood, FixtureId::kPrism}) {
    graphs.emplace_back(std::string(fixture_name(id)), ctx.get(id));
  }
  for (const auto& h : cubic_bipartite_products(ctx)) graphs.emplace_back(h.name, h.graph);
  for (const auto& [name, g] : graphs) {
    const bool whole = is_pfaffian(g, ctx.budgets());
    bool pieces = true;
    for (const auto& p : decompose(g, ctx.budgets()).pieces) pieces = pieces && is_pfaffian(p.graph, ctx.budgets());
    c.expect(whole == pieces, name + ": Pfaffian status differs from its pieces");
  }
  c.note() << graphs.size() << " hosts: Pfaffian iff every piece is";
}

void quadrilateral_faces(const Context& ctx, Check& c) {
  const auto braces = planar_braces(ctx);
  for (const auto& b : braces) {
    c.expect(is_brace(b.graph), b.name + " is not a brace");
    const auto faces = trace_faces(b.graph, b.rotation);
    c.expect(faces.planar(), b.name + " rotation is not planar");
    if (!faces.planar()) continue;
    const int quads = count_quadrilateral_faces(b.graph, b.rotation);
    c.expect(quads >= 6, b.name + " has " + std::to_string(quads) + " quadrilateral faces");
    c.expect(2 * b.graph.size() >= 3 * b.graph.order(), b.name + ": 2|E| < 3|V|");
    if (b.name == "Cube") c.expect(quads == 6, "Cube has " + std::to_string(quads) + " quadrilateral faces");
    c.note() << b.name << ":" << quads << " ";
  }
}

void four_cycle_partner(const Context& ctx, Check& c) {
  int cycles = 0;
  for (const auto& b : planar_braces(ctx)) {
    for (const auto& cyc : all_four_cycles(b.graph)) {
      ++cycles;
      c.expect(edge_disjoint_partner(b.graph, cyc).has_value(), b.name + ": 4-cycle without partner");
    }
  }
  c.note() << cycles << " four-cycles in planar braces, each with an edge-disjoint partner";
}

void nonplanar_triple(const Context& ctx, Check& c) {
  const Trisum t = three_cube_trisum(ctx);
  const Graph& g = t.graph;
  c.expect(is_brace(g), "trisum is not a brace");
  c.expect(is_pfaffian(g, ctx.budgets()), "trisum is not Pfaffian");
  // K33 minor: the three private faces against three shared cycle vertices
  std::vector<std::vector<Vertex>> branch(6);
  for (int i = 0; i < 3; ++i) {
    for (Vertex v = 0; v < 8; ++v) {
      if (t.maps[i][v] >= 4) branch[i].push_back(t.maps[i][v]);
    }
  }
  branch[3] = {0};
  branch[4] = {1};
  branch[5] = {2};
  c.expect(is_minor_witness(g, complete_bipartite_33(), branch), "K33 minor witness rejected");
  c.expect(!are_isomorphic(g, fixture(FixtureId::kHeawood)), "trisum is Heawood");
  const auto triple = three_edge_disjoint_four_cycles(g);
  c.expect(triple.has_value(), "no three edge-disjoint 4-cycles");
  c.note() << "three cubes on a shared face: n=" << g.order() << " m=" << g.size();
}

void orientation_search(const Context& ctx, Check& c) {
  for (FixtureId id : {FixtureId::kHeawood, FixtureId::kCube, FixtureId::kC4}) {
    const Graph g = ctx.get(id);
    const auto o = find_pfaffian_orientation(g, ctx.budgets());
    c.expect(o && is_pfaffian_orientation(g, *o, ctx.budgets().cycles),
             std::string(fixture_name(id)) + ": no Pfaffian orientation");
  }
  c.expect(!find_pfaffian_orientation(ctx.get(FixtureId::kK33), ctx.budgets()), "K33 oriented");
  c.note() << "Heawood, Cube, C4 oriented; K33 exhausted all classes";
}

void girth_theorem(const Context& ctx, Check& c) {
  using Branch = GirthTheoremVerdict::Branch;
  std::vector<std::pair<std::string, Graph>> braces;
  for (FixtureId id : all_fixtures()) {
    const Graph g = ctx.get(id);
    if (is_brace(g)) braces.emplace_back(std::string(fixture_name(id)), g);
  }
  braces.emplace_back("cube trisum", three_cube_trisum(ctx).graph);
  bool heawood_seen = false;
  for (const auto& [name, g] : braces) {
    const auto verdict = check_pfaffian_girth_theorem(g, ctx.budgets());
    c.expect(verdict.pass(), name + " is a Pfaffian brace of girth > 4 other than Heawood");
    if (name == "Heawood") {
      heawood_seen = true;
      c.expect(verdict.branch == Branch::kHeawood && girth(g) == 6, "Heawood fixture is not the girth-6 exception");
    }
  }
  c.expect(heawood_seen, "Heawood fixture is not a brace");
  c.note() << braces.size() << " braces checked";
}

void heawood_pfaffian(const Context& ctx, Check& c) {
  const Graph g = ctx.get(FixtureId::kHeawood);
  c.expect(is_brace(g), "Heawood is not a brace");
  c.expect(girth(g) == 6, "Heawood girth is not 6");
  c.expect(has_perfect_matching(g) && is_pfaffian(g, ctx.budgets()), "Heawood is not Pfaffian");
  c.expect(!is_pfaffian(ctx.get(FixtureId::kK33), ctx.budgets()), "K33 is Pfaffian");
  c.note() << "Heawood Pfaffian brace of girth 6; K33 not Pfaffian";
}

void nonbipartite_factors(const Context& ctx, Check& c) {
  const Graph g = ctx.get(FixtureId::kFig2b);
  const Graph k4m = ctx.get(FixtureId::kK4minus);
  c.expect(is_bipartite(g), "Fig2b not bipartite");
  c.expect(!is_bipartite(k4m), "K4minus bipartite");
  c.expect(two_factor_hamiltonian(g, ctx.budgets()) && has_two_factor(g), "Fig2b not 2FH with a 2-factor");
  c.expect(is_star_of(g, k4m, k4m), "Fig2b is not a star product of two K4minus");
  c.note() << "bipartite 2FH star product of two non-bipartite K4minus";
}

void vacuous(const Context& ctx, Check& c) {
  const Graph g = ctx.get(FixtureId::kFig2c);
  const Graph k4m = ctx.get(FixtureId::kK4minus);
  c.expect(!has_two_factor(g), "Fig2c has a 2-factor");
  c.expect(two_factor_hamiltonian(g, ctx.budgets()), "Fig2c not vacuously 2FH");
  c.expect(is_star_of(g, k4m, k4m), "Fig2c is not a star product of two K4minus");
  c.note() << "no 2-factor, hence 2FH";
}

void quasi_tight_necessity(const Context& ctx, Check& c) {
  struct Instance {
    std::string name;
    Graph g;
    EdgeCut cut;
    bool g_label, first, second;
  };
  std::vector<Instance> cases;
  {
    const Graph prism = ctx.get(FixtureId::kPrism);
    cases.push_back({"Prism", prism, cut_around(prism, *principal_shore(FixtureId::kPrism)),
                     ctx.label(FixtureId::kPrism), ctx.label(FixtureId::kK4), ctx.label(FixtureId::kK4)});
  }
  for (const auto& h : cubic_bipartite_products(ctx)) {
    cases.push_back({h.name, h.graph, *h.principal, two_factor_hamiltonian(h.graph, ctx.budgets()),
                     two_factor_hamiltonian(h.first, ctx.budgets()), two_factor_hamiltonian(h.second, ctx.budgets())});
  }
  int checked = 0;
  for (const auto& k : cases) {
    if (!k.g.is_cubic() || !bridges(k.g).empty()) continue;
    ++checked;
    const bool qt = is_quasi_tight(k.g, k.cut, ctx.budgets().matchings);
    c.expect(k.g_label == (k.first && k.second && qt), k.name + ": 2FH differs from factors and quasi-tightness");
  }
  const Graph prism = ctx.get(FixtureId::kPrism);
  c.expect(!is_quasi_tight(prism, cut_around(prism, *principal_shore(FixtureId::kPrism)), ctx.budgets().matchings),
           "Prism principal cut is quasi-tight");
  c.expect(ctx.label(FixtureId::kK4) && two_factor_hamiltonian(ctx.get(FixtureId::kK4), ctx.budgets()),
           "K4 not 2FH");
  c.note() << checked << " bridgeless cubic star products; Prism needs the quasi-tight clause";
}

void bridge_example(const Context& ctx, Check& c) {
  const Graph a = ctx.get(FixtureId::kFig7a);
  const Graph b = ctx.get(FixtureId::kFig7b);
  const Graph k4 = ctx.get(FixtureId::kK4);
  c.expect(a.is_cubic() && b.is_cubic(), "not cubic");
  c.expect(!bridges(a).empty() && !bridges(b).empty(), "missing bridge");
  c.expect(!has_perfect_matching(a) && !has_perfect_matching(b), "has a perfect matching");
  c.expect(!has_two_factor(a) && !has_two_factor(b), "has a 2-factor");
  c.expect(!is_k_connected(a, 2), "Fig7a is 2-connected");
  c.expect(is_star_of(b, a, k4), "Fig7b is not a star product of Fig7a and K4");
  const Graph fig4b = ctx.get(FixtureId::kFig4b);
  c.expect(is_quasi_tight(fig4b, cut_around(fig4b, *principal_shore(FixtureId::kFig4b)), ctx.budgets().matchings),
           "Fig4b principal cut not quasi-tight");
  c.expect(!has_two_factor(ctx.get(FixtureId::kFig4a)), "Fig4a has a 2-factor");
  c.note() << "Fig7a has " << bridges(a).size() << " bridges; principal cut of Fig4b quasi-tight";
}

void proposition_reverse(const Context& ctx, Check& c) {
  const Graph a = ctx.get(FixtureId::kFig5a);
  const Graph b = ctx.get(FixtureId::kFig5b);
  c.expect(is_bipartite(a) && is_bipartite(b), "not bipartite");
  c.expect(two_factor_hamiltonian(a, ctx.budgets()), "Fig5a not 2FH");
  c.expect(!two_factor_hamiltonian(b, ctx.budgets()), "Fig5b 2FH");
  c.expect(is_star_of(b, a, a), "Fig5b is not a star product of two Fig5a");
  c.note() << "factors 2FH, bipartite product not 2FH";
}

void proposition_forward(const Context& ctx, Check& c) {
  const Graph a = ctx.get(FixtureId::kFig6a);
  const Graph b = ctx.get(FixtureId::kFig6b);
  c.expect(is_bipartite(a) && is_bipartite(b), "not bipartite");
  c.expect(!two_factor_hamiltonian(a, ctx.budgets()), "Fig6a 2FH");
  c.expect(two_factor_hamiltonian(b, ctx.budgets()) && has_two_factor(b), "Fig6b not 2FH with a 2-factor");
  c.expect(is_star_of(b, a, a), "Fig6b is not a star product of two Fig6a");
  c.note() << "bipartite product 2FH with a 2-factor, factors not 2FH";
}

void cut_balance(const Context& ctx, Check& c) {
  std::vector<std::pair<std::string, std::pair<Graph, EdgeCut>>> cuts;
  for (FixtureId id : all_fixtures()) {
    const auto shore = principal_shore(id);
    if (!shore) continue;
    const Graph g = ctx.get(id);
    cuts.push_back({std::string(fixture_name(id)), {g, cut_around(g, *shore)}});
  }
  for (const auto& h : cubic_bipartite_products(ctx)) cuts.push_back({h.name, {h.graph, *h.principal}});
  int qualifying = 0;
  for (auto& [name, gc] : cuts) {
    const auto& [g, cut] = gc;
    for (const EdgeCut& side : {cut, cut_around(g, cut.complement())}) {
      try {
        const auto balance = verify_cut_balance(g, side, ctx.budgets().matchings);
        ++qualifying;
        c.expect(balance.holds(), name + ": balance fails");
      } catch (const CutHypothesisError&) {
      }
    }
  }
  c.expect(qualifying > 0, "no qualifying cut");
  c.note() << qualifying << " qualifying cut sides balanced";
}

void star_equivalence(const Context& ctx, Check& c) {
  const std::vector<std::pair<std::string, Graph>> factors{
      {"K33", ctx.get(FixtureId::kK33)}, {"Heawood", ctx.get(FixtureId::kHeawood)}, {"Cube", ctx.get(FixtureId::kCube)}};
  int products = 0;
  for (const auto& [na, a] : factors) {
    for (const auto& [nb, b] : factors) {
      if (na == "Heawood" && nb == "Heawood") continue;
      const bool fa = two_factor_hamiltonian(a, ctx.budgets());
      const bool fb = two_factor_hamiltonian(b, ctx.budgets());
      for (const Pairing& p : all_pairings()) {
        const auto sp = star(a, b, 0, 0, p);
        if (!sp.graph.is_cubic() || !is_bipartite(sp.graph)) continue;
        ++products;
        c.expect(two_factor_hamiltonian(sp.graph, ctx.budgets()) == (fa && fb), na + "*" + nb + ": equivalence fails");
      }
    }
  }
  c.note() << products << " cubic bipartite star products";
}

void cut_pairs_in_two_factors(const Context& ctx, Check& c) {
  int pairs = 0;
  for (const auto& h : cubic_bipartite_products(ctx)) {
    const auto& delta = h.principal->delta;
    std::vector<char> seen(3, 0);
    for_each_two_factor(h.graph, [&](std::span<const Edge> f) {
      std::vector<char> in(3, 0);
      for (int i = 0; i < 3; ++i) in[i] = std::find(f.begin(), f.end(), delta[i]) != f.end();
      for (int i = 0; i < 3; ++i) {
        if (in[i] && in[(i + 1) % 3]) seen[i] = 1;
      }
      return !(seen[0] && seen[1] && seen[2]);
    });
    for (int i = 0; i < 3; ++i) {
      ++pairs;
      c.expect(seen[i], h.name + ": a pair of cut edges never shares a 2-factor");
    }
  }
  c.note() << pairs << " cut-edge pairs found together in 2-factors";
}

void family(const Context& ctx, Check& c) {
  const std::vector<std::vector<FamilyStep>> recipes{
      {{"K33"}, {"K33", 0}},
      {{"K33"}, {"Heawood", 0}},
      {{"K33"}, {"K33", 0}, {"Heawood", 7}},
      {{"Heawood"}, {"K33", 3, {2, 1, 0}}, {"K33", 12}},
  };
  for (const auto& r : recipes) {
    const auto result = diwan_family(r);
    const Graph& g = result.graph;
    c.expect(g.is_cubic() && is_bipartite(g), "family member not cubic bipartite");
    c.expect(two_factor_hamiltonian(g, ctx.budgets()), "family member not 2FH");
    for (const auto& cut : result.cuts) {
      c.expect(cut.delta.size() == 3 && is_tight(g, cut, ctx.budgets().matchings), "recorded cut not tight");
    }
    c.note() << g.order() << " ";
  }
}

void extendability(const Context& ctx, Check& c) {
  int braces = 0;
  for (FixtureId id : all_fixtures()) {
    const Graph g = ctx.get(id);
    if (g.order() < 6 || !is_brace(g)) continue;
    ++braces;
    c.expect(is_k_extendable(g, 2) && is_k_extendable(g, 1) && is_k_connected(g, 3),
             std::string(fixture_name(id)) + ": 2-extendable without 1-extendability or 3-connectivity");
  }
  c.note() << braces << " brace fixtures";
}

struct EntrySpec {
  const char* name;
  const char* claim;
  void (*run)(const Context&, Check&);
};

const EntrySpec kEntries[] = {
    {"fixture-sanity", "fixture orders, sizes and girths", fixture_sanity},
    {"two-factor-labels", "computed 2-factor Hamiltonicity matches each fixture's label", two_factor_labels},
    {"two-factor-base-cases", "K33 and Heawood are 2FH, Cube and Prism are not", two_factor_base_cases},
    {"konig-partition", "regular bipartite graphs split into perfect matchings", konig},
    {"petersen-perfect-matching", "cubic bridgeless graphs have perfect matchings", petersen},
    {"cubic-matching-covered-iff-2-connected", "a cubic graph is matching covered iff 2-connected",
     cubic_matching_covered},
    {"tight-cut-iff-induced-3-matching", "in 3-connected cubic bipartite graphs a non-trivial cut is tight iff it is an "
     "induced 3-edge matching", tight_iff_induced},
    {"principal-cut-induced-matching", "the principal cut of a cubic bipartite star product is an induced matching",
     principal_cut_induced},
    {"contraction-shape", "tight cut contractions stay cubic, 3-connected and bipartite", contraction_shape},
    {"contraction-2fh-transfer", "a host is 2FH iff both tight cut contractions are", contraction_transfer},
    {"star-product-round-trip", "decomposing a star product of braces returns the factors", star_round_trip},
    {"decomposition-order-independent", "the list of bricks and braces does not depend on cut choice",
     decomposition_order},
    {"pfaffian-iff-pieces-pfaffian", "a matching covered graph is Pfaffian iff its bricks and braces are",
     pfaffian_pieces},
    {"planar-quadrilateral-faces", "planar braces other than C4 have at least six quadrilateral faces",
     quadrilateral_faces},
    {"planar-four-cycle-partner", "every 4-cycle of a planar brace has an edge-disjoint partner", four_cycle_partner},
    {"nonplanar-pfaffian-three-four-cycles", "a non-planar Pfaffian brace has three edge-disjoint 4-cycles",
     nonplanar_triple},
    {"pfaffian-orientation-search", "Heawood, Cube, C4 are Pfaffian and K33 is not", orientation_search},
    {"pfaffian-heawood-girth", "Heawood is a Pfaffian brace of girth 6", heawood_pfaffian},
    {"pfaffian-brace-girth", "Pfaffian braces other than Heawood have girth 4", girth_theorem},
    {"star-product-bipartite-from-nonbipartite", "two non-bipartite graphs can have a bipartite 2FH star product",
     nonbipartite_factors},
    {"vacuous-two-factor-hamiltonian", "a graph without 2-factors is 2FH", vacuous},
    {"bridgeless-star-product-quasi-tight", "a bridgeless cubic star product is 2FH iff both factors are and the "
     "principal cut is quasi-tight", quasi_tight_necessity},
    {"bridged-star-product", "the bridged star product has no perfect matching, so its principal cut is quasi-tight",
     bridge_example},
    {"star-proposition-reverse-fails", "2FH factors can give a bipartite star product that is not 2FH",
     proposition_reverse},
    {"star-proposition-forward-fails", "a bipartite 2FH star product can have factors that are not 2FH",
     proposition_forward},
    {"cut-balance", "qualifying cuts satisfy the colour-class balance equations", cut_balance},
    {"cubic-bipartite-star-2fh", "a cubic bipartite star product is 2FH iff both factors are", star_equivalence},
    {"star-product-cut-pairs", "every pair of principal cut edges lies in a common 2-factor", cut_pairs_in_two_factors},
    {"family-two-factor-hamiltonian", "iterated star products of K33 and Heawood are cubic bipartite 2FH", family},
    {"extendability-implications", "2-extendable braces are 1-extendable and 3-connected", extendability},
};

}  // namespace

std::vector<SuiteEntry> run_lemma_suite(const SuiteInputs& inputs) {
  const Context ctx{inputs};
  std::vector<SuiteEntry> out;
  for (const auto& spec : kEntries) {
    SuiteEntry entry{spec.name, spec.claim, SuiteOutcome::kInconclusive, {}};
    Check check;
    try {
      spec.run(ctx, check);
      entry.outcome = check.ok() ? SuiteOutcome::kPass : SuiteOutcome::kFail;
      entry.evidence = check.evidence();
    } catch (const BudgetExceeded& e) {
      entry.outcome = SuiteOutcome::kInconclusive;
      entry.evidence = e.what();
    } catch (const std::exception& e) {
      entry.outcome = SuiteOutcome::kFail;
      entry.evidence = std::string("error: ") + e.what();
    }
    out.push_back(std::move(entry));
  }
  return out;
}

}  // namespace bracekit
