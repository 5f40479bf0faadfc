// Acceptance run: one line per criterion, PASS or FAIL, with wall time
// against a fixed limit. `acceptance 6 7` runs only the listed criteria.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "bracekit/constructions.hpp"
#include "bracekit/cuts.hpp"
#include "bracekit/errors.hpp"
#include "bracekit/factors.hpp"
#include "bracekit/fixtures.hpp"
#include "bracekit/graph6.hpp"
#include "bracekit/isomorphism.hpp"
#include "bracekit/matching.hpp"
#include "bracekit/pfaffian.hpp"
#include "bracekit/planar.hpp"
#include "bracekit/scan.hpp"
#include "bracekit/suite.hpp"
#include "corpus.hpp"
#include "oracles.hpp"

using namespace bracekit;

namespace {

struct Outcome {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << "FAILED: ";
      note << what << "; ";
      ok = false;
    }
  }
};

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

void expect_suite(Outcome& out, const std::vector<std::string>& names) {
  const auto entries = run_lemma_suite();
  for (const auto& name : names) {
    bool found = false;
    for (const auto& e : entries) {
      if (e.name != name) continue;
      found = true;
      out.expect(e.outcome == SuiteOutcome::kPass, name + " " + std::string(to_string(e.outcome)) + " " + e.evidence);
    }
    out.expect(found, "missing suite entry " + name);
  }
  out.note << names.size() << " suite entries; ";
}

std::vector<std::pair<int, int>> arcs(const Graph& g, const Orientation& o) {
  std::vector<std::pair<int, int>> out;
  for (int e = 0; e < g.size(); ++e) out.emplace_back(o.tail(g, e), o.head(g, e));
  return out;
}

bool pfaffian_by_determinant(const Graph& g, const Orientation& o) {
  return oracle::pfaffian_by_determinant(g.order(), arcs(g, o), oracle::perfect_matchings(oracle::Plain(g)).size());
}

std::string joined(const std::vector<std::string>& lines) {
  std::string s;
  for (const auto& l : lines) s += l + '\n';
  return s;
}

// 1
void fixture_sanity(Outcome& out) {
  struct Want {
    FixtureId id;
    int n, m, girth;
  };
  for (const Want& w : {Want{FixtureId::kK33, 6, 9, 4}, Want{FixtureId::kHeawood, 14, 21, 6},
                        Want{FixtureId::kCube, 8, 12, 4}}) {
    const Graph g = fixture(w.id);
    const std::string name(fixture_name(w.id));
    out.expect(g.order() == w.n && g.size() == w.m, name + " order/size");
    out.expect(oracle::girth(oracle::Plain(g)) == w.girth, name + " girth by oracle");
    out.expect(girth(g) == w.girth, name + " girth");
  }
}

// 2
void two_factor_base_cases(Outcome& out) {
  for (FixtureId id : {FixtureId::kK33, FixtureId::kHeawood}) {
    const auto v = is_two_factor_hamiltonian(fixture(id));
    out.expect(v.two_factor_hamiltonian && v.has_two_factor, std::string(fixture_name(id)) + " 2FH");
  }
  for (FixtureId id : {FixtureId::kCube, FixtureId::kPrism}) {
    const Graph g = fixture(id);
    const auto v = is_two_factor_hamiltonian(g);
    const std::string name(fixture_name(id));
    out.expect(!v.two_factor_hamiltonian, name + " not 2FH");
    if (!v.witness) {
      out.expect(false, name + " witness");
      continue;
    }
    std::vector<int> ids;
    for (const auto& e : v.witness->edges) ids.push_back(g.edge_index(e));
    const int cycles = oracle::cycle_count(oracle::Plain(g), ids);
    out.expect(cycles >= 2 && static_cast<int>(ids.size()) == g.order(), name + " witness is a disconnected 2-factor");
  }
  const Graph h = fixture(FixtureId::kHeawood);
  const oracle::Plain p(h);
  const auto want = oracle::perfect_matchings(p);
  const auto got = enumerate_perfect_matchings(h);
  out.expect(want.size() == 24 && got.size() == want.size(), "Heawood perfect matchings");
  int hamiltonian = 0;
  for (const auto& m : got) {
    std::vector<int> rest;
    for (int e = 0; e < h.size(); ++e) {
      if (!std::binary_search(m.edges.begin(), m.edges.end(), h.edges()[e])) rest.push_back(e);
    }
    hamiltonian += rest.size() == 14 && oracle::cycle_count(p, rest) == 1;
  }
  out.expect(hamiltonian == 24, "Heawood matching complements are 14-cycles");
  out.note << "Heawood: " << got.size() << " matchings, " << hamiltonian << " Hamiltonian complements; ";
}

// 3
void decomposition_suite(Outcome& out) {
  // independent look at one product: every odd shore, tight by brute force
  // iff its cut is a non-trivial induced 3-matching
  const Graph k33 = fixture(FixtureId::kK33);
  const Graph g = star_product({k33, 0, k33, 0}).graph;
  const oracle::Plain p(g);
  const auto pms = oracle::perfect_matchings(p);
  int tight = 0;
  int disagreements = 0;
  for (std::uint32_t shore = 1; shore + 1 < (1u << g.order()); ++shore) {
    const int size = std::popcount(shore);
    if (size % 2 == 0 || size == 1 || size == g.order() - 1 || (shore & 1) == 0) continue;
    std::vector<Vertex> x;
    for (int v = 0; v < g.order(); ++v) {
      if ((shore >> v) & 1) x.push_back(v);
    }
    const EdgeCut cut = cut_around(g, x);
    const bool induced = cut.delta.size() == 3 && is_induced_matching(g, cut.delta);
    const bool is_tight = oracle::cut_is_tight(p, shore, pms);
    tight += is_tight;
    disagreements += induced != is_tight;
  }
  out.expect(disagreements == 0 && tight > 0, "K33*K33 tight cuts vs induced 3-matchings");
  out.note << "K33*K33: " << tight << " non-trivial tight cuts; ";
  expect_suite(out, {"tight-cut-iff-induced-3-matching", "contraction-shape", "contraction-2fh-transfer",
                     "cubic-bipartite-star-2fh", "star-product-round-trip"});
}

// 4
void planar_suite(Outcome& out) {
  const Graph cube = fixture(FixtureId::kCube);
  const auto r = fixture_rotation(FixtureId::kCube);
  out.expect(r && count_quadrilateral_faces(cube, *r) == 6, "Cube has 6 quadrilateral faces");
  int cycles = 0;
  for (const auto& q : oracle::four_cycles(oracle::Plain(cube))) {
    ++cycles;
    const FourCycle c{q[0], q[1], q[2], q[3]};
    const auto partner = edge_disjoint_partner(cube, c);
    bool disjoint = partner && is_four_cycle(cube, *partner);
    if (partner) {
      for (const auto& e : four_cycle_edges(c)) {
        for (const auto& f : four_cycle_edges(*partner)) disjoint = disjoint && !(e == f);
      }
    }
    out.expect(disjoint, "Cube 4-cycle partner");
  }
  out.note << "Cube: " << cycles << " 4-cycles; ";
  expect_suite(out, {"planar-quadrilateral-faces", "planar-four-cycle-partner", "nonplanar-pfaffian-three-four-cycles"});
}

// 5
void pfaffian_suite(Outcome& out) {
  const PfaffianSearch routes[] = {PfaffianSearch::kClassEnumeration, PfaffianSearch::kCycleSystem,
                                   PfaffianSearch::kMatchingSystem};
  for (FixtureId id : {FixtureId::kHeawood, FixtureId::kCube, FixtureId::kC4}) {
    const Graph g = fixture(id);
    for (auto route : routes) {
      const auto o = find_pfaffian_orientation(g, {}, route);
      out.expect(o && pfaffian_by_determinant(g, *o), std::string(fixture_name(id)) + " Pfaffian orientation");
    }
  }
  const Graph k33 = fixture(FixtureId::kK33);
  for (auto route : routes) out.expect(!find_pfaffian_orientation(k33, {}, route), "K33 has no Pfaffian orientation");
  int compared = 0;
  for (FixtureId id : all_fixtures()) {
    const Graph g = fixture(id);
    if (g.order() > 10 || !has_perfect_matching(g)) continue;
    ++compared;
    std::set<std::vector<int>> got;
    for (const auto& c : nice_cycles(g)) got.insert(c.cycle);
    out.expect(got == oracle::alternating_cycles(oracle::Plain(g)), std::string(fixture_name(id)) + " nice cycles");
  }
  out.note << compared << " fixtures cross-checked for nice cycles; ";
}

// 6
void pfaffian_brace_corpus(Outcome& out) {
  ScanOptions options;
  options.filters = parse_predicates("bipartite,brace,pfaffian");
  options.checks = parse_predicates("girth>=6");
  options.workers = workers();
  const Graph heawood = fixture(FixtureId::kHeawood);
  std::size_t graphs = 0, pfaffian_braces = 0, survivors = 0, inconclusive = 0, cubic_inconclusive = 0;
  for (int n = 4; n <= 14; n += 2) {
    // braces on six or more vertices are 3-connected, so minimum degree 3
    const auto lines = test_corpus::geng_lines({"-cbq", n == 4 ? "-d2" : "-d3", std::to_string(n)});
    std::istringstream in(joined(lines));
    const ScanAggregate agg = scan_stream(in, options, [&](const ScanRecord& r) {
      if (r.budget_exceeded) {
        ++inconclusive;
        const Graph g = graph6_decode(r.graph6);
        cubic_inconclusive += g.is_cubic();
        out.note << "budget exclusion " << r.graph6 << "; ";
      }
      if (!r.passed_filters) return;
      ++pfaffian_braces;
      const Graph g = graph6_decode(r.graph6);
      const int gi = oracle::girth(oracle::Plain(g));
      if (r.survivor()) {
        ++survivors;
        out.expect(are_isomorphic(g, heawood) && gi == 6, "survivor " + r.graph6 + " is Heawood");
      } else {
        out.expect(gi == 4, "Pfaffian brace " + r.graph6 + " has girth 4");
      }
    });
    graphs += agg.graphs;
  }
  out.expect(survivors == 1, "exactly one survivor");
  out.expect(cubic_inconclusive == 0, "no inconclusive cubic graphs");
  out.note << graphs << " graphs, " << pfaffian_braces << " Pfaffian braces, " << survivors << " survivor, "
           << inconclusive << " budget exclusions; ";
}

// 7
void cubic_corpus(Outcome& out) {
  std::vector<std::string> lines;
  for (int n = 6; n <= 14; n += 2) {
    for (auto& l : test_corpus::geng_lines({"-cbq", "-d3", "-D3", std::to_string(n)})) lines.push_back(l);
  }
  std::ifstream shipped(std::string(BRACEKIT_DATA_DIR) + "/cubic_bipartite_n6-14.g6");
  std::vector<std::string> stored;
  for (std::string l; std::getline(shipped, l);) {
    if (!l.empty()) stored.push_back(l);
  }
  out.expect(stored == lines, "shipped cubic corpus matches geng");
  ScanOptions options;
  options.filters = parse_predicates("cubic,bipartite,brace");
  options.checks = parse_predicates("2fh");
  options.workers = workers();
  std::istringstream in(joined(lines));
  const ScanReport report = scan_corpus(in, options);
  out.expect(report.aggregate.budget_exceeded == 0, "no inconclusive verdicts");
  std::vector<Graph> survivors;
  for (std::size_t i : report.aggregate.survivors) survivors.push_back(graph6_decode(report.records[i].graph6));
  const Graph k33 = fixture(FixtureId::kK33);
  const Graph heawood = fixture(FixtureId::kHeawood);
  out.expect(survivors.size() == 2, "two survivors");
  int k33_hits = 0, heawood_hits = 0;
  for (const auto& g : survivors) {
    k33_hits += are_isomorphic(g, k33);
    heawood_hits += are_isomorphic(g, heawood);
    out.expect(oracle::two_factor_hamiltonian(oracle::Plain(g)), "survivor 2FH by oracle");
  }
  out.expect(k33_hits == 1 && heawood_hits == 1, "survivors are K33 and Heawood");
  out.note << lines.size() << " cubic bipartite graphs, " << report.aggregate.passed_filters << " braces, "
           << survivors.size() << " survivors; ";
}

// 8
void appendix_suite(Outcome& out) {
  const oracle::Plain fig2b(fixture(FixtureId::kFig2b));
  out.expect(oracle::bipartite(fig2b) && oracle::two_factor_hamiltonian(fig2b), "Fig2b bipartite and 2FH");
  for (FixtureId id : {FixtureId::kFig2c, FixtureId::kFig4a}) {
    const Graph g = fixture(id);
    out.expect(oracle::two_factors(oracle::Plain(g)).empty() && !has_two_factor(g),
               std::string(fixture_name(id)) + " has no 2-factor");
    out.expect(is_two_factor_hamiltonian(g).two_factor_hamiltonian, std::string(fixture_name(id)) + " vacuously 2FH");
  }
  const Graph fig7a = fixture(FixtureId::kFig7a);
  const oracle::Plain p7(fig7a);
  out.expect(!oracle::bridges(p7).empty() && oracle::perfect_matchings(p7).empty() && !has_perfect_matching(fig7a),
             "Fig7a has a bridge and no perfect matching");
  expect_suite(out, {"two-factor-labels", "star-product-bipartite-from-nonbipartite", "vacuous-two-factor-hamiltonian",
                     "bridgeless-star-product-quasi-tight", "bridged-star-product", "star-proposition-reverse-fails",
                     "star-proposition-forward-fails", "cut-balance", "cubic-bipartite-star-2fh"});
}

// 9
void classical(Outcome& out) {
  for (FixtureId id : all_fixtures()) {
    const Graph g = fixture(id);
    if (!g.is_cubic()) continue;
    const oracle::Plain p(g);
    const std::string name(fixture_name(id));
    if (oracle::bipartite(p)) {
      const auto parts = konig_partition(g);
      std::vector<Edge> all;
      bool perfect = parts.size() == 3;
      for (const auto& m : parts) {
        perfect = perfect && m.is_perfect() && is_matching(g, m.edges);
        all.insert(all.end(), m.edges.begin(), m.edges.end());
      }
      std::sort(all.begin(), all.end());
      out.expect(perfect && all == g.edges(), name + " splits into 3 perfect matchings");
    }
    if (oracle::bridges(p).empty()) {
      out.expect(!oracle::perfect_matchings(p).empty() && has_perfect_matching(g), name + " has a perfect matching");
    }
  }
  std::mt19937_64 rng(2024);
  int mismatches = 0, covered = 0;
  for (int i = 0; i < 500; ++i) {
    Graph g = i % 5 == 4 ? oracle::bridged_cubic(4 + 2 * static_cast<int>(rng() % 3), 4 + 2 * static_cast<int>(rng() % 2), rng)
                         : oracle::random_cubic(4 + 2 * static_cast<int>(rng() % 7), rng);
    const oracle::Plain p(g);
    const bool want = oracle::k_connected(p, 2);
    const bool got = is_matching_covered(g);
    mismatches += got != want || oracle::matching_covered(p) != want;
    covered += got;
  }
  out.expect(mismatches == 0, "matching covered iff 2-connected on random cubic graphs");
  out.note << "500 random cubic graphs, " << covered << " matching covered, " << mismatches << " mismatches; ";
}

// 10
void infrastructure(Outcome& out) {
  std::mt19937_64 rng(77);
  int failures = 0;
  for (int i = 0; i < 1000; ++i) {
    const int n = 1 + static_cast<int>(rng() % 80);
    const Graph g = oracle::random_graph(n, 0.05 + 0.9 * static_cast<double>(rng() % 100) / 100.0, rng);
    const std::string text = graph6_encode(g);
    const Graph back = graph6_decode(text);
    failures += !(back == g) || graph6_encode(back) != text;
  }
  out.expect(failures == 0, "graph6 round trip");
  std::string input;
  for (FixtureId id : all_fixtures()) input += graph6_encode(fixture(id)) + "\n";
  input += "\n" + joined(test_corpus::geng_lines({"-cbq", "-d2", "8"}));
  auto render = [&](unsigned w, ReportFormat format) {
    ScanOptions options;
    options.filters = parse_predicates("bipartite");
    options.checks = parse_predicates("brace,2fh,pfaffian,girth>=6");
    options.workers = w;
    options.batch = w == 1 ? 1024 : 5;
    std::istringstream in(input);
    std::ostringstream s;
    emit_report(s, scan_corpus(in, options), format);
    return s.str();
  };
  for (auto format : {ReportFormat::kJson, ReportFormat::kCsv}) {
    out.expect(render(1, format) == render(4, format), "report bytes independent of workers");
  }
  out.note << "1000 graph6 round trips; ";
}

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;
  void (*run)(Outcome&);
};

const Criterion kCriteria[] = {
    {1, "fixture sanity", 1, fixture_sanity},
    {2, "2-factor Hamiltonian base cases", 5, two_factor_base_cases},
    {3, "tight cuts, contractions and star products", 60, decomposition_suite},
    {4, "quadrilateral faces and 4-cycles", 30, planar_suite},
    {5, "Pfaffian orientations and nice cycles", 120, pfaffian_suite},
    {6, "Pfaffian braces up to 14 vertices", 900, pfaffian_brace_corpus},
    {7, "cubic bipartite 2FH braces up to 14 vertices", 300, cubic_corpus},
    {8, "small counterexamples and star product cuts", 60, appendix_suite},
    {9, "classical theorems on cubic graphs", 120, classical},
    {10, "graph6 round trip and report determinism", 30, infrastructure},
};

}  // namespace

int main(int argc, char** argv) {
  std::set<int> only;
  for (int i = 1; i < argc; ++i) only.insert(std::atoi(argv[i]));
  int failed = 0;
  for (const auto& c : kCriteria) {
    if (!only.empty() && !only.count(c.id)) continue;
    Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(out);
    } catch (const std::exception& e) {
      out.expect(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > c.limit_seconds) out.expect(false, "over time limit");
    failed += !out.ok;
    std::printf("criterion %2d %s  %-46s %8.2fs / %4.0fs  %s\n", c.id, out.ok ? "PASS" : "FAIL", c.title, seconds,
                c.limit_seconds, out.note.str().c_str());
    std::fflush(stdout);
  }
  return failed == 0 ? 0 : 1;
}
