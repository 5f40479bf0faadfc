// bracekit command-line tool.
//
// Exit codes: 0 success / all true, 1 some property false or suite entry
// failed, 2 a budget was exceeded somewhere (verdict inconclusive), 3 usage
// or input error.

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "bracekit/budgets.hpp"
#include "bracekit/constructions.hpp"
#include "bracekit/cuts.hpp"
#include "bracekit/errors.hpp"
#include "bracekit/fixtures.hpp"
#include "bracekit/graph6.hpp"
#include "bracekit/planar.hpp"
#include "bracekit/scan.hpp"
#include "bracekit/suite.hpp"

namespace fs = std::filesystem;
using namespace bracekit;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFalse = 1;
constexpr int kExitBudget = 2;
constexpr int kExitInput = 3;

struct Named {
  std::string label;
  Graph graph;
};

// A fixture name, a graph6 file ("-" for stdin), or a literal graph6 string.
std::vector<Named> load_graphs(const std::string& source) {
  try {
    return {{source, fixture(source)}};
  } catch (const UnknownFixture&) {
  }
  auto read = [](std::istream& in) {
    std::vector<Named> out;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      try {
        out.push_back({line, graph6_decode(line)});
      } catch (const ParseError& e) {
        throw ParseError(line_no, e.what());
      }
    }
    return out;
  };
  if (source == "-") return read(std::cin);
  if (fs::exists(source)) {
    std::ifstream in(source);
    if (!in) throw Error("cannot open " + source);
    return read(in);
  }
  return {{source, graph6_decode(source)}};
}

Graph load_one(const std::string& source) {
  auto graphs = load_graphs(source);
  if (graphs.size() != 1) throw Error(source + " holds " + std::to_string(graphs.size()) + " graphs, expected one");
  return graphs.front().graph;
}

Pairing parse_pairing(const std::string& text) {
  Pairing p{};
  std::istringstream in(text);
  std::string part;
  int i = 0;
  while (std::getline(in, part, ',')) {
    if (i == 3) throw Error("pairing needs three entries");
    p[i++] = std::stoi(part);
  }
  if (i != 3) throw Error("pairing needs three entries");
  return p;
}

std::vector<int> parse_ints(const std::string& text) {
  std::vector<int> out;
  std::istringstream in(text);
  std::string part;
  while (std::getline(in, part, ',')) {
    if (!part.empty()) out.push_back(std::stoi(part));
  }
  return out;
}

std::string shore_text(const std::vector<Vertex>& shore) {
  std::string s;
  for (Vertex v : shore) s += (s.empty() ? "" : ",") + std::to_string(v);
  return s;
}

int run_check(const std::string& source, const std::vector<std::string>& props, const Budgets& budgets) {
  ScanOptions options;
  options.budgets = budgets;
  for (const auto& p : props) {
    for (const auto& q : parse_predicates(p)) options.checks.push_back(q);
  }
  if (options.checks.empty()) throw Error("check needs at least one --prop");
  bool any_false = false;
  bool any_budget = false;
  for (const auto& [label, g] : load_graphs(source)) {
    const ScanRecord r = evaluate_graph(g, options);
    std::cout << label;
    for (const auto& o : r.checks) {
      std::cout << ' ' << o.predicate << '=' << to_string(o.verdict);
      any_false = any_false || o.verdict == Verdict::kFalse;
      any_budget = any_budget || o.verdict == Verdict::kInconclusive;
    }
    std::cout << '\n';
    any_budget = any_budget || r.budget_exceeded;
  }
  if (any_false) return kExitFalse;
  return any_budget ? kExitBudget : kExitOk;
}

int run_decompose(const std::string& source, bool descending, const Budgets& budgets) {
  const Graph g = load_one(source);
  const auto result = decompose(g, budgets, descending ? CutSearchOrder::kDescending : CutSearchOrder::kAscending);
  for (const auto& step : result.cut_trace) {
    std::cout << "cut n=" << step.host.order() << " shore=" << shore_text(step.cut.shore) << '\n';
  }
  for (const auto& p : result.pieces) {
    std::cout << (p.kind == PieceKind::kBrace ? "brace" : "brick") << ' ' << p.graph.order() << ' ' << p.graph.size()
              << ' ' << graph6_encode(p.graph) << '\n';
  }
  return kExitOk;
}

int run_star(const std::string& a, const std::string& b, int v1, int v2, const std::string& pairing) {
  const auto sp = star_product({load_one(a), v1, load_one(b), v2, parse_pairing(pairing)});
  std::cout << graph6_encode(sp.graph) << '\n';
  std::cout << "# principal shore " << shore_text(sp.principal_cut.shore) << '\n';
  return kExitOk;
}

int run_trisum(const std::vector<std::string>& parts, const std::vector<std::string>& cycles,
               const std::string& removed) {
  if (parts.size() != 3) throw Error("trisum takes three graphs");
  if (cycles.size() != 1 && cycles.size() != 3) throw Error("give one --cycle for all parts or one per part");
  TrisumSpec spec{{load_one(parts[0]), load_one(parts[1]), load_one(parts[2])}, {}, parse_ints(removed)};
  for (int i = 0; i < 3; ++i) {
    const auto c = parse_ints(cycles[cycles.size() == 1 ? 0 : i]);
    if (c.size() != 4) throw Error("a cycle lists four vertices");
    spec.cycle[i] = {c[0], c[1], c[2], c[3]};
  }
  std::cout << graph6_encode(trisum(spec).graph) << '\n';
  return kExitOk;
}

int run_family(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open " + path);
  const auto recipe = parse_recipe(in);
  const auto result = diwan_family(recipe);
  std::cout << graph6_encode(result.graph) << '\n';
  for (const auto& cut : result.cuts) std::cout << "# tight cut shore " << shore_text(cut.shore) << '\n';
  return kExitOk;
}

int run_scan(const std::string& input, const std::vector<std::string>& filters, const std::vector<std::string>& checks,
             const std::string& report, const std::string& format, unsigned workers, const Budgets& budgets) {
  ScanOptions options;
  options.budgets = budgets;
  options.workers = std::max(1u, workers);
  for (const auto& f : filters) {
    for (const auto& p : parse_predicates(f)) options.filters.push_back(p);
  }
  for (const auto& c : checks) {
    for (const auto& p : parse_predicates(c)) options.checks.push_back(p);
  }
  ScanReport r;
  if (input == "-") {
    r = scan_corpus(std::cin, options);
  } else {
    std::ifstream in(input);
    if (!in) throw Error("cannot open " + input);
    r = scan_corpus(in, options);
  }
  const ReportFormat fmt = format == "csv" ? ReportFormat::kCsv : ReportFormat::kJson;
  if (report.empty() || report == "-") {
    emit_report(std::cout, r, fmt);
  } else {
    std::ofstream out(report);
    if (!out) throw Error("cannot write " + report);
    emit_report(out, r, fmt);
  }
  std::cerr << "graphs " << r.aggregate.graphs << ", passed filters " << r.aggregate.passed_filters << ", survivors "
            << r.aggregate.survivors.size() << ", budget exceeded " << r.aggregate.budget_exceeded << '\n';
  return r.aggregate.budget_exceeded > 0 ? kExitBudget : kExitOk;
}

int run_suite(const std::vector<std::string>& labels, const std::vector<std::string>& overrides,
              const Budgets& budgets) {
  SuiteInputs inputs;
  inputs.budgets = budgets;
  for (const auto& l : labels) {
    const auto eq = l.find('=');
    if (eq == std::string::npos) throw Error("--label expects NAME=yes|no");
    const std::string value = l.substr(eq + 1);
    inputs.two_factor_labels[l.substr(0, eq)] = value == "yes" || value == "true" || value == "1";
  }
  for (const auto& o : overrides) {
    const auto eq = o.find('=');
    if (eq == std::string::npos) throw Error("--fixture expects NAME=GRAPH6");
    const std::string name = o.substr(0, eq);
    fixture_id(name);
    inputs.fixtures.emplace(name, graph6_decode(o.substr(eq + 1)));
  }
  bool failed = false;
  bool inconclusive = false;
  for (const auto& e : run_lemma_suite(inputs)) {
    std::cout << to_string(e.outcome) << ' ' << e.name << ": " << e.claim << " [" << e.evidence << "]\n";
    failed = failed || e.outcome == SuiteOutcome::kFail;
    inconclusive = inconclusive || e.outcome == SuiteOutcome::kInconclusive;
  }
  if (failed) return kExitFalse;
  return inconclusive ? kExitBudget : kExitOk;
}

int run_fixtures(const std::string& dir) {
  fs::create_directories(dir);
  std::ofstream graphs(fs::path(dir) / "fixtures.g6");
  std::ofstream index(fs::path(dir) / "fixtures.tsv");
  write_fixture_bundle(graphs, index);
  for (FixtureId id : all_fixtures()) {
    if (const auto r = fixture_rotation(id)) {
      std::ofstream out(fs::path(dir) / (std::string(fixture_name(id)) + ".rot"));
      out << "# " << fixture_name(id) << " planar rotation\n";
      write_rotation_system(out, *r);
    }
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"bracekit: perfect matchings, 2-factors, tight cuts and Pfaffian orientations"};
  app.require_subcommand(1);

  std::string source;
  std::vector<std::string> props;
  auto* check = app.add_subcommand("check", "evaluate properties of a fixture or graph6 file");
  check->add_option("source", source, "fixture name, graph6 file, '-' or a graph6 string")->required();
  check->add_option("--prop", props, "property: cubic, bipartite, brace, girth>=K, 2fh, pfaffian, non-pfaffian, "
                                     "v2mod4, c4c (repeatable or comma separated)")
      ->required();

  bool descending = false;
  auto* dec = app.add_subcommand("decompose", "tight cut decomposition into bricks and braces");
  dec->add_option("source", source, "fixture name, graph6 file or graph6 string")->required();
  dec->add_flag("--descending", descending, "try cuts in descending order");

  std::string first, second, pairing = "0,1,2";
  int v1 = 0, v2 = 0;
  auto* star = app.add_subcommand("star", "star product of two graphs");
  star->add_option("first", first)->required();
  star->add_option("second", second)->required();
  star->add_option("--v1", v1, "deleted vertex of the first graph");
  star->add_option("--v2", v2, "deleted vertex of the second graph");
  star->add_option("--pairing", pairing, "sorted N(v1)[i] joins sorted N(v2)[p[i]], e.g. 0,2,1");

  std::vector<std::string> parts, cycles;
  std::string removed;
  auto* tri = app.add_subcommand("trisum", "glue three bipartite graphs along a common 4-cycle");
  tri->add_option("parts", parts, "three graphs")->expected(3)->required();
  tri->add_option("--cycle", cycles, "a,b,c,d in each part (once for all, or three times)")->required();
  tri->add_option("--remove", removed, "indices i of cycle edges (i, i+1) to delete");

  std::string recipe;
  auto* fam = app.add_subcommand("family", "iterated star products from a recipe file");
  fam->add_option("recipe", recipe)->required();

  std::string input = "-", report, format = "json";
  std::vector<std::string> filters, checks;
  unsigned workers = 1;
  auto* scan = app.add_subcommand("scan", "scan a graph6 corpus");
  scan->add_option("input", input, "graph6 file, '-' for stdin");
  scan->add_option("--filter", filters, "filter predicates, evaluated left to right");
  scan->add_option("--check", checks, "checks on graphs passing every filter");
  scan->add_option("--report", report, "report path, '-' for stdout");
  scan->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  scan->add_option("--workers", workers, "worker threads");

  std::vector<std::string> labels, overrides;
  auto* suite = app.add_subcommand("lemma-suite", "verify every statement on the bundled fixtures");
  suite->alias("paper-suite");
  suite->add_option("--label", labels, "override a 2FH label, NAME=yes|no");
  suite->add_option("--fixture", overrides, "replace a fixture, NAME=GRAPH6");

  std::string out_dir = "fixtures";
  auto* fix = app.add_subcommand("fixtures", "write the fixture bundle and rotation files");
  fix->add_option("--out-dir", out_dir);

  CLI11_PARSE(app, argc, argv);

  try {
    const Budgets budgets = Budgets::from_environment();
    if (*check) return run_check(source, props, budgets);
    if (*dec) return run_decompose(source, descending, budgets);
    if (*star) return run_star(first, second, v1, v2, pairing);
    if (*tri) return run_trisum(parts, cycles, removed);
    if (*fam) return run_family(recipe);
    if (*scan) return run_scan(input, filters, checks, report, format, workers, budgets);
    if (*suite) return run_suite(labels, overrides, budgets);
    if (*fix) return run_fixtures(out_dir);
  } catch (const BudgetExceeded& e) {
    std::cerr << "bracekit: " << e.what() << '\n';
    return kExitBudget;
  } catch (const std::exception& e) {
    std::cerr << "bracekit: " << e.what() << '\n';
    return kExitInput;
  }
  return kExitInput;
}
