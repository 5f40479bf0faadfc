#include "bracekit/scan.hpp"

#include <atomic>
#include <charconv>
#include <istream>
#include <ostream>
#include <thread>

#include <json.hpp>

#include "bracekit/errors.hpp"
#include "bracekit/factors.hpp"
#include "bracekit/graph6.hpp"
#include "bracekit/matching.hpp"
#include "bracekit/pfaffian.hpp"

namespace bracekit {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::kTrue: return "true";
    case Verdict::kFalse: return "false";
    case Verdict::kInconclusive: return "inconclusive";
  }
  return "inconclusive";
}

std::string Predicate::name() const {
  switch (kind) {
    case Kind::kCubic: return "cubic";
    case Kind::kBipartite: return "bipartite";
    case Kind::kBrace: return "brace";
    case Kind::kGirthAtLeast: return "girth>=" + std::to_string(girth);
    case Kind::kTwoFactorHamiltonian: return "2fh";
    case Kind::kPfaffian: return "pfaffian";
    case Kind::kNonPfaffian: return "non-pfaffian";
    case Kind::kOrderTwoModFour: return "v2mod4";
    case Kind::kCyclicallyFourConnected: return "c4c";
  }
  return "?";
}

Predicate Predicate::parse(std::string_view text) {
  static const std::pair<std::string_view, Kind> plain[] = {
      {"cubic", Kind::kCubic},       {"bipartite", Kind::kBipartite},
      {"brace", Kind::kBrace},       {"2fh", Kind::kTwoFactorHamiltonian},
      {"pfaffian", Kind::kPfaffian}, {"non-pfaffian", Kind::kNonPfaffian},
      {"v2mod4", Kind::kOrderTwoModFour}, {"c4c", Kind::kCyclicallyFourConnected},
  };
  for (const auto& [name, kind] : plain) {
    if (text == name) return {kind};
  }
  constexpr std::string_view prefix = "girth>=";
  if (text.starts_with(prefix)) {
    int k = 0;
    const auto digits = text.substr(prefix.size());
    auto [end, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec == std::errc{} && end == digits.data() + digits.size() && k >= 3) return {Kind::kGirthAtLeast, k};
  }
  throw PreconditionError("unknown predicate '" + std::string(text) + "'");
}

PredicateSet parse_predicates(std::string_view text) {
  PredicateSet out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    const auto end = text.find_first_of(", ", pos);
    const auto token = text.substr(pos, end == std::string_view::npos ? std::string_view::npos : end - pos);
    if (!token.empty()) out.push_back(Predicate::parse(token));
    if (end == std::string_view::npos) break;
    pos = end + 1;
  }
  return out;
}

bool ScanRecord::survivor() const {
  if (!passed_filters) return false;
  for (const auto& c : checks) {
    if (c.verdict != Verdict::kTrue) return false;
  }
  return true;
}

void ScanAggregate::add(const ScanRecord& r) {
  ++graphs;
  passed_filters += r.passed_filters;
  budget_exceeded += r.budget_exceeded;
  auto tally = [](std::map<std::string, VerdictCounts>& into, const std::vector<PredicateOutcome>& outcomes) {
    for (const auto& o : outcomes) {
      auto& c = into[o.predicate];
      switch (o.verdict) {
        case Verdict::kTrue: ++c.yes; break;
        case Verdict::kFalse: ++c.no; break;
        case Verdict::kInconclusive: ++c.inconclusive; break;
      }
    }
  };
  tally(filters, r.filters);
  tally(checks, r.checks);
  if (r.survivor()) survivors.push_back(r.index);
}

namespace {

Verdict from_bool(bool b) { return b ? Verdict::kTrue : Verdict::kFalse; }

PredicateOutcome evaluate(const Predicate& p, const Graph& g, const Budgets& budgets, ScanRecord& record) {
  using Kind = Predicate::Kind;
  PredicateOutcome out{p.name(), Verdict::kInconclusive, {}};
  try {
    switch (p.kind) {
      case Kind::kCubic: out.verdict = from_bool(g.is_cubic()); break;
      case Kind::kBipartite: out.verdict = from_bool(is_bipartite(g)); break;
      case Kind::kBrace: out.verdict = from_bool(is_brace(g)); break;
      case Kind::kGirthAtLeast: {
        const auto gi = girth(g);
        out.verdict = from_bool(!gi || *gi >= p.girth);
        break;
      }
      case Kind::kTwoFactorHamiltonian: {
        const auto h = is_two_factor_hamiltonian(g, budgets.two_factors);
        out.verdict = from_bool(h.two_factor_hamiltonian);
        if (h.witness) record.two_factor_witness = h.witness->edges;
        break;
      }
      case Kind::kPfaffian:
      case Kind::kNonPfaffian: {
        if (!has_perfect_matching(g)) {
          out.verdict = from_bool(p.kind == Kind::kPfaffian);
          out.note = "no perfect matching";
          break;
        }
        const bool pf = is_pfaffian(g, budgets);
        out.verdict = from_bool(p.kind == Kind::kPfaffian ? pf : !pf);
        break;
      }
      case Kind::kOrderTwoModFour: out.verdict = from_bool(g.order() % 4 == 2); break;
      case Kind::kCyclicallyFourConnected:
        if (!g.is_cubic() || !is_connected(g)) {
          out.verdict = Verdict::kFalse;
          out.note = "not a connected cubic graph";
        } else {
          out.verdict = from_bool(is_cyclically_4_connected(g));
        }
        break;
    }
  } catch (const BudgetExceeded& e) {
    out.verdict = Verdict::kInconclusive;
    out.note = e.what();
    record.budget_exceeded = true;
  } catch (const PreconditionError& e) {
    out.verdict = Verdict::kInconclusive;
    out.note = e.what();
  }
  return out;
}

}  // namespace

ScanRecord evaluate_graph(const Graph& g, const ScanOptions& options) {
  ScanRecord r;
  r.n = g.order();
  r.m = g.size();
  r.passed_filters = true;
  for (const auto& p : options.filters) {
    r.filters.push_back(evaluate(p, g, options.budgets, r));
    if (r.filters.back().verdict != Verdict::kTrue) {
      r.passed_filters = false;
      return r;
    }
  }
  for (const auto& p : options.checks) {
    r.checks.push_back(evaluate(p, g, options.budgets, r));
    if (r.checks.back().verdict != Verdict::kTrue) break;
  }
  return r;
}

ScanAggregate scan_stream(std::istream& in, const ScanOptions& options,
                          const std::function<void(const ScanRecord&)>& sink) {
  ScanAggregate aggregate;
  for (const auto& p : options.filters) aggregate.filters.try_emplace(p.name());
  for (const auto& p : options.checks) aggregate.checks.try_emplace(p.name());
  const unsigned workers = std::max(1u, options.workers);
  const std::size_t batch_size = std::max<std::size_t>(1, options.batch);
  std::size_t line_no = 0;
  std::size_t next_index = 0;
  std::string line;
  bool done = false;
  while (!done) {
    struct Item {
      std::size_t line;
      std::string text;
      std::optional<Graph> graph;
    };
    std::vector<Item> items;
    while (items.size() < batch_size) {
      if (!std::getline(in, line)) {
        done = true;
        break;
      }
      ++line_no;
      if (!line.empty() && line.back() == '\r') line.pop_back();
      if (line.empty()) continue;
      Item item{line_no, line, std::nullopt};
      try {
        item.graph.emplace(graph6_decode(line));
      } catch (const ParseError& e) {
        throw ParseError(line_no, std::string("line ") + std::to_string(line_no) + ": " + e.what());
      }
      items.push_back(std::move(item));
    }
    std::vector<ScanRecord> records(items.size());
    auto work = [&](std::atomic<std::size_t>& cursor) {
      for (std::size_t i = cursor++; i < items.size(); i = cursor++) {
        records[i] = evaluate_graph(*items[i].graph, options);
      }
    };
    std::atomic<std::size_t> cursor{0};
    if (workers == 1 || items.size() < 2) {
      work(cursor);
    } else {
      std::vector<std::thread> pool;
      for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work, std::ref(cursor));
      for (auto& t : pool) t.join();
    }
    for (std::size_t i = 0; i < items.size(); ++i) {
      records[i].index = next_index++;
      records[i].line = items[i].line;
      records[i].graph6 = std::move(items[i].text);
      aggregate.add(records[i]);
      sink(records[i]);
    }
  }
  return aggregate;
}

ScanReport scan_corpus(std::istream& in, const ScanOptions& options) {
  ScanReport report;
  for (const auto& p : options.filters) report.filter_names.push_back(p.name());
  for (const auto& p : options.checks) report.check_names.push_back(p.name());
  report.aggregate = scan_stream(in, options, [&](const ScanRecord& r) { report.records.push_back(r); });
  return report;
}

namespace {

using Json = nlohmann::ordered_json;

Json outcomes_json(const std::vector<PredicateOutcome>& outcomes) {
  Json j = Json::object();
  for (const auto& o : outcomes) j[o.predicate] = to_string(o.verdict);
  return j;
}

Json notes_json(const ScanRecord& r) {
  Json j = Json::object();
  for (const auto* list : {&r.filters, &r.checks}) {
    for (const auto& o : *list) {
      if (!o.note.empty()) j[o.predicate] = o.note;
    }
  }
  return j;
}

Json counts_json(const std::map<std::string, VerdictCounts>& counts) {
  Json j = Json::object();
  for (const auto& [name, c] : counts) {
    j[name] = Json{{"true", c.yes}, {"false", c.no}, {"inconclusive", c.inconclusive}};
  }
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

void emit_report(std::ostream& out, const ScanReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    Json records = Json::array();
    for (const auto& r : report.records) {
      Json rec;
      rec["index"] = r.index;
      rec["line"] = r.line;
      rec["graph6"] = r.graph6;
      rec["n"] = r.n;
      rec["m"] = r.m;
      rec["passed_filters"] = r.passed_filters;
      rec["filters"] = outcomes_json(r.filters);
      rec["checks"] = outcomes_json(r.checks);
      rec["notes"] = notes_json(r);
      if (r.two_factor_witness) {
        Json w = Json::array();
        for (const Edge& e : *r.two_factor_witness) w.push_back({e.u, e.v});
        rec["two_factor_witness"] = w;
      } else {
        rec["two_factor_witness"] = nullptr;
      }
      rec["budget_exceeded"] = r.budget_exceeded;
      records.push_back(std::move(rec));
    }
    const auto& a = report.aggregate;
    Json aggregate;
    aggregate["graphs"] = a.graphs;
    aggregate["passed_filters"] = a.passed_filters;
    aggregate["budget_exceeded"] = a.budget_exceeded;
    aggregate["filters"] = counts_json(a.filters);
    aggregate["checks"] = counts_json(a.checks);
    aggregate["survivors"] = a.survivors;
    Json root;
    root["records"] = std::move(records);
    root["aggregate"] = std::move(aggregate);
    root["schema"] = kReportSchema;
    out << root.dump() << '\n';
    return;
  }
  out << "index,line,graph6,n,m,passed_filters";
  for (const auto& name : report.filter_names) out << ",filter:" << csv_field(name);
  for (const auto& name : report.check_names) out << ",check:" << csv_field(name);
  out << ",budget_exceeded\n";
  auto cell = [](const std::vector<PredicateOutcome>& outcomes, const std::string& name) {
    for (const auto& o : outcomes) {
      if (o.predicate == name) return std::string(to_string(o.verdict));
    }
    return std::string();
  };
  for (const auto& r : report.records) {
    out << r.index << ',' << r.line << ',' << csv_field(r.graph6) << ',' << r.n << ',' << r.m << ','
        << (r.passed_filters ? "true" : "false");
    for (const auto& name : report.filter_names) out << ',' << cell(r.filters, name);
    for (const auto& name : report.check_names) out << ',' << cell(r.checks, name);
    out << ',' << (r.budget_exceeded ? "true" : "false") << '\n';
  }
}

}  // namespace bracekit
