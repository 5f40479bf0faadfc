#pragma once

#include <cstddef>
#include <functional>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "bracekit/budgets.hpp"
#include "bracekit/graph.hpp"

namespace bracekit {

enum class Verdict { kTrue, kFalse, kInconclusive };

std::string_view to_string(Verdict v);

struct Predicate {
  enum class Kind {
    kCubic,
    kBipartite,
    kBrace,
    kGirthAtLeast,
    kTwoFactorHamiltonian,
    kPfaffian,
    kNonPfaffian,
    kOrderTwoModFour,
    kCyclicallyFourConnected,
  };
  Kind kind;
  int girth = 0;  // for kGirthAtLeast

  /// cubic, bipartite, brace, girth>=K, 2fh, pfaffian, non-pfaffian, v2mod4, c4c
  std::string name() const;
  /// Throws PreconditionError on unknown names.
  static Predicate parse(std::string_view text);

  friend bool operator==(const Predicate&, const Predicate&) = default;
};

/// Evaluated left to right, stopping at the first non-true verdict.
using PredicateSet = std::vector<Predicate>;

/// Comma- or space-separated predicate names.
PredicateSet parse_predicates(std::string_view text);

struct PredicateOutcome {
  std::string predicate;
  Verdict verdict = Verdict::kInconclusive;
  std::string note;  // why a verdict is inconclusive

  friend bool operator==(const PredicateOutcome&, const PredicateOutcome&) = default;
};

struct ScanRecord {
  std::size_t index = 0;  // 0-based position among the graphs
  std::size_t line = 0;   // 1-based input line
  std::string graph6;
  int n = 0;
  int m = 0;
  bool passed_filters = false;
  std::vector<PredicateOutcome> filters;
  std::vector<PredicateOutcome> checks;
  /// Disconnected 2-factor found while evaluating 2fh.
  std::optional<std::vector<Edge>> two_factor_witness;
  bool budget_exceeded = false;

  /// Passed every filter and every check is true.
  bool survivor() const;
};

struct VerdictCounts {
  std::size_t yes = 0;
  std::size_t no = 0;
  std::size_t inconclusive = 0;
};

struct ScanAggregate {
  std::size_t graphs = 0;
  std::size_t passed_filters = 0;
  std::size_t budget_exceeded = 0;
  std::map<std::string, VerdictCounts> filters;
  std::map<std::string, VerdictCounts> checks;
  std::vector<std::size_t> survivors;  // record indices

  void add(const ScanRecord& r);
};

struct ScanReport {
  std::vector<std::string> filter_names;
  std::vector<std::string> check_names;
  std::vector<ScanRecord> records;
  ScanAggregate aggregate;
};

struct ScanOptions {
  PredicateSet filters;
  PredicateSet checks;
  Budgets budgets;
  unsigned workers = 1;
  /// Graphs decoded and evaluated per batch.
  std::size_t batch = 1024;
};

/// Evaluates one graph (filters then, if all pass, every check).
ScanRecord evaluate_graph(const Graph& g, const ScanOptions& options);

/// Streams records to `sink` in input order and returns the aggregate. Blank
/// lines are skipped; a malformed line aborts with ParseError whose offset is
/// the 1-based line number.
ScanAggregate scan_stream(std::istream& in, const ScanOptions& options,
                          const std::function<void(const ScanRecord&)>& sink);

ScanReport scan_corpus(std::istream& in, const ScanOptions& options);

enum class ReportFormat { kJson, kCsv };

inline constexpr std::string_view kReportSchema = "bracekit.scan/1";

void emit_report(std::ostream& out, const ScanReport& report, ReportFormat format);

}  // namespace bracekit
