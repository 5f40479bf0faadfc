#include <gtest/gtest.h>

#include <json.hpp>
#include <sstream>

#include "bracekit/errors.hpp"
#include "bracekit/fixtures.hpp"
#include "bracekit/graph6.hpp"
#include "bracekit/isomorphism.hpp"
#include "bracekit/scan.hpp"

using namespace bracekit;

namespace {

std::string fixture_stream() {
  std::string s;
  for (FixtureId id : all_fixtures()) s += graph6_encode(fixture(id)) + "\n";
  return s;
}

std::string report_text(const std::string& input, ScanOptions options, ReportFormat format) {
  std::istringstream in(input);
  std::ostringstream out;
  emit_report(out, scan_corpus(in, options), format);
  return out.str();
}

}  // namespace

TEST(Predicates, ParseAndName) {
  const auto set = parse_predicates("cubic, bipartite brace,girth>=6,2fh,pfaffian,non-pfaffian,v2mod4,c4c");
  ASSERT_EQ(set.size(), 9u);
  EXPECT_EQ(set[3].kind, Predicate::Kind::kGirthAtLeast);
  EXPECT_EQ(set[3].girth, 6);
  std::string names;
  for (const auto& p : set) names += p.name() + ";";
  EXPECT_EQ(names, "cubic;bipartite;brace;girth>=6;2fh;pfaffian;non-pfaffian;v2mod4;c4c;");
  EXPECT_THROW(Predicate::parse("planar"), PreconditionError);
  EXPECT_THROW(Predicate::parse("girth>=x"), PreconditionError);
  EXPECT_THROW(Predicate::parse("girth>=2"), PreconditionError);
  EXPECT_TRUE(parse_predicates("").empty());
}

TEST(Scan, EmptyStream) {
  ScanOptions options;
  options.checks = parse_predicates("2fh");
  EXPECT_EQ(report_text("", options, ReportFormat::kJson),
            "{\"records\":[],\"aggregate\":{\"graphs\":0,\"passed_filters\":0,\"budget_exceeded\":0,"
            "\"filters\":{},\"checks\":{\"2fh\":{\"true\":0,\"false\":0,\"inconclusive\":0}},\"survivors\":[]},"
            "\"schema\":\"bracekit.scan/1\"}\n");
  EXPECT_EQ(report_text("", options, ReportFormat::kCsv), "index,line,graph6,n,m,passed_filters,check:2fh,budget_exceeded\n");
}

TEST(Scan, ParseErrorCarriesLineNumber) {
  std::istringstream in("DQc\n\nDQc\nD!!\nDQc\n");
  try {
    scan_corpus(in, {});
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.offset(), 4u);
  }
}

TEST(Scan, FiltersShortCircuitAndSurvivors) {
  ScanOptions options;
  options.filters = parse_predicates("cubic,bipartite,brace");
  options.checks = parse_predicates("2fh");
  std::istringstream in(fixture_stream());
  const ScanReport r = scan_corpus(in, options);
  ASSERT_EQ(r.records.size(), all_fixtures().size());
  std::vector<std::string> survivors;
  for (std::size_t i : r.aggregate.survivors) survivors.push_back(r.records[i].graph6);
  EXPECT_EQ(survivors, (std::vector<std::string>{graph6_encode(fixture(FixtureId::kK33)),
                                                 graph6_encode(fixture(FixtureId::kHeawood))}));
  for (const auto& rec : r.records) {
    if (!rec.passed_filters) {
      EXPECT_TRUE(rec.checks.empty());
      EXPECT_NE(rec.filters.back().verdict, Verdict::kTrue);
    }
  }
  // Prism is cubic but not bipartite
  EXPECT_EQ(r.records[5].filters.size(), 2u);
}

TEST(Scan, WitnessAndBudgetRecorded) {
  ScanOptions options;
  options.checks = parse_predicates("2fh");
  options.budgets.two_factors = 5;
  std::istringstream in(graph6_encode(fixture(FixtureId::kHeawood)) + "\n" + graph6_encode(fixture(FixtureId::kCube)) +
                        "\n");
  const ScanReport r = scan_corpus(in, options);
  ASSERT_EQ(r.records.size(), 2u);
  EXPECT_TRUE(r.records[0].budget_exceeded);
  EXPECT_EQ(r.records[0].checks[0].verdict, Verdict::kInconclusive);
  EXPECT_FALSE(r.records[1].budget_exceeded);
  EXPECT_EQ(r.records[1].checks[0].verdict, Verdict::kFalse);
  ASSERT_TRUE(r.records[1].two_factor_witness);
  EXPECT_EQ(r.records[1].two_factor_witness->size(), 8u);
  EXPECT_EQ(r.aggregate.budget_exceeded, 1u);
  EXPECT_TRUE(r.aggregate.survivors.empty());
}

TEST(Scan, VacuousPfaffianVerdict) {
  ScanOptions options;
  options.checks = parse_predicates("pfaffian");
  const ScanRecord r = evaluate_graph(fixture(FixtureId::kFig7a), options);
  EXPECT_EQ(r.checks[0].verdict, Verdict::kTrue);
  EXPECT_EQ(r.checks[0].note, "no perfect matching");
}

TEST(Scan, OrderAndBytesIndependentOfWorkers) {
  std::string input;
  for (int rep = 0; rep < 5; ++rep) input += fixture_stream() + "\n";
  ScanOptions a;
  a.filters = parse_predicates("bipartite");
  a.checks = parse_predicates("2fh,pfaffian");
  a.batch = 7;
  ScanOptions b = a;
  b.workers = 4;
  b.batch = 3;
  for (auto format : {ReportFormat::kJson, ReportFormat::kCsv}) {
    EXPECT_EQ(report_text(input, a, format), report_text(input, b, format));
  }
  std::istringstream in(input);
  const auto r = scan_corpus(in, b);
  for (std::size_t i = 0; i < r.records.size(); ++i) EXPECT_EQ(r.records[i].index, i);
  EXPECT_EQ(r.records[17].line, 19u);  // blank separator line skipped but counted
}

TEST(Scan, JsonAggregateMatchesRecords) {
  ScanOptions options;
  options.filters = parse_predicates("cubic");
  options.checks = parse_predicates("bipartite,2fh");
  const auto j = nlohmann::json::parse(report_text(fixture_stream(), options, ReportFormat::kJson));
  EXPECT_EQ(j["schema"], "bracekit.scan/1");
  std::size_t passed = 0;
  std::map<std::string, std::map<std::string, std::size_t>> tallies;
  for (const auto& rec : j["records"]) {
    passed += rec["passed_filters"].get<bool>();
    for (auto& [name, verdict] : rec["checks"].items()) tallies[name][verdict.get<std::string>()]++;
    EXPECT_EQ(graph6_decode(rec["graph6"].get<std::string>()).order(), rec["n"].get<int>());
  }
  EXPECT_EQ(j["aggregate"]["graphs"], j["records"].size());
  EXPECT_EQ(j["aggregate"]["passed_filters"], passed);
  for (auto& [name, counts] : j["aggregate"]["checks"].items()) {
    for (auto& [verdict, count] : counts.items()) EXPECT_EQ(count.get<std::size_t>(), tallies[name][verdict]);
  }
}

TEST(Scan, CsvHasOneRowPerGraph) {
  ScanOptions options;
  options.checks = parse_predicates("cubic");
  const std::string csv = report_text(fixture_stream(), options, ReportFormat::kCsv);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), static_cast<long>(all_fixtures().size()) + 1);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "index,line,graph6,n,m,passed_filters,check:cubic,budget_exceeded");
}
