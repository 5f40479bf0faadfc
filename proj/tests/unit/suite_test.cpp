#include <gtest/gtest.h>

#include <set>

#include "bracekit/fixtures.hpp"
#include "bracekit/suite.hpp"
#include "oracles.hpp"

using namespace bracekit;

namespace {

SuiteOutcome outcome_of(const std::vector<SuiteEntry>& entries, const std::string& name) {
  for (const auto& e : entries) {
    if (e.name == name) return e.outcome;
  }
  ADD_FAILURE() << "no entry " << name;
  return SuiteOutcome::kInconclusive;
}

// 14-cycle with chords i -> i+7 from even i: cubic and bipartite but full of 4-cycles.
Graph perturbed_heawood() {
  oracle::EdgeList edges;
  for (int i = 0; i < 14; ++i) edges.emplace_back(i, (i + 1) % 14);
  for (int i = 0; i < 14; i += 2) edges.emplace_back(i, (i + 7) % 14);
  return oracle::to_graph(14, edges);
}

}  // namespace

TEST(Suite, AllEntriesPassOnShippedFixtures) {
  const auto entries = run_lemma_suite();
  EXPECT_GE(entries.size(), 25u);
  std::set<std::string> names;
  for (const auto& e : entries) {
    EXPECT_EQ(e.outcome, SuiteOutcome::kPass) << e.name << ": " << e.evidence;
    EXPECT_TRUE(names.insert(e.name).second) << e.name;
    EXPECT_FALSE(e.evidence.empty()) << e.name;
  }
}

TEST(Suite, MislabelledPrismFailsTheQuasiTightEntry) {
  SuiteInputs inputs;
  inputs.two_factor_labels["Prism"] = true;
  const auto entries = run_lemma_suite(inputs);
  EXPECT_EQ(outcome_of(entries, "bridgeless-star-product-quasi-tight"), SuiteOutcome::kFail);
  EXPECT_EQ(outcome_of(entries, "two-factor-labels"), SuiteOutcome::kFail);
  EXPECT_EQ(outcome_of(entries, "fixture-sanity"), SuiteOutcome::kPass);
}

TEST(Suite, PerturbedHeawoodFailsGirthAndPfaffianEntries) {
  const Graph bad = perturbed_heawood();
  ASSERT_TRUE(bad.is_cubic());
  ASSERT_TRUE(is_bipartite(bad));
  ASSERT_EQ(girth(bad), 4);
  SuiteInputs inputs;
  inputs.fixtures.emplace("Heawood", bad);
  const auto entries = run_lemma_suite(inputs);
  EXPECT_EQ(outcome_of(entries, "fixture-sanity"), SuiteOutcome::kFail);
  EXPECT_EQ(outcome_of(entries, "pfaffian-heawood-girth"), SuiteOutcome::kFail);
  EXPECT_EQ(outcome_of(entries, "pfaffian-brace-girth"), SuiteOutcome::kFail);
}

TEST(Suite, ExhaustedBudgetsAreNeverPasses) {
  SuiteInputs inputs;
  inputs.budgets.two_factors = 1;
  inputs.budgets.matchings = 1;
  const auto entries = run_lemma_suite(inputs);
  EXPECT_EQ(outcome_of(entries, "two-factor-base-cases"), SuiteOutcome::kInconclusive);
  EXPECT_EQ(outcome_of(entries, "contraction-2fh-transfer"), SuiteOutcome::kInconclusive);
  EXPECT_EQ(outcome_of(entries, "fixture-sanity"), SuiteOutcome::kPass);
}

TEST(Suite, OutcomeNames) {
  EXPECT_EQ(to_string(SuiteOutcome::kPass), "PASS");
  EXPECT_EQ(to_string(SuiteOutcome::kFail), "FAIL");
  EXPECT_EQ(to_string(SuiteOutcome::kInconclusive), "INCONCLUSIVE");
}
