#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bracekit/budgets.hpp"
#include "bracekit/graph.hpp"

namespace bracekit {

enum class SuiteOutcome { kPass, kFail, kInconclusive };

std::string_view to_string(SuiteOutcome o);

struct SuiteEntry {
  std::string name;
  std::string claim;
  SuiteOutcome outcome = SuiteOutcome::kInconclusive;
  std::string evidence;
};

/// Expected 2-factor Hamiltonicity of every fixture, as stated alongside
/// the drawings.
const std::map<std::string, bool>& default_two_factor_labels();

struct SuiteInputs {
  /// Replaces named fixtures (fault injection).
  std::map<std::string, Graph> fixtures;
  /// Replaces entries of default_two_factor_labels().
  std::map<std::string, bool> two_factor_labels;
  Budgets budgets;
};

/// Runs every statement check on the fixtures. Budget exhaustion makes an
/// entry inconclusive, never a pass.
std::vector<SuiteEntry> run_lemma_suite(const SuiteInputs& inputs = {});

}  // namespace bracekit
