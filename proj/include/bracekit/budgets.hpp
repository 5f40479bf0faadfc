#pragma once

#include <cstdint>

namespace bracekit {

/// Limits for the exponential subroutines. Defaults can be overridden through
/// the environment (see `from_environment`).
struct Budgets {
  std::uint64_t matchings = 10'000'000;
  std::uint64_t two_factors = 10'000'000;
  std::uint64_t cycles = 10'000'000;
  /// Orientation search visits at most 2^orientation_class_exponent classes.
  int orientation_class_exponent = 24;
  /// Largest shore size tried by the generic tight-cut search.
  int cut_shore_size = 12;

  /// Reads BRACEKIT_MATCHING_BUDGET, BRACEKIT_TWO_FACTOR_BUDGET,
  /// BRACEKIT_CYCLE_BUDGET, BRACEKIT_CLASS_EXPONENT and BRACEKIT_CUT_SHORE.
  /// Unset or unparsable variables keep the default.
  static Budgets from_environment();
};

}  // namespace bracekit
