#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bracekit/budgets.hpp"
#include "bracekit/graph.hpp"

namespace bracekit {

/// Spanning 2-regular subgraph, stored as its edge set plus its cycles.
struct TwoFactor {
  int host_order = 0;
  std::vector<Edge> edges;                 // sorted
  std::vector<std::vector<Vertex>> cycles;  // each starts at its lowest vertex

  int components() const { return static_cast<int>(cycles.size()); }
  bool is_hamiltonian_cycle() const { return cycles.size() == 1; }
  friend bool operator==(const TwoFactor& a, const TwoFactor& b) { return a.edges == b.edges; }
};

/// Builds the factor record; throws PreconditionError unless every vertex of
/// the host has degree exactly two in `edges`.
TwoFactor make_two_factor(const Graph& g, std::span<const Edge> edges);

enum class TwoFactorRoute {
  kAutomatic,            // complements of perfect matchings for cubic graphs
  kMatchingComplements,  // cubic graphs only
  kDegreeSearch,         // vertex-by-vertex degree-constrained search
};

/// Visits each 2-factor once (sorted edge list); returns the number visited.
std::uint64_t for_each_two_factor(const Graph& g, const std::function<bool(std::span<const Edge>)>& visit,
                                  TwoFactorRoute route = TwoFactorRoute::kAutomatic);

/// Throws BudgetExceeded when there are more than `budget` 2-factors.
std::vector<TwoFactor> enumerate_two_factors(const Graph& g, std::uint64_t budget = Budgets{}.two_factors,
                                             TwoFactorRoute route = TwoFactorRoute::kAutomatic);

bool has_two_factor(const Graph& g);

struct HamiltonicityVerdict {
  bool two_factor_hamiltonian = true;
  bool has_two_factor = false;
  /// First disconnected 2-factor in enumeration order, when one exists.
  std::optional<TwoFactor> witness;
  std::uint64_t factors_examined = 0;
};

/// Every 2-factor is a Hamiltonian cycle (vacuously true without 2-factors).
HamiltonicityVerdict is_two_factor_hamiltonian(const Graph& g, std::uint64_t budget = Budgets{}.two_factors);

}  // namespace bracekit
