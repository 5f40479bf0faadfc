#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "bracekit/budgets.hpp"
#include "bracekit/graph.hpp"

namespace bracekit {

/// Pairwise disjoint edges of a host graph with `host_order` vertices.
struct Matching {
  int host_order = 0;
  std::vector<Edge> edges;  // sorted

  bool is_perfect() const { return 2 * static_cast<int>(edges.size()) == host_order; }
  friend bool operator==(const Matching&, const Matching&) = default;
};

/// True when every listed edge belongs to g and no two share an endpoint.
bool is_matching(const Graph& g, std::span<const Edge> edges);

/// Calls `visit` with each perfect matching (sorted edge list) in
/// lexicographic order, stopping early when it returns false. Returns the
/// number of matchings visited. Requires g.fits_mask().
std::uint64_t for_each_perfect_matching(const Graph& g,
                                        const std::function<bool(std::span<const Edge>)>& visit);

/// All perfect matchings in lexicographic order of their sorted edge lists.
/// Throws BudgetExceeded (carrying the budget as partial count) when there are
/// more than `budget`.
std::vector<Matching> enumerate_perfect_matchings(const Graph& g, std::uint64_t budget = Budgets{}.matchings);

std::uint64_t count_perfect_matchings(const Graph& g, std::uint64_t budget = Budgets{}.matchings);

bool has_perfect_matching(const Graph& g);

/// A perfect matching containing `forced` and avoiding `forbidden`, or none.
/// Throws PreconditionError when forced is not a matching of g or the two
/// sets intersect.
std::optional<Matching> perfect_matching_with(const Graph& g, std::span<const Edge> forced,
                                              std::span<const Edge> forbidden);

/// Connected, and every edge lies in some perfect matching.
bool is_matching_covered(const Graph& g);

/// Connected with a perfect matching, and every matching of size k extends to
/// a perfect matching. Throws TooSmall when the order is below 2k + 2.
bool is_k_extendable(const Graph& g, int k);

/// Connected bipartite, and either C4 or at least six vertices and 2-extendable.
bool is_brace(const Graph& g);

/// Splits the edges of a k-regular bipartite graph into k disjoint perfect
/// matchings. Throws PreconditionError on other inputs.
std::vector<Matching> konig_partition(const Graph& g);

}  // namespace bracekit
