#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "bracekit/budgets.hpp"
#include "bracekit/graph.hpp"

namespace bracekit {

/// Direction of every edge, indexed like Graph::edges(). reversed[i] == 0
/// means edges()[i] points from its smaller to its larger endpoint.
struct Orientation {
  std::vector<char> reversed;

  static Orientation reference(const Graph& g) { return {std::vector<char>(g.size(), 0)}; }
  Vertex tail(const Graph& g, int edge) const;
  Vertex head(const Graph& g, int edge) const;
  /// Reverses every edge at v.
  Orientation switched_at(const Graph& g, Vertex v) const;

  friend bool operator==(const Orientation&, const Orientation&) = default;
};

/// Even simple cycle whose removal leaves a graph with a perfect matching.
/// Canonical: starts at its smallest vertex, second vertex below the last.
struct NiceCycle {
  std::vector<Vertex> cycle;

  friend auto operator<=>(const NiceCycle&, const NiceCycle&) = default;
};

/// All nice cycles in lexicographic order. `budget` bounds the number of
/// even cycles examined. Throws PreconditionError without a perfect matching.
std::vector<NiceCycle> nice_cycles(const Graph& g, std::uint64_t budget = Budgets{}.cycles);

/// Number of cycle edges traversed along their direction is odd. The cycle
/// is a closed vertex sequence of g; throws PreconditionError otherwise.
bool is_oddly_oriented(const Graph& g, const Orientation& o, const std::vector<Vertex>& cycle);

/// Every nice cycle is oddly oriented.
bool is_pfaffian_orientation(const Graph& g, const Orientation& o, std::uint64_t budget = Budgets{}.cycles);

enum class PfaffianSearch {
  kClassEnumeration,  // fix a spanning tree, try all 2^(m-n+c) co-tree assignments
  kCycleSystem,       // solve the nice-cycle parity equations over GF(2)
  kMatchingSystem,    // solve "all perfect matchings have equal sign" over GF(2)
};

/// A Pfaffian orientation or none. Class enumeration throws BudgetExceeded
/// when m - n + c exceeds budgets.orientation_class_exponent; the first
/// satisfying class in index order is returned. Throws PreconditionError
/// without a perfect matching.
std::optional<Orientation> find_pfaffian_orientation(const Graph& g, const Budgets& budgets = {},
                                                     PfaffianSearch search = PfaffianSearch::kClassEnumeration);

/// Decided through the perfect-matching sign system.
bool is_pfaffian(const Graph& g, const Budgets& budgets = {});

struct GirthTheoremVerdict {
  enum class Branch { kNotPfaffian, kHeawood, kGirthFour, kViolation };
  Branch branch = Branch::kViolation;
  bool pass() const { return branch != Branch::kViolation; }
};

/// For a brace: not Pfaffian, or isomorphic to Heawood, or girth 4.
/// Throws PreconditionError when g is not a brace.
GirthTheoremVerdict check_pfaffian_girth_theorem(const Graph& g, const Budgets& budgets = {});

}  // namespace bracekit
