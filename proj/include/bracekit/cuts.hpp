#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "bracekit/budgets.hpp"
#include "bracekit/errors.hpp"
#include "bracekit/graph.hpp"

namespace bracekit {

/// The cut δ(X) around a shore X of a host graph.
struct EdgeCut {
  int host_order = 0;
  std::vector<Vertex> shore;  // X, sorted
  std::vector<Edge> delta;    // edges with exactly one end in X, sorted

  bool trivial() const { return shore.size() == 1 || host_order - static_cast<int>(shore.size()) == 1; }
  std::vector<Vertex> complement() const;
  bool in_shore(Vertex v) const;
  friend bool operator==(const EdgeCut&, const EdgeCut&) = default;
};

/// Throws PreconditionError when X is empty, covers every vertex, repeats a
/// vertex or names a vertex outside the graph.
EdgeCut cut_around(const Graph& g, std::span<const Vertex> shore);

/// No two endpoints of distinct edges are equal or adjacent.
bool is_induced_matching(const Graph& g, std::span<const Edge> edges);

/// Every perfect matching meets δ(X) exactly once (vacuous without perfect
/// matchings). Throws BudgetExceeded past `budget` matchings.
bool is_quasi_tight(const Graph& g, const EdgeCut& cut, std::uint64_t budget = Budgets{}.matchings);

/// Quasi-tightness on a matching covered host; throws NotMatchingCovered.
bool is_tight(const Graph& g, const EdgeCut& cut, std::uint64_t budget = Budgets{}.matchings);

/// Candidate order for the tight-cut search. Both orders are exhaustive; they
/// only change which cut is found first.
enum class CutSearchOrder { kAscending, kDescending };

/// A non-trivial tight cut, normalised so that the shore contains vertex 0,
/// or nullopt when none exists. Cubic, bipartite, 3-connected hosts are
/// searched through induced 3-edge matchings whose removal disconnects the
/// graph; other hosts by shore enumeration up to budgets.cut_shore_size,
/// throwing BudgetExceeded when that bound leaves cuts unexamined.
/// Throws NotMatchingCovered.
std::optional<EdgeCut> find_nontrivial_tight_cut(const Graph& g, const Budgets& budgets = {},
                                                 CutSearchOrder order = CutSearchOrder::kAscending);

struct Contraction {
  Graph graph;
  Vertex contraction_vertex = 0;
  /// origin[i] is the host vertex behind vertex i, or -1 for the contraction vertex.
  std::vector<Vertex> origin;
};

/// First keeps X and contracts its complement (contraction vertex |X|);
/// second keeps the complement and contracts X. Throws PreconditionError
/// unless the cut is non-trivial and tight.
std::pair<Contraction, Contraction> tight_cut_contractions(const Graph& g, const EdgeCut& cut,
                                                           std::uint64_t budget = Budgets{}.matchings);

enum class PieceKind { kBrick, kBrace };

struct DecompositionPiece {
  Graph graph;
  PieceKind kind;
};

struct DecompositionStep {
  Graph host;
  EdgeCut cut;
};

struct DecompositionResult {
  std::vector<DecompositionPiece> pieces;
  std::vector<DecompositionStep> cut_trace;
};

/// Tight cut decomposition by repeated contraction. Throws NotMatchingCovered
/// and propagates BudgetExceeded.
DecompositionResult decompose(const Graph& g, const Budgets& budgets = {},
                              CutSearchOrder order = CutSearchOrder::kAscending);

/// Counts behind the balance statement for cuts in bipartite graphs whose
/// shore-side endpoints share a colour class A.
struct CutBalance {
  int shore_a = 0;
  int shore_b = 0;
  int far_a = 0;
  int far_b = 0;
  bool every_matching_crosses_once = false;
  std::uint64_t matchings_checked = 0;

  int shore_excess() const { return shore_a - shore_b; }
  int far_excess() const { return far_b - far_a; }
  bool holds() const { return shore_excess() == 1 && far_excess() == 1 && every_matching_crosses_once; }
};

class CutHypothesisError : public PreconditionError {
 public:
  enum class Reason { kNotBipartite, kEmptyCut, kMixedEndpointColours, kNoSingleCrossingMatching };

  CutHypothesisError(Reason reason, const std::string& message) : PreconditionError(message), reason_(reason) {}
  Reason reason() const noexcept { return reason_; }

 private:
  Reason reason_;
};

/// Checks the hypotheses (bipartite host, all shore-side endpoints of δ(X) in
/// one colour class, some perfect matching crossing once), throwing
/// CutHypothesisError naming the first that fails, then measures the counts
/// and checks every perfect matching.
CutBalance verify_cut_balance(const Graph& g, const EdgeCut& cut, std::uint64_t budget = Budgets{}.matchings);

}  // namespace bracekit
