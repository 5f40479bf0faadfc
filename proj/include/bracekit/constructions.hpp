#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "bracekit/cuts.hpp"
#include "bracekit/graph.hpp"

namespace bracekit {

/// Sorted neighbour i of v1 is joined to sorted neighbour pairing[i] of v2.
using Pairing = std::array<int, 3>;

inline constexpr Pairing kIdentityPairing{0, 1, 2};

/// The six pairings in lexicographic order.
std::span<const Pairing> all_pairings();

struct StarSpec {
  Graph g1;
  Vertex v1 = 0;
  Graph g2;
  Vertex v2 = 0;
  Pairing pairing = kIdentityPairing;
};

struct StarProduct {
  Graph graph;
  /// Shore = the vertices coming from g1.
  EdgeCut principal_cut;
  /// New index of each vertex of g1 (resp. g2), -1 for the deleted vertex.
  std::vector<Vertex> from_first;
  std::vector<Vertex> from_second;
};

/// g1 minus v1 keeps its order at the front, g2 minus v2 follows. Throws
/// PreconditionError when a chosen vertex does not have degree 3 or the
/// pairing is not a permutation of {0, 1, 2}.
StarProduct star_product(const StarSpec& spec);

/// Three edges forming an induced matching.
bool principal_cut_is_induced_matching(const Graph& g, const EdgeCut& cut);

struct TrisumSpec {
  std::array<Graph, 3> parts;
  /// The shared 4-cycle inside each part, listed in the same cyclic order.
  std::array<std::array<Vertex, 4>, 3> cycle;
  /// Cycle edges to delete: i stands for the edge between cycle[i] and cycle[(i+1) % 4].
  std::vector<int> removed;
};

struct Trisum {
  Graph graph;
  /// New index of each vertex of each part; the cycle becomes 0..3.
  std::array<std::vector<Vertex>, 3> maps;
};

/// Union of the three parts glued along the cycle, minus the chosen cycle
/// edges. Throws PreconditionError when a part is not bipartite, the cycle is
/// not a 4-cycle of a part, a part has extra edges inside the cycle or no
/// vertex outside it, or the union cannot be 2-coloured.
Trisum trisum(const TrisumSpec& spec);

/// One line of a family recipe.
struct FamilyStep {
  std::string base;  // K33 or Heawood (any fixture name is accepted)
  Vertex vertex = 0;  // vertex of the running product; unused on the first step
  Pairing pairing = kIdentityPairing;
};

struct FamilyResult {
  Graph graph;
  /// Principal cuts of every step, re-expressed in the final graph.
  std::vector<EdgeCut> cuts;
};

/// Starts from the first base and star-multiplies each further base (at its
/// vertex 0) into the running product. Throws PreconditionError naming the
/// failing step (1-based).
FamilyResult diwan_family(std::span<const FamilyStep> recipe);

/// Recipe grammar, one step per line:
///   BASE                      first line
///   BASE VERTEX [PAIRING]     later lines; PAIRING is three digits, e.g. 021
/// '#' starts a comment. ParseError offsets are 1-based line numbers.
std::vector<FamilyStep> parse_recipe(std::istream& in);

}  // namespace bracekit
