#pragma once

#include <array>
#include <iosfwd>
#include <optional>
#include <vector>

#include "bracekit/graph.hpp"

namespace bracekit {

/// Cyclic neighbour order per vertex; a combinatorial embedding.
struct RotationSystem {
  int host_order = 0;
  std::vector<std::vector<Vertex>> order;

  friend bool operator==(const RotationSystem&, const RotationSystem&) = default;
};

/// Validates that every vertex lists each of its neighbours exactly once.
/// Throws PreconditionError otherwise.
RotationSystem make_rotation_system(const Graph& g, std::vector<std::vector<Vertex>> order);

struct FaceTrace {
  /// Each face as the vertex sequence of its boundary walk.
  std::vector<std::vector<Vertex>> faces;
  int genus = 0;

  bool planar() const { return genus == 0; }
};

/// Traces faces: after arriving at v from u, leave along the successor of u
/// in v's rotation. Throws PreconditionError for disconnected hosts.
FaceTrace trace_faces(const Graph& g, const RotationSystem& r);

/// Faces of boundary length 4. Throws PreconditionError unless the rotation
/// is planar.
int count_quadrilateral_faces(const Graph& g, const RotationSystem& r);

/// (a, b, c, d) with edges ab, bc, cd, da; canonical: a is the smallest
/// vertex and b < d.
using FourCycle = std::array<Vertex, 4>;

FourCycle canonical_four_cycle(const FourCycle& c);
std::array<Edge, 4> four_cycle_edges(const FourCycle& c);
bool is_four_cycle(const Graph& g, const FourCycle& c);

/// Every 4-cycle once, canonical, in lexicographic order.
std::vector<FourCycle> all_four_cycles(const Graph& g);

/// The lexicographically least 4-cycle sharing no edge with c. Throws
/// PreconditionError when c is not a 4-cycle of g.
std::optional<FourCycle> edge_disjoint_partner(const Graph& g, const FourCycle& c);

/// Lexicographically first triple of pairwise edge-disjoint 4-cycles.
std::optional<std::array<FourCycle, 3>> three_edge_disjoint_four_cycles(const Graph& g);

/// Branch sets (one per vertex of h) are pairwise disjoint, each induces a
/// connected subgraph of g, and every edge of h joins two branch sets that
/// are adjacent in g. Such a witness shows h is a minor of g; with h = K33 or
/// K5 it certifies that g is not planar.
bool is_minor_witness(const Graph& g, const Graph& h, const std::vector<std::vector<Vertex>>& branch_sets);

/// Rotation file: one line per vertex, `v: n1 n2 ...` in cyclic order. Blank
/// lines and lines starting with '#' are ignored. ParseError offsets are
/// 1-based line numbers.
RotationSystem read_rotation_system(const Graph& g, std::istream& in);
void write_rotation_system(std::ostream& out, const RotationSystem& r);

}  // namespace bracekit
