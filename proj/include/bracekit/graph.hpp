#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace bracekit {

using Vertex = int;
using VertexMask = std::uint64_t;

/// Undirected edge stored with `u < v`.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

Edge make_edge(Vertex a, Vertex b);
std::string to_string(const Edge& e);

/// Largest order supported by the bitmask-based exhaustive routines.
inline constexpr int kMaskCapacity = 64;

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  /// Throws std::invalid_argument on n < 1, loops, duplicate edges or
  /// out-of-range endpoints. Edge orientation in the input is irrelevant.
  Graph(int n, std::span<const Edge> edges);
  Graph(int n, std::initializer_list<std::pair<int, int>> edges);

  /// Builds a graph from pairs, silently dropping loops and repeated edges.
  static Graph simplified(int n, std::span<const std::pair<int, int>> pairs);

  int order() const noexcept { return n_; }
  int size() const noexcept { return static_cast<int>(edges_.size()); }

  /// Sorted lexicographically; the position of an edge is its edge index.
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  std::span<const Vertex> neighbours(Vertex v) const { return adjacency_[static_cast<std::size_t>(v)]; }
  int degree(Vertex v) const { return static_cast<int>(adjacency_[static_cast<std::size_t>(v)].size()); }
  bool adjacent(Vertex a, Vertex b) const;
  /// Index into edges(), or -1.
  int edge_index(Vertex a, Vertex b) const;
  int edge_index(const Edge& e) const { return edge_index(e.u, e.v); }

  bool fits_mask() const noexcept { return n_ <= kMaskCapacity; }
  /// Requires fits_mask().
  VertexMask neighbour_mask(Vertex v) const { return masks_[static_cast<std::size_t>(v)]; }
  VertexMask all_vertices_mask() const;

  bool is_regular(int k) const;
  bool is_cubic() const { return is_regular(3); }

  /// Subgraph induced by `keep` (ascending); vertex i of the result is keep[i].
  Graph induced(std::span<const Vertex> keep) const;
  /// Same vertex set with the given edges removed.
  Graph without_edges(std::span<const Edge> removed) const;
  /// Vertex v of `*this` becomes perm[v].
  Graph relabelled(std::span<const Vertex> perm) const;

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  void build_adjacency();

  int n_ = 1;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
  std::vector<VertexMask> masks_;
};

/// Throws PreconditionError when g is too large for a bitmask routine.
void require_mask_capacity(const Graph& g, const char* operation);

/// Colour classes; canonical so that the lowest vertex of every connected
/// component lies in class_a.
struct Bipartition {
  std::vector<Vertex> class_a;
  std::vector<Vertex> class_b;
  /// colour[v] == 0 for class_a, 1 for class_b.
  std::vector<int> colour;
};

std::optional<Bipartition> bipartition(const Graph& g);
bool is_bipartite(const Graph& g);

/// Component id per vertex, numbered by lowest member.
std::vector<int> components(const Graph& g);
int component_count(const Graph& g);
bool is_connected(const Graph& g);

/// Length of a shortest cycle; nullopt for forests.
std::optional<int> girth(const Graph& g);

/// Connected and no set of fewer than k vertices disconnects; K_n counts as
/// (n-1)-connected.
bool is_k_connected(const Graph& g, int k);

/// Edges whose removal increases the number of components, sorted.
std::vector<Edge> bridges(const Graph& g);

/// Requires a connected cubic graph; throws PreconditionError otherwise.
bool is_cyclically_4_connected(const Graph& g);

std::vector<int> degree_sequence(const Graph& g);

}  // namespace bracekit
