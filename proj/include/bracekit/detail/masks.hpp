#pragma once

#include <bit>
#include <span>
#include <unordered_set>
#include <vector>

#include "bracekit/graph.hpp"

namespace bracekit::detail {

inline VertexMask bit(Vertex v) { return VertexMask{1} << v; }

inline Vertex lowest(VertexMask m) { return std::countr_zero(m); }

/// Adjacency as bitmasks, editable. Perfect-matching existence is decided by
/// augmenting paths when a 2-colouring is known and by memoised search
/// otherwise.
class MaskGraph {
 public:
  explicit MaskGraph(const Graph& g);

  void remove_edge(Vertex a, Vertex b) {
    adj_[a] &= ~bit(b);
    adj_[b] &= ~bit(a);
  }
  void add_edge(Vertex a, Vertex b) {
    adj_[a] |= bit(b);
    adj_[b] |= bit(a);
  }

  int order() const { return static_cast<int>(adj_.size()); }
  VertexMask neighbours(Vertex v) const { return adj_[v]; }
  VertexMask all() const { return all_; }

  /// Whether the subgraph induced by `alive` has a perfect matching.
  bool has_perfect_matching(VertexMask alive) const;

 private:
  bool bipartite_matching(VertexMask alive) const;
  bool general_matching(VertexMask alive, std::unordered_set<VertexMask>& failed) const;

  std::vector<VertexMask> adj_;
  VertexMask all_ = 0;
  bool bipartite_ = false;
  VertexMask side_a_ = 0;
};

}  // namespace bracekit::detail
