#include "bracekit/detail/masks.hpp"

#include <array>

namespace bracekit::detail {

MaskGraph::MaskGraph(const Graph& g) {
  require_mask_capacity(g, "bitmask matching");
  adj_.resize(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) adj_[v] = g.neighbour_mask(v);
  all_ = g.all_vertices_mask();
  if (auto parts = bipartition(g)) {
    bipartite_ = true;
    for (Vertex v : parts->class_a) side_a_ |= bit(v);
  }
}

bool MaskGraph::has_perfect_matching(VertexMask alive) const {
  if (std::popcount(alive) % 2 != 0) return false;
  if (alive == 0) return true;
  if (bipartite_) return bipartite_matching(alive);
  std::unordered_set<VertexMask> failed;
  return general_matching(alive, failed);
}

bool MaskGraph::bipartite_matching(VertexMask alive) const {
  const VertexMask left = alive & side_a_;
  const VertexMask right = alive & ~side_a_;
  if (std::popcount(left) != std::popcount(right)) return false;
  std::array<Vertex, kMaskCapacity> mate{};
  mate.fill(-1);
  // Kuhn's augmenting paths from each left vertex.
  auto augment = [&](auto&& self, Vertex u, VertexMask& seen) -> bool {
    for (VertexMask cand = adj_[u] & right & ~seen; cand; cand &= cand - 1) {
      const Vertex w = lowest(cand);
      seen |= bit(w);
      if (mate[w] < 0 || self(self, mate[w], seen)) {
        mate[w] = u;
        return true;
      }
    }
    return false;
  };
  for (VertexMask l = left; l; l &= l - 1) {
    VertexMask seen = 0;
    if (!augment(augment, lowest(l), seen)) return false;
  }
  return true;
}

bool MaskGraph::general_matching(VertexMask alive, std::unordered_set<VertexMask>& failed) const {
  if (alive == 0) return true;
  if (failed.contains(alive)) return false;
  for (VertexMask rest = alive; rest; rest &= rest - 1) {
    if ((adj_[lowest(rest)] & alive) == 0) {
      failed.insert(alive);
      return false;
    }
  }
  const Vertex v = lowest(alive);
  const VertexMask without_v = alive & ~bit(v);
  for (VertexMask cand = adj_[v] & without_v; cand; cand &= cand - 1) {
    const Vertex w = lowest(cand);
    if (general_matching(without_v & ~bit(w), failed)) return true;
  }
  failed.insert(alive);
  return false;
}

}  // namespace bracekit::detail
