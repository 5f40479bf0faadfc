#include "bracekit/matching.hpp"

#include <algorithm>
#include <bit>

#include "bracekit/detail/masks.hpp"
#include "bracekit/errors.hpp"

namespace bracekit {

using detail::bit;
using detail::lowest;

bool is_matching(const Graph& g, std::span<const Edge> edges) {
  std::vector<char> used(static_cast<std::size_t>(g.order()), 0);
  for (const Edge& e : edges) {
    if (g.edge_index(e) < 0) return false;
    if (used[e.u] || used[e.v]) return false;
    used[e.u] = used[e.v] = 1;
  }
  return true;
}

namespace {

struct Enumerator {
  const Graph& g;
  const std::function<bool(std::span<const Edge>)>& visit;
  std::vector<Edge> chosen;
  std::uint64_t count = 0;
  bool stopped = false;

  void run(VertexMask uncovered) {
    if (stopped) return;
    if (uncovered == 0) {
      ++count;
      if (!visit(chosen)) stopped = true;
      return;
    }
    const Vertex v = lowest(uncovered);
    const VertexMask rest = uncovered & ~bit(v);
    for (VertexMask cand = g.neighbour_mask(v) & rest; cand && !stopped; cand &= cand - 1) {
      const Vertex w = lowest(cand);
      chosen.push_back(Edge{v, w});
      run(rest & ~bit(w));
      chosen.pop_back();
    }
  }
};

}  // namespace

std::uint64_t for_each_perfect_matching(const Graph& g,
                                        const std::function<bool(std::span<const Edge>)>& visit) {
  require_mask_capacity(g, "perfect matching enumeration");
  if (g.order() % 2 != 0) return 0;
  Enumerator e{g, visit, {}, 0, false};
  e.chosen.reserve(static_cast<std::size_t>(g.order() / 2));
  e.run(g.all_vertices_mask());
  return e.count;
}

std::vector<Matching> enumerate_perfect_matchings(const Graph& g, std::uint64_t budget) {
  if (budget < 1) throw std::invalid_argument("budget must be at least 1");
  std::vector<Matching> out;
  bool exceeded = false;
  for_each_perfect_matching(g, [&](std::span<const Edge> m) {
    if (out.size() >= budget) {
      exceeded = true;
      return false;
    }
    out.push_back(Matching{g.order(), {m.begin(), m.end()}});
    return true;
  });
  if (exceeded) throw BudgetExceeded("perfect matching enumeration", out.size());
  return out;
}

std::uint64_t count_perfect_matchings(const Graph& g, std::uint64_t budget) {
  std::uint64_t count = 0;
  bool exceeded = false;
  for_each_perfect_matching(g, [&](std::span<const Edge>) {
    if (count >= budget) {
      exceeded = true;
      return false;
    }
    ++count;
    return true;
  });
  if (exceeded) throw BudgetExceeded("perfect matching count", count);
  return count;
}

bool has_perfect_matching(const Graph& g) {
  detail::MaskGraph mg(g);
  return mg.has_perfect_matching(mg.all());
}

namespace {

// First perfect matching (lexicographic) of the masked graph, restricted to `alive`.
bool first_matching(const detail::MaskGraph& mg, VertexMask alive, std::vector<Edge>& out) {
  if (alive == 0) return true;
  const Vertex v = lowest(alive);
  const VertexMask rest = alive & ~bit(v);
  for (VertexMask cand = mg.neighbours(v) & rest; cand; cand &= cand - 1) {
    const Vertex w = lowest(cand);
    const VertexMask next = rest & ~bit(w);
    if (!mg.has_perfect_matching(next)) continue;
    out.push_back(Edge{v, w});
    if (first_matching(mg, next, out)) return true;
    out.pop_back();
  }
  return false;
}

}  // namespace

std::optional<Matching> perfect_matching_with(const Graph& g, std::span<const Edge> forced,
                                              std::span<const Edge> forbidden) {
  if (!is_matching(g, forced)) throw PreconditionError("forced edges are not a matching of the graph");
  for (const Edge& f : forbidden) {
    const Edge e = make_edge(f.u, f.v);
    for (const Edge& x : forced) {
      if (make_edge(x.u, x.v) == e) throw PreconditionError("edge " + to_string(e) + " is both forced and forbidden");
    }
  }
  detail::MaskGraph mg(g);
  for (const Edge& f : forbidden) mg.remove_edge(f.u, f.v);
  VertexMask alive = mg.all();
  for (const Edge& e : forced) alive &= ~(bit(e.u) | bit(e.v));
  if (!mg.has_perfect_matching(alive)) return std::nullopt;
  std::vector<Edge> rest;
  first_matching(mg, alive, rest);
  Matching m{g.order(), rest};
  for (const Edge& e : forced) m.edges.push_back(make_edge(e.u, e.v));
  std::sort(m.edges.begin(), m.edges.end());
  return m;
}

bool is_matching_covered(const Graph& g) {
  if (!is_connected(g)) return false;
  detail::MaskGraph mg(g);
  for (const Edge& e : g.edges()) {
    if (!mg.has_perfect_matching(mg.all() & ~(bit(e.u) | bit(e.v)))) return false;
  }
  return true;
}

namespace {

bool every_k_matching_extends(const Graph& g, const detail::MaskGraph& mg, int k, std::size_t from,
                              VertexMask alive) {
  if (k == 0) return mg.has_perfect_matching(alive);
  const auto& edges = g.edges();
  for (std::size_t i = from; i < edges.size(); ++i) {
    const VertexMask ends = bit(edges[i].u) | bit(edges[i].v);
    if ((alive & ends) != ends) continue;
    if (!every_k_matching_extends(g, mg, k - 1, i + 1, alive & ~ends)) return false;
  }
  return true;
}

}  // namespace

bool is_k_extendable(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  if (g.order() < 2 * k + 2) {
    throw TooSmall("k-extendability needs at least " + std::to_string(2 * k + 2) + " vertices");
  }
  if (!is_connected(g)) return false;
  detail::MaskGraph mg(g);
  if (!mg.has_perfect_matching(mg.all())) return false;
  return every_k_matching_extends(g, mg, k, 0, mg.all());
}

namespace {

// |N(X)| >= |X| + k for every X ⊆ A with 1 <= |X| <= |A| - k. For a
// connected bipartite graph with balanced classes this is equivalent to
// k-extendability.
bool neighbourhood_surplus(const Graph& g, const Bipartition& parts, int k) {
  const auto& side = parts.class_a;
  const int a = static_cast<int>(side.size());
  for (std::uint32_t subset = 1; subset < (std::uint32_t{1} << a); ++subset) {
    const int size = std::popcount(subset);
    if (size > a - k) continue;
    VertexMask reach = 0;
    for (int i = 0; i < a; ++i) {
      if (subset & (std::uint32_t{1} << i)) reach |= g.neighbour_mask(side[i]);
    }
    if (std::popcount(reach) < size + k) return false;
  }
  return true;
}

constexpr int kSurplusClassLimit = 20;

}  // namespace

bool is_brace(const Graph& g) {
  if (!is_connected(g)) return false;
  const auto parts = bipartition(g);
  if (!parts) return false;
  if (g.order() == 4) return g.size() == 4 && g.is_regular(2);
  if (g.order() < 6) return false;
  if (parts->class_a.size() != parts->class_b.size()) return false;
  if (g.fits_mask() && static_cast<int>(parts->class_a.size()) <= kSurplusClassLimit) {
    return neighbourhood_surplus(g, *parts, 2);
  }
  return is_k_extendable(g, 2);
}

std::vector<Matching> konig_partition(const Graph& g) {
  if (!is_bipartite(g)) throw PreconditionError("König partition needs a bipartite graph");
  const int k = g.order() > 0 ? g.degree(0) : 0;
  if (k < 1 || !g.is_regular(k)) throw PreconditionError("König partition needs a k-regular graph with k >= 1");
  std::vector<Matching> parts;
  Graph rest = g;
  for (int round = 0; round < k; ++round) {
    auto m = perfect_matching_with(rest, {}, {});
    if (!m) throw Error("regular bipartite graph without a perfect matching");  // unreachable by König's theorem
    parts.push_back(*m);
    rest = rest.without_edges(m->edges);
  }
  return parts;
}

}  // namespace bracekit
