#include "bracekit/graph.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "bracekit/errors.hpp"

namespace bracekit {

Edge make_edge(Vertex a, Vertex b) { return a < b ? Edge{a, b} : Edge{b, a}; }

std::string to_string(const Edge& e) { return std::to_string(e.u) + "-" + std::to_string(e.v); }

Graph::Graph(int n, std::span<const Edge> edges) : n_(n) {
  if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
  edges_.reserve(edges.size());
  for (const Edge& raw : edges) {
    if (raw.u < 0 || raw.v < 0 || raw.u >= n || raw.v >= n) {
      throw std::invalid_argument("edge endpoint out of range: " + to_string(raw));
    }
    if (raw.u == raw.v) throw std::invalid_argument("loop at vertex " + std::to_string(raw.u));
    edges_.push_back(make_edge(raw.u, raw.v));
  }
  std::sort(edges_.begin(), edges_.end());
  if (auto dup = std::adjacent_find(edges_.begin(), edges_.end()); dup != edges_.end()) {
    throw std::invalid_argument("parallel edge " + to_string(*dup));
  }
  build_adjacency();
}

Graph::Graph(int n, std::initializer_list<std::pair<int, int>> edges)
    : Graph(n, [&] {
        std::vector<Edge> list;
        list.reserve(edges.size());
        for (auto [a, b] : edges) list.push_back(Edge{a, b});
        return list;
      }()) {}

Graph Graph::simplified(int n, std::span<const std::pair<int, int>> pairs) {
  std::vector<Edge> list;
  list.reserve(pairs.size());
  for (auto [a, b] : pairs) {
    if (a != b) list.push_back(make_edge(a, b));
  }
  std::sort(list.begin(), list.end());
  list.erase(std::unique(list.begin(), list.end()), list.end());
  return Graph(n, list);
}

void Graph::build_adjacency() {
  adjacency_.assign(static_cast<std::size_t>(n_), {});
  for (const Edge& e : edges_) {
    adjacency_[static_cast<std::size_t>(e.u)].push_back(e.v);
    adjacency_[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  for (auto& list : adjacency_) std::sort(list.begin(), list.end());
  masks_.clear();
  if (fits_mask()) {
    masks_.assign(static_cast<std::size_t>(n_), 0);
    for (const Edge& e : edges_) {
      masks_[static_cast<std::size_t>(e.u)] |= VertexMask{1} << e.v;
      masks_[static_cast<std::size_t>(e.v)] |= VertexMask{1} << e.u;
    }
  }
}

bool Graph::adjacent(Vertex a, Vertex b) const { return edge_index(a, b) >= 0; }

int Graph::edge_index(Vertex a, Vertex b) const {
  if (a == b || a < 0 || b < 0 || a >= n_ || b >= n_) return -1;
  const Edge key = make_edge(a, b);
  auto it = std::lower_bound(edges_.begin(), edges_.end(), key);
  if (it == edges_.end() || *it != key) return -1;
  return static_cast<int>(it - edges_.begin());
}

VertexMask Graph::all_vertices_mask() const {
  return n_ >= 64 ? ~VertexMask{0} : ((VertexMask{1} << n_) - 1);
}

bool Graph::is_regular(int k) const {
  return std::all_of(adjacency_.begin(), adjacency_.end(),
                     [k](const auto& list) { return static_cast<int>(list.size()) == k; });
}

Graph Graph::induced(std::span<const Vertex> keep) const {
  std::vector<int> position(static_cast<std::size_t>(n_), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) position[static_cast<std::size_t>(keep[i])] = static_cast<int>(i);
  std::vector<Edge> kept;
  for (const Edge& e : edges_) {
    const int a = position[static_cast<std::size_t>(e.u)];
    const int b = position[static_cast<std::size_t>(e.v)];
    if (a >= 0 && b >= 0) kept.push_back(make_edge(a, b));
  }
  return Graph(static_cast<int>(keep.size()), kept);
}

Graph Graph::without_edges(std::span<const Edge> removed) const {
  std::vector<Edge> drop(removed.begin(), removed.end());
  for (Edge& e : drop) e = make_edge(e.u, e.v);
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  kept.reserve(edges_.size());
  std::set_difference(edges_.begin(), edges_.end(), drop.begin(), drop.end(), std::back_inserter(kept));
  return Graph(n_, kept);
}

Graph Graph::relabelled(std::span<const Vertex> perm) const {
  if (static_cast<int>(perm.size()) != n_) throw std::invalid_argument("relabelling has wrong length");
  std::vector<Edge> mapped;
  mapped.reserve(edges_.size());
  for (const Edge& e : edges_) {
    mapped.push_back(make_edge(perm[static_cast<std::size_t>(e.u)], perm[static_cast<std::size_t>(e.v)]));
  }
  return Graph(n_, mapped);
}

void require_mask_capacity(const Graph& g, const char* operation) {
  if (!g.fits_mask()) {
    throw PreconditionError(std::string(operation) + " supports at most " + std::to_string(kMaskCapacity) +
                            " vertices");
  }
}

std::optional<Bipartition> bipartition(const Graph& g) {
  const int n = g.order();
  std::vector<int> colour(static_cast<std::size_t>(n), -1);
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    if (colour[static_cast<std::size_t>(root)] != -1) continue;
    colour[static_cast<std::size_t>(root)] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      for (Vertex w : g.neighbours(v)) {
        int& cw = colour[static_cast<std::size_t>(w)];
        if (cw == -1) {
          cw = 1 - colour[static_cast<std::size_t>(v)];
          queue.push_back(w);
        } else if (cw == colour[static_cast<std::size_t>(v)]) {
          return std::nullopt;
        }
      }
    }
  }
  Bipartition result;
  result.colour = colour;
  for (Vertex v = 0; v < n; ++v) (colour[static_cast<std::size_t>(v)] == 0 ? result.class_a : result.class_b).push_back(v);
  return result;
}

bool is_bipartite(const Graph& g) { return bipartition(g).has_value(); }

std::vector<int> components(const Graph& g) {
  const int n = g.order();
  std::vector<int> id(static_cast<std::size_t>(n), -1);
  int next = 0;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (id[static_cast<std::size_t>(root)] != -1) continue;
    id[static_cast<std::size_t>(root)] = next;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbours(v)) {
        if (id[static_cast<std::size_t>(w)] == -1) {
          id[static_cast<std::size_t>(w)] = next;
          stack.push_back(w);
        }
      }
    }
    ++next;
  }
  return id;
}

int component_count(const Graph& g) {
  const auto id = components(g);
  return id.empty() ? 0 : *std::max_element(id.begin(), id.end()) + 1;
}

bool is_connected(const Graph& g) { return component_count(g) == 1; }

std::optional<int> girth(const Graph& g) {
  const int n = g.order();
  int best = std::numeric_limits<int>::max();
  std::vector<int> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> parent(static_cast<std::size_t>(n));
  std::deque<Vertex> queue;
  for (Vertex root = 0; root < n; ++root) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[static_cast<std::size_t>(root)] = 0;
    parent[static_cast<std::size_t>(root)] = -1;
    queue.assign(1, root);
    while (!queue.empty()) {
      const Vertex v = queue.front();
      queue.pop_front();
      const int dv = dist[static_cast<std::size_t>(v)];
      if (2 * dv + 1 >= best) break;
      for (Vertex w : g.neighbours(v)) {
        const int dw = dist[static_cast<std::size_t>(w)];
        if (dw == -1) {
          dist[static_cast<std::size_t>(w)] = dv + 1;
          parent[static_cast<std::size_t>(w)] = v;
          queue.push_back(w);
        } else if (w != parent[static_cast<std::size_t>(v)]) {
          best = std::min(best, dv + dw + 1);
        }
      }
    }
  }
  if (best == std::numeric_limits<int>::max()) return std::nullopt;
  return best;
}

namespace {

// Maximum number of internally vertex-disjoint s-t paths, capped at `limit`.
int local_connectivity(const Graph& g, Vertex s, Vertex t, int limit) {
  const int n = g.order();
  const int nodes = 2 * n;
  // node 2v = v_in, 2v+1 = v_out
  std::vector<std::vector<int>> cap(static_cast<std::size_t>(nodes), std::vector<int>(static_cast<std::size_t>(nodes), 0));
  constexpr int kInf = 1 << 20;
  for (Vertex v = 0; v < n; ++v) {
    cap[static_cast<std::size_t>(2 * v)][static_cast<std::size_t>(2 * v + 1)] = (v == s || v == t) ? kInf : 1;
  }
  for (const Edge& e : g.edges()) {
    cap[static_cast<std::size_t>(2 * e.u + 1)][static_cast<std::size_t>(2 * e.v)] = kInf;
    cap[static_cast<std::size_t>(2 * e.v + 1)][static_cast<std::size_t>(2 * e.u)] = kInf;
  }
  const int source = 2 * s + 1;
  const int sink = 2 * t;
  int flow = 0;
  std::vector<int> prev(static_cast<std::size_t>(nodes));
  while (flow < limit) {
    std::fill(prev.begin(), prev.end(), -1);
    prev[static_cast<std::size_t>(source)] = source;
    std::deque<int> queue{source};
    while (!queue.empty() && prev[static_cast<std::size_t>(sink)] == -1) {
      const int x = queue.front();
      queue.pop_front();
      for (int y = 0; y < nodes; ++y) {
        if (prev[static_cast<std::size_t>(y)] == -1 && cap[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)] > 0) {
          prev[static_cast<std::size_t>(y)] = x;
          queue.push_back(y);
        }
      }
    }
    if (prev[static_cast<std::size_t>(sink)] == -1) break;
    for (int y = sink; y != source; y = prev[static_cast<std::size_t>(y)]) {
      const int x = prev[static_cast<std::size_t>(y)];
      --cap[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      ++cap[static_cast<std::size_t>(y)][static_cast<std::size_t>(x)];
    }
    ++flow;
  }
  return flow;
}

}  // namespace

bool is_k_connected(const Graph& g, int k) {
  if (k < 1) throw std::invalid_argument("k must be positive");
  const int n = g.order();
  if (!is_connected(g)) return false;
  const long long complete = static_cast<long long>(n) * (n - 1) / 2;
  if (g.size() == complete) return k <= n - 1;
  if (k == 1) return true;
  for (Vertex s = 0; s < n; ++s) {
    for (Vertex t = s + 1; t < n; ++t) {
      if (g.adjacent(s, t)) continue;
      if (local_connectivity(g, s, t, k) < k) return false;
    }
  }
  return true;
}

std::vector<Edge> bridges(const Graph& g) {
  const int n = g.order();
  std::vector<int> disc(static_cast<std::size_t>(n), -1);
  std::vector<int> low(static_cast<std::size_t>(n), 0);
  std::vector<Edge> found;
  int timer = 0;
  struct Frame {
    Vertex v;
    Vertex parent;
    std::size_t next;
  };
  std::vector<Frame> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (disc[static_cast<std::size_t>(root)] != -1) continue;
    disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = timer++;
    stack.push_back({root, -1, 0});
    while (!stack.empty()) {
      Frame& top = stack.back();
      const auto nbrs = g.neighbours(top.v);
      if (top.next < nbrs.size()) {
        const Vertex w = nbrs[top.next++];
        if (w == top.parent) continue;
        if (disc[static_cast<std::size_t>(w)] == -1) {
          disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = timer++;
          stack.push_back({w, top.v, 0});
        } else {
          low[static_cast<std::size_t>(top.v)] = std::min(low[static_cast<std::size_t>(top.v)], disc[static_cast<std::size_t>(w)]);
        }
      } else {
        const Frame done = top;
        stack.pop_back();
        if (done.parent >= 0) {
          auto& lp = low[static_cast<std::size_t>(done.parent)];
          lp = std::min(lp, low[static_cast<std::size_t>(done.v)]);
          if (low[static_cast<std::size_t>(done.v)] > disc[static_cast<std::size_t>(done.parent)]) {
            found.push_back(make_edge(done.parent, done.v));
          }
        }
      }
    }
  }
  std::sort(found.begin(), found.end());
  return found;
}

namespace {

struct DisjointSets {
  explicit DisjointSets(int n) : parent(static_cast<std::size_t>(n)) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
  std::vector<int> parent;
};

// Number of components of g minus the edges flagged in `removed` that contain a cycle.
int cyclic_components_without(const Graph& g, const std::vector<char>& removed) {
  const int n = g.order();
  DisjointSets sets(n);
  const auto& edges = g.edges();
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!removed[i]) sets.unite(edges[i].u, edges[i].v);
  }
  std::vector<int> vertices(static_cast<std::size_t>(n), 0);
  std::vector<int> edge_count(static_cast<std::size_t>(n), 0);
  for (Vertex v = 0; v < n; ++v) ++vertices[static_cast<std::size_t>(sets.find(v))];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!removed[i]) ++edge_count[static_cast<std::size_t>(sets.find(edges[i].u))];
  }
  int cyclic = 0;
  for (Vertex v = 0; v < n; ++v) {
    if (vertices[static_cast<std::size_t>(v)] > 0 && edge_count[static_cast<std::size_t>(v)] >= vertices[static_cast<std::size_t>(v)]) ++cyclic;
  }
  return cyclic;
}

}  // namespace

bool is_cyclically_4_connected(const Graph& g) {
  if (!g.is_cubic()) throw PreconditionError("cyclic 4-connectivity is defined here for cubic graphs only");
  if (!is_connected(g)) throw PreconditionError("cyclic 4-connectivity requires a connected graph");
  const int m = g.size();
  std::vector<char> removed(static_cast<std::size_t>(m), 0);
  // Removing a superset of a cut never merges components, so every subset of
  // at most three edges is checked directly.
  for (int a = 0; a < m; ++a) {
    removed[static_cast<std::size_t>(a)] = 1;
    if (cyclic_components_without(g, removed) > 1) return false;
    for (int b = a + 1; b < m; ++b) {
      removed[static_cast<std::size_t>(b)] = 1;
      if (cyclic_components_without(g, removed) > 1) return false;
      for (int c = b + 1; c < m; ++c) {
        removed[static_cast<std::size_t>(c)] = 1;
        const bool split = cyclic_components_without(g, removed) > 1;
        removed[static_cast<std::size_t>(c)] = 0;
        if (split) return false;
      }
      removed[static_cast<std::size_t>(b)] = 0;
    }
    removed[static_cast<std::size_t>(a)] = 0;
  }
  return true;
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> degrees;
  degrees.reserve(static_cast<std::size_t>(g.order()));
  for (Vertex v = 0; v < g.order(); ++v) degrees.push_back(g.degree(v));
  std::sort(degrees.begin(), degrees.end(), std::greater<>());
  return degrees;
}

}  // namespace bracekit
