#pragma once

// Brute-force references used by the tests. Everything here works on plain
// adjacency matrices and edge subsets and shares no code with the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "bracekit/graph.hpp"

namespace oracle {

using EdgeList = std::vector<std::pair<int, int>>;

struct Plain {
  int n = 0;
  EdgeList edges;
  std::vector<std::vector<char>> adj;

  explicit Plain(const bracekit::Graph& g) : n(g.order()), adj(g.order(), std::vector<char>(g.order(), 0)) {
    for (const auto& e : g.edges()) {
      edges.emplace_back(e.u, e.v);
      adj[e.u][e.v] = adj[e.v][e.u] = 1;
    }
  }
  Plain(int order, EdgeList list) : n(order), edges(std::move(list)), adj(order, std::vector<char>(order, 0)) {
    for (auto& [u, v] : edges) {
      if (u > v) std::swap(u, v);
      adj[u][v] = adj[v][u] = 1;
    }
    std::sort(edges.begin(), edges.end());
  }
  int degree(int v) const { return static_cast<int>(std::count(adj[v].begin(), adj[v].end(), 1)); }
};

inline bracekit::Graph to_graph(int n, const EdgeList& edges) {
  std::vector<bracekit::Edge> list;
  for (auto [u, v] : edges) list.push_back(bracekit::make_edge(u, v));
  return bracekit::Graph(n, list);
}

// Connectivity after deleting the vertices in `gone`.
inline bool connected_without(const Plain& g, const std::vector<char>& gone) {
  int start = -1;
  int alive = 0;
  for (int v = 0; v < g.n; ++v) {
    if (!gone[v]) {
      ++alive;
      if (start < 0) start = v;
    }
  }
  if (alive <= 1) return true;
  std::vector<char> seen(g.n, 0);
  std::vector<int> stack{start};
  seen[start] = 1;
  int reached = 1;
  while (!stack.empty()) {
    const int v = stack.back();
    stack.pop_back();
    for (int w = 0; w < g.n; ++w) {
      if (g.adj[v][w] && !gone[w] && !seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == alive;
}

inline bool connected(const Plain& g) { return connected_without(g, std::vector<char>(g.n, 0)); }

// No set of fewer than k vertices disconnects g, and n > k.
inline bool k_connected(const Plain& g, int k) {
  if (g.n <= k) return false;
  std::vector<char> gone(g.n, 0);
  std::function<bool(int, int)> rec = [&](int from, int left) {
    if (!connected_without(g, gone)) return false;
    if (left == 0) return true;
    for (int v = from; v < g.n; ++v) {
      gone[v] = 1;
      const bool ok = rec(v + 1, left - 1);
      gone[v] = 0;
      if (!ok) return false;
    }
    return true;
  };
  return rec(0, k - 1);
}

// Tries every 2-colouring with vertex 0 coloured 0 in each component.
inline bool bipartite(const Plain& g) {
  if (g.n > 20) throw std::runtime_error("oracle bipartite: too many vertices");
  for (std::uint32_t c = 0; c < (1u << g.n); ++c) {
    bool ok = true;
    for (auto [u, v] : g.edges) ok = ok && (((c >> u) & 1) != ((c >> v) & 1));
    if (ok) return true;
  }
  return g.edges.empty();
}

// Shortest cycle through each edge: BFS between its ends with the edge removed.
inline int girth(const Plain& g) {
  int best = 0;
  for (auto [s, t] : g.edges) {
    std::vector<int> dist(g.n, -1);
    std::queue<int> q;
    dist[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int v = q.front();
      q.pop();
      for (int w = 0; w < g.n; ++w) {
        if (!g.adj[v][w] || dist[w] >= 0) continue;
        if ((v == s && w == t) || (v == t && w == s)) continue;
        dist[w] = dist[v] + 1;
        q.push(w);
      }
    }
    if (dist[t] > 0 && (best == 0 || dist[t] + 1 < best)) best = dist[t] + 1;
  }
  return best;  // 0 for forests
}

inline std::vector<std::pair<int, int>> bridges(const Plain& g) {
  std::vector<std::pair<int, int>> out;
  const int base = [&] {
    // components count
    std::vector<int> comp(g.n, -1);
    int c = 0;
    for (int s = 0; s < g.n; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<int> st{s};
      comp[s] = c;
      while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int w = 0; w < g.n; ++w) {
          if (g.adj[v][w] && comp[w] < 0) {
            comp[w] = c;
            st.push_back(w);
          }
        }
      }
      ++c;
    }
    return c;
  }();
  for (auto [u, v] : g.edges) {
    EdgeList rest;
    for (auto e : g.edges) {
      if (e != std::pair{u, v}) rest.push_back(e);
    }
    Plain h(g.n, rest);
    std::vector<int> comp(g.n, -1);
    int c = 0;
    for (int s = 0; s < g.n; ++s) {
      if (comp[s] >= 0) continue;
      std::vector<int> st{s};
      comp[s] = c;
      while (!st.empty()) {
        int x = st.back();
        st.pop_back();
        for (int w = 0; w < g.n; ++w) {
          if (h.adj[x][w] && comp[w] < 0) {
            comp[w] = c;
            st.push_back(w);
          }
        }
      }
      ++c;
    }
    if (c > base) out.emplace_back(u, v);
  }
  return out;
}

// Perfect matchings as edge-index sets, found by choosing or skipping each
// edge in list order.
inline std::vector<std::vector<int>> perfect_matchings(const Plain& g) {
  std::vector<std::vector<int>> out;
  if (g.n % 2) return out;
  std::vector<char> used(g.n, 0);
  std::vector<int> chosen;
  const int m = static_cast<int>(g.edges.size());
  std::function<void(int)> rec = [&](int i) {
    if (2 * static_cast<int>(chosen.size()) == g.n) {
      out.push_back(chosen);
      return;
    }
    if (i == m) return;
    auto [u, v] = g.edges[i];
    if (!used[u] && !used[v]) {
      used[u] = used[v] = 1;
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
      used[u] = used[v] = 0;
    }
    rec(i + 1);
  };
  rec(0);
  return out;
}

// Spanning 2-regular edge sets, by choosing or skipping each edge.
inline std::vector<std::vector<int>> two_factors(const Plain& g) {
  std::vector<std::vector<int>> out;
  std::vector<int> deg(g.n, 0);
  std::vector<int> chosen;
  const int m = static_cast<int>(g.edges.size());
  std::function<void(int)> rec = [&](int i) {
    if (i == m) {
      if (std::all_of(deg.begin(), deg.end(), [](int d) { return d == 2; })) out.push_back(chosen);
      return;
    }
    auto [u, v] = g.edges[i];
    if (deg[u] < 2 && deg[v] < 2) {
      ++deg[u];
      ++deg[v];
      chosen.push_back(i);
      rec(i + 1);
      chosen.pop_back();
      --deg[u];
      --deg[v];
    }
    rec(i + 1);
  };
  rec(0);
  return out;
}

inline int cycle_count(const Plain& g, const std::vector<int>& edge_ids) {
  EdgeList sub;
  for (int i : edge_ids) sub.push_back(g.edges[i]);
  Plain h(g.n, sub);
  std::vector<char> seen(g.n, 0);
  int c = 0;
  for (int s = 0; s < g.n; ++s) {
    if (seen[s]) continue;
    ++c;
    std::vector<int> st{s};
    seen[s] = 1;
    while (!st.empty()) {
      int v = st.back();
      st.pop_back();
      for (int w = 0; w < g.n; ++w) {
        if (h.adj[v][w] && !seen[w]) {
          seen[w] = 1;
          st.push_back(w);
        }
      }
    }
  }
  return c;
}

inline bool two_factor_hamiltonian(const Plain& g) {
  for (const auto& f : two_factors(g)) {
    if (cycle_count(g, f) != 1) return false;
  }
  return true;
}

inline bool matching_covered(const Plain& g) {
  if (!connected(g)) return false;
  std::vector<char> covered(g.edges.size(), 0);
  for (const auto& m : perfect_matchings(g)) {
    for (int i : m) covered[i] = 1;
  }
  return !g.edges.empty() && std::all_of(covered.begin(), covered.end(), [](char c) { return c; });
}

// Every matching of size k lies in a perfect matching.
inline bool k_extendable(const Plain& g, int k) {
  if (!connected(g) || g.n < 2 * k + 2) return false;
  const auto pms = perfect_matchings(g);
  if (pms.empty()) return false;
  std::set<std::vector<int>> extendable;
  for (const auto& pm : pms) {
    std::vector<int> pick;
    std::function<void(std::size_t)> sub = [&](std::size_t from) {
      if (static_cast<int>(pick.size()) == k) {
        extendable.insert(pick);
        return;
      }
      for (std::size_t i = from; i < pm.size(); ++i) {
        pick.push_back(pm[i]);
        sub(i + 1);
        pick.pop_back();
      }
    };
    sub(0);
  }
  std::vector<int> pick;
  std::vector<char> used(g.n, 0);
  bool ok = true;
  const int m = static_cast<int>(g.edges.size());
  std::function<void(int)> rec = [&](int from) {
    if (!ok) return;
    if (static_cast<int>(pick.size()) == k) {
      ok = extendable.count(pick) > 0;
      return;
    }
    for (int i = from; i < m; ++i) {
      auto [u, v] = g.edges[i];
      if (used[u] || used[v]) continue;
      used[u] = used[v] = 1;
      pick.push_back(i);
      rec(i + 1);
      pick.pop_back();
      used[u] = used[v] = 0;
    }
  };
  rec(0);
  return ok;
}

// Shores as bitmasks; every perfect matching meets the cut exactly once.
inline bool cut_is_tight(const Plain& g, std::uint32_t shore, const std::vector<std::vector<int>>& pms) {
  for (const auto& pm : pms) {
    int crossing = 0;
    for (int i : pm) {
      auto [u, v] = g.edges[i];
      crossing += ((shore >> u) & 1) != ((shore >> v) & 1);
    }
    if (crossing != 1) return false;
  }
  return true;
}

inline bool has_nontrivial_tight_cut(const Plain& g) {
  const auto pms = perfect_matchings(g);
  for (std::uint32_t rest = 0; rest < (1u << (g.n - 1)); ++rest) {
    const std::uint32_t shore = (rest << 1) | 1u;
    const int s = __builtin_popcount(shore);
    if (s < 3 || s > g.n - 3 || s % 2 == 0) continue;
    if (cut_is_tight(g, shore, pms)) return true;
  }
  return false;
}

// Matching covered bipartite graph without non-trivial tight cuts.
inline bool brace(const Plain& g) {
  return bipartite(g) && matching_covered(g) && !has_nontrivial_tight_cut(g);
}

// Exact determinant of an integer matrix (Bareiss).
inline __int128 determinant(std::vector<std::vector<__int128>> a) {
  const int n = static_cast<int>(a.size());
  __int128 sign = 1;
  __int128 prev = 1;
  for (int k = 0; k < n; ++k) {
    if (a[k][k] == 0) {
      int swap_row = -1;
      for (int i = k + 1; i < n; ++i) {
        if (a[i][k] != 0) {
          swap_row = i;
          break;
        }
      }
      if (swap_row < 0) return 0;
      std::swap(a[k], a[swap_row]);
      sign = -sign;
    }
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < n; ++j) a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

// An orientation (tail, head per edge) is Pfaffian iff the squared Pfaffian of
// its skew adjacency matrix, det(A), equals the squared matching count.
inline bool pfaffian_by_determinant(int n, const std::vector<std::pair<int, int>>& arcs, std::uint64_t matchings) {
  if (n == 0) return true;
  std::vector<std::vector<__int128>> a(n, std::vector<__int128>(n, 0));
  for (auto [t, h] : arcs) {
    a[t][h] = 1;
    a[h][t] = -1;
  }
  const __int128 want = static_cast<__int128>(matchings) * matchings;
  return determinant(a) == want;
}

// Nice cycles as sorted vertex-sequences in canonical rotation: for each
// perfect matching, every cycle alternating between matching and non-matching
// edges.
inline std::set<std::vector<int>> alternating_cycles(const Plain& g) {
  std::set<std::vector<int>> out;
  auto canonical = [](std::vector<int> c) {
    const auto it = std::min_element(c.begin(), c.end());
    std::rotate(c.begin(), it, c.end());
    if (c.size() > 2 && c.back() < c[1]) std::reverse(c.begin() + 1, c.end());
    return c;
  };
  for (const auto& pm : perfect_matchings(g)) {
    std::vector<int> mate(g.n, -1);
    for (int i : pm) {
      mate[g.edges[i].first] = g.edges[i].second;
      mate[g.edges[i].second] = g.edges[i].first;
    }
    for (int s = 0; s < g.n; ++s) {
      // walk s -mate-> x -non-mate-> y -mate-> ... back to s through a non-matching edge
      std::vector<int> path{s, mate[s]};
      std::vector<char> on(g.n, 0);
      on[s] = on[mate[s]] = 1;
      std::function<void()> rec = [&] {
        const int last = path.back();
        for (int w = 0; w < g.n; ++w) {
          if (!g.adj[last][w] || w == mate[last]) continue;
          if (w == s) {
            if (path.size() >= 4) out.insert(canonical(path));
            continue;
          }
          if (on[w] || w < s) continue;
          on[w] = on[mate[w]] = 1;
          path.push_back(w);
          path.push_back(mate[w]);
          rec();
          path.pop_back();
          path.pop_back();
          on[w] = on[mate[w]] = 0;
        }
      };
      rec();
    }
  }
  return out;
}

// Canonical 4-cycles (a smallest, b < d) by trying all vertex quadruples.
inline std::set<std::array<int, 4>> four_cycles(const Plain& g) {
  std::set<std::array<int, 4>> out;
  for (int a = 0; a < g.n; ++a) {
    for (int b = a + 1; b < g.n; ++b) {
      for (int c = a + 1; c < g.n; ++c) {
        for (int d = b + 1; d < g.n; ++d) {
          if (c == b || c == d) continue;
          if (g.adj[a][b] && g.adj[b][c] && g.adj[c][d] && g.adj[d][a]) out.insert({a, b, c, d});
        }
      }
    }
  }
  return out;
}

// Random simple cubic graph by the pairing model with rejection.
inline bracekit::Graph random_cubic(int n, std::mt19937_64& rng) {
  for (;;) {
    std::vector<int> points;
    for (int v = 0; v < n; ++v) {
      for (int k = 0; k < 3; ++k) points.push_back(v);
    }
    std::shuffle(points.begin(), points.end(), rng);
    std::set<std::pair<int, int>> seen;
    bool ok = true;
    for (std::size_t i = 0; i < points.size() && ok; i += 2) {
      int u = points[i];
      int v = points[i + 1];
      if (u > v) std::swap(u, v);
      ok = u != v && seen.insert({u, v}).second;
    }
    if (ok) return to_graph(n, EdgeList(seen.begin(), seen.end()));
  }
}

// Two random cubic graphs, one edge subdivided in each, new vertices joined:
// cubic with a bridge.
inline bracekit::Graph bridged_cubic(int a, int b, std::mt19937_64& rng) {
  const auto g = random_cubic(a, rng);
  const auto h = random_cubic(b, rng);
  EdgeList edges;
  const int n = a + b + 2;
  const int x = a + b;
  const int y = a + b + 1;
  const auto& ge = g.edges();
  const auto& he = h.edges();
  const std::size_t cut_g = rng() % ge.size();
  const std::size_t cut_h = rng() % he.size();
  for (std::size_t i = 0; i < ge.size(); ++i) {
    if (i == cut_g) {
      edges.emplace_back(ge[i].u, x);
      edges.emplace_back(ge[i].v, x);
    } else {
      edges.emplace_back(ge[i].u, ge[i].v);
    }
  }
  for (std::size_t i = 0; i < he.size(); ++i) {
    if (i == cut_h) {
      edges.emplace_back(a + he[i].u, y);
      edges.emplace_back(a + he[i].v, y);
    } else {
      edges.emplace_back(a + he[i].u, a + he[i].v);
    }
  }
  edges.emplace_back(x, y);
  return to_graph(n, edges);
}

inline bracekit::Graph random_graph(int n, double p, std::mt19937_64& rng) {
  std::bernoulli_distribution coin(p);
  EdgeList edges;
  for (int u = 0; u < n; ++u) {
    for (int v = u + 1; v < n; ++v) {
      if (coin(rng)) edges.emplace_back(u, v);
    }
  }
  return to_graph(n, edges);
}

inline bracekit::Graph relabel(const bracekit::Graph& g, const std::vector<int>& perm) {
  EdgeList edges;
  for (const auto& e : g.edges()) edges.emplace_back(perm[e.u], perm[e.v]);
  return to_graph(g.order(), edges);
}

}  // namespace oracle
