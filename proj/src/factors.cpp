#include "bracekit/factors.hpp"

#include <algorithm>

#include "bracekit/detail/masks.hpp"
#include "bracekit/errors.hpp"
#include "bracekit/matching.hpp"

namespace bracekit {

using detail::bit;
using detail::lowest;

TwoFactor make_two_factor(const Graph& g, std::span<const Edge> edges) {
  const int n = g.order();
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  TwoFactor f;
  f.host_order = n;
  for (const Edge& raw : edges) {
    const Edge e = make_edge(raw.u, raw.v);
    if (g.edge_index(e) < 0) throw PreconditionError("edge " + to_string(e) + " is not in the host");
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
    f.edges.push_back(e);
  }
  std::sort(f.edges.begin(), f.edges.end());
  for (Vertex v = 0; v < n; ++v) {
    if (adj[v].size() != 2) throw PreconditionError("vertex " + std::to_string(v) + " does not have degree 2");
  }
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (Vertex start = 0; start < n; ++start) {
    if (seen[start]) continue;
    std::vector<Vertex> cycle{start};
    seen[start] = 1;
    Vertex prev = start;
    Vertex cur = std::min(adj[start][0], adj[start][1]);
    while (cur != start) {
      cycle.push_back(cur);
      seen[cur] = 1;
      const Vertex next = adj[cur][0] == prev ? adj[cur][1] : adj[cur][0];
      prev = cur;
      cur = next;
    }
    f.cycles.push_back(std::move(cycle));
  }
  return f;
}

namespace {

struct DegreeSearch {
  const Graph& g;
  const std::function<bool(std::span<const Edge>)>& visit;
  std::vector<int> degree;
  std::vector<Edge> chosen;
  std::uint64_t count = 0;
  bool stopped = false;

  // Vertices above `v` must still be able to reach degree 2 using edges
  // among vertices above `v`.
  bool feasible_after(Vertex v) const {
    const int n = g.order();
    VertexMask open = 0;
    for (Vertex u = v + 1; u < n; ++u) {
      if (degree[u] < 2) open |= bit(u);
    }
    for (Vertex u = v + 1; u < n; ++u) {
      if (degree[u] == 2) continue;
      const int reachable = std::popcount(g.neighbour_mask(u) & open & ~bit(u));
      if (degree[u] + reachable < 2) return false;
    }
    return true;
  }

  void run(Vertex v) {
    if (stopped) return;
    const int n = g.order();
    if (v == n) {
      ++count;
      std::vector<Edge> sorted = chosen;
      std::sort(sorted.begin(), sorted.end());
      if (!visit(sorted)) stopped = true;
      return;
    }
    const int need = 2 - degree[v];
    VertexMask candidates = 0;
    for (Vertex w : g.neighbours(v)) {
      if (w > v && degree[w] < 2) candidates |= bit(w);
    }
    if (std::popcount(candidates) < need) return;
    if (need == 0) {
      if (feasible_after(v)) run(v + 1);
      return;
    }
    for (VertexMask a = candidates; a && !stopped; a &= a - 1) {
      const Vertex w1 = lowest(a);
      if (need == 1) {
        take(v, w1);
        if (feasible_after(v)) run(v + 1);
        drop(v, w1);
        continue;
      }
      for (VertexMask b = a & (a - 1); b && !stopped; b &= b - 1) {
        const Vertex w2 = lowest(b);
        take(v, w1);
        take(v, w2);
        if (feasible_after(v)) run(v + 1);
        drop(v, w2);
        drop(v, w1);
      }
    }
  }

  void take(Vertex a, Vertex b) {
    ++degree[a];
    ++degree[b];
    chosen.push_back(make_edge(a, b));
  }
  void drop(Vertex a, Vertex b) {
    --degree[a];
    --degree[b];
    chosen.pop_back();
  }
};

}  // namespace

std::uint64_t for_each_two_factor(const Graph& g, const std::function<bool(std::span<const Edge>)>& visit,
                                  TwoFactorRoute route) {
  require_mask_capacity(g, "2-factor enumeration");
  if (route == TwoFactorRoute::kAutomatic) {
    route = g.is_cubic() ? TwoFactorRoute::kMatchingComplements : TwoFactorRoute::kDegreeSearch;
  }
  if (route == TwoFactorRoute::kMatchingComplements) {
    if (!g.is_cubic()) throw PreconditionError("matching-complement route needs a cubic graph");
    std::vector<Edge> complement;
    return for_each_perfect_matching(g, [&](std::span<const Edge> m) {
      complement.clear();
      std::set_difference(g.edges().begin(), g.edges().end(), m.begin(), m.end(), std::back_inserter(complement));
      return visit(complement);
    });
  }
  DegreeSearch search{g, visit, std::vector<int>(static_cast<std::size_t>(g.order()), 0), {}, 0, false};
  search.run(0);
  return search.count;
}

std::vector<TwoFactor> enumerate_two_factors(const Graph& g, std::uint64_t budget, TwoFactorRoute route) {
  if (budget < 1) throw std::invalid_argument("budget must be at least 1");
  std::vector<TwoFactor> out;
  bool exceeded = false;
  for_each_two_factor(
      g,
      [&](std::span<const Edge> edges) {
        if (out.size() >= budget) {
          exceeded = true;
          return false;
        }
        out.push_back(make_two_factor(g, edges));
        return true;
      },
      route);
  if (exceeded) throw BudgetExceeded("2-factor enumeration", out.size());
  return out;
}

bool has_two_factor(const Graph& g) {
  bool found = false;
  for_each_two_factor(g, [&](std::span<const Edge>) {
    found = true;
    return false;
  });
  return found;
}

HamiltonicityVerdict is_two_factor_hamiltonian(const Graph& g, std::uint64_t budget) {
  HamiltonicityVerdict verdict;
  bool exceeded = false;
  for_each_two_factor(g, [&](std::span<const Edge> edges) {
    if (verdict.factors_examined >= budget) {
      exceeded = true;
      return false;
    }
    ++verdict.factors_examined;
    verdict.has_two_factor = true;
    TwoFactor f = make_two_factor(g, edges);
    if (!f.is_hamiltonian_cycle()) {
      verdict.two_factor_hamiltonian = false;
      verdict.witness = std::move(f);
      return false;
    }
    return true;
  });
  if (exceeded) throw BudgetExceeded("2-factor Hamiltonicity", verdict.factors_examined);
  return verdict;
}

}  // namespace bracekit
