#include "bracekit/cuts.hpp"

#include <algorithm>

#include "bracekit/detail/masks.hpp"
#include "bracekit/matching.hpp"

namespace bracekit {

using detail::bit;

std::vector<Vertex> EdgeCut::complement() const {
  std::vector<Vertex> rest;
  for (Vertex v = 0; v < host_order; ++v) {
    if (!in_shore(v)) rest.push_back(v);
  }
  return rest;
}

bool EdgeCut::in_shore(Vertex v) const { return std::binary_search(shore.begin(), shore.end(), v); }

EdgeCut cut_around(const Graph& g, std::span<const Vertex> shore) {
  EdgeCut cut;
  cut.host_order = g.order();
  cut.shore.assign(shore.begin(), shore.end());
  std::sort(cut.shore.begin(), cut.shore.end());
  if (cut.shore.empty()) throw PreconditionError("cut shore is empty");
  if (std::adjacent_find(cut.shore.begin(), cut.shore.end()) != cut.shore.end()) {
    throw PreconditionError("cut shore repeats a vertex");
  }
  if (cut.shore.front() < 0 || cut.shore.back() >= g.order()) throw PreconditionError("cut shore vertex out of range");
  if (static_cast<int>(cut.shore.size()) == g.order()) throw PreconditionError("cut shore is the whole vertex set");
  std::vector<char> inside(static_cast<std::size_t>(g.order()), 0);
  for (Vertex v : cut.shore) inside[v] = 1;
  for (const Edge& e : g.edges()) {
    if (inside[e.u] != inside[e.v]) cut.delta.push_back(e);
  }
  return cut;
}

namespace {

void require_same_host(const Graph& g, const EdgeCut& cut) {
  if (cut.host_order != g.order() || cut_around(g, cut.shore).delta != cut.delta) {
    throw PreconditionError("cut does not belong to this graph");
  }
}

VertexMask shore_mask(const EdgeCut& cut) {
  VertexMask m = 0;
  for (Vertex v : cut.shore) m |= bit(v);
  return m;
}

// Whether every perfect matching crosses the shore exactly once.
bool crosses_once_always(const Graph& g, VertexMask shore, std::uint64_t budget, std::uint64_t* checked = nullptr) {
  std::uint64_t seen = 0;
  bool ok = true;
  bool exceeded = false;
  for_each_perfect_matching(g, [&](std::span<const Edge> m) {
    if (seen >= budget) {
      exceeded = true;
      return false;
    }
    ++seen;
    int crossing = 0;
    for (const Edge& e : m) crossing += ((shore >> e.u) & 1) != ((shore >> e.v) & 1);
    if (crossing != 1) {
      ok = false;
      return false;
    }
    return true;
  });
  if (exceeded) throw BudgetExceeded("tightness check", seen);
  if (checked) *checked = seen;
  return ok;
}

}  // namespace

bool is_induced_matching(const Graph& g, std::span<const Edge> edges) {
  if (!is_matching(g, edges)) return false;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    for (std::size_t j = i + 1; j < edges.size(); ++j) {
      for (Vertex a : {edges[i].u, edges[i].v}) {
        for (Vertex b : {edges[j].u, edges[j].v}) {
          if (g.adjacent(a, b)) return false;
        }
      }
    }
  }
  return true;
}

bool is_quasi_tight(const Graph& g, const EdgeCut& cut, std::uint64_t budget) {
  require_mask_capacity(g, "quasi-tightness");
  require_same_host(g, cut);
  return crosses_once_always(g, shore_mask(cut), budget);
}

bool is_tight(const Graph& g, const EdgeCut& cut, std::uint64_t budget) {
  if (!is_matching_covered(g)) throw NotMatchingCovered();
  return is_quasi_tight(g, cut, budget);
}

namespace {

EdgeCut normalised(const Graph& g, const EdgeCut& cut) {
  if (cut.in_shore(0)) return cut;
  return cut_around(g, cut.complement());
}

std::optional<EdgeCut> cubic_fast_path(const Graph& g, CutSearchOrder order) {
  const auto& edges = g.edges();
  const int m = g.size();
  std::vector<std::array<int, 3>> triples;
  for (int a = 0; a < m; ++a) {
    for (int b = a + 1; b < m; ++b) {
      for (int c = b + 1; c < m; ++c) {
        const std::array<Edge, 3> f{edges[a], edges[b], edges[c]};
        if (!is_induced_matching(g, f)) continue;
        triples.push_back({a, b, c});
      }
    }
  }
  if (order == CutSearchOrder::kDescending) std::reverse(triples.begin(), triples.end());
  for (const auto& t : triples) {
    const std::array<Edge, 3> f{edges[t[0]], edges[t[1]], edges[t[2]]};
    const Graph rest = g.without_edges(f);
    const auto comp = components(rest);
    if (*std::max_element(comp.begin(), comp.end()) == 0) continue;
    std::vector<Vertex> shore;
    for (Vertex v = 0; v < g.order(); ++v) {
      if (comp[v] == comp[0]) shore.push_back(v);
    }
    EdgeCut cut = cut_around(g, shore);
    if (cut.trivial() || cut.delta.size() != 3) continue;
    return cut;
  }
  return std::nullopt;
}

// Visits odd shores of size `size` in lexicographic order over `labels`.
template <typename Visit>
bool for_each_shore(const std::vector<Vertex>& labels, int size, Visit&& visit) {
  const int n = static_cast<int>(labels.size());
  std::vector<int> idx(static_cast<std::size_t>(size));
  for (int i = 0; i < size; ++i) idx[i] = i;
  std::vector<Vertex> shore(static_cast<std::size_t>(size));
  while (true) {
    for (int i = 0; i < size; ++i) shore[i] = labels[idx[i]];
    if (visit(shore)) return true;
    int i = size - 1;
    while (i >= 0 && idx[i] == n - size + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::optional<EdgeCut> shore_search(const Graph& g, const Budgets& budgets, CutSearchOrder order) {
  const int n = g.order();
  const int half = n / 2;
  const int limit = std::min(half, budgets.cut_shore_size);
  std::vector<Vertex> labels(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) labels[v] = order == CutSearchOrder::kAscending ? v : n - 1 - v;
  std::vector<int> sizes;
  for (int s = 3; s <= limit; s += 2) sizes.push_back(s);
  if (order == CutSearchOrder::kDescending) std::reverse(sizes.begin(), sizes.end());
  std::optional<EdgeCut> found;
  for (int s : sizes) {
    for_each_shore(labels, s, [&](const std::vector<Vertex>& shore) {
      // each cut is visited through its smaller shore; at equal sizes only
      // through the shore containing vertex 0
      if (2 * s == n && std::find(shore.begin(), shore.end(), 0) == shore.end()) return false;
      VertexMask mask = 0;
      for (Vertex v : shore) mask |= bit(v);
      if (!crosses_once_always(g, mask, budgets.matchings)) return false;
      found = normalised(g, cut_around(g, shore));
      return true;
    });
    if (found) return found;
  }
  if (limit < half) throw BudgetExceeded("tight cut search (shore size limit)", static_cast<std::uint64_t>(limit));
  return std::nullopt;
}

}  // namespace

std::optional<EdgeCut> find_nontrivial_tight_cut(const Graph& g, const Budgets& budgets, CutSearchOrder order) {
  require_mask_capacity(g, "tight cut search");
  if (!is_matching_covered(g)) throw NotMatchingCovered();
  if (g.is_cubic() && is_bipartite(g) && is_k_connected(g, 3)) {
    if (auto cut = cubic_fast_path(g, order)) return normalised(g, *cut);
    return std::nullopt;
  }
  return shore_search(g, budgets, order);
}

namespace {

Contraction contract_outside(const Graph& g, const std::vector<Vertex>& keep, const std::vector<Edge>& delta) {
  std::vector<int> position(static_cast<std::size_t>(g.order()), -1);
  for (std::size_t i = 0; i < keep.size(); ++i) position[keep[i]] = static_cast<int>(i);
  const int hub = static_cast<int>(keep.size());
  std::vector<std::pair<int, int>> pairs;
  for (const Edge& e : g.edges()) {
    const int a = position[e.u];
    const int b = position[e.v];
    if (a >= 0 && b >= 0) pairs.emplace_back(a, b);
  }
  for (const Edge& e : delta) {
    const int inside = position[e.u] >= 0 ? position[e.u] : position[e.v];
    pairs.emplace_back(inside, hub);
  }
  Contraction c{Graph::simplified(hub + 1, pairs), hub, keep};
  c.origin.push_back(-1);
  return c;
}

}  // namespace

std::pair<Contraction, Contraction> tight_cut_contractions(const Graph& g, const EdgeCut& cut, std::uint64_t budget) {
  require_same_host(g, cut);
  if (cut.trivial()) throw PreconditionError("contraction needs a non-trivial cut");
  if (!is_tight(g, cut, budget)) throw PreconditionError("cut is not tight");
  return {contract_outside(g, cut.shore, cut.delta), contract_outside(g, cut.complement(), cut.delta)};
}

DecompositionResult decompose(const Graph& g, const Budgets& budgets, CutSearchOrder order) {
  if (!is_matching_covered(g)) throw NotMatchingCovered();
  DecompositionResult result;
  std::vector<Graph> work{g};
  while (!work.empty()) {
    Graph current = std::move(work.back());
    work.pop_back();
    auto cut = find_nontrivial_tight_cut(current, budgets, order);
    if (!cut) {
      const PieceKind kind = is_bipartite(current) ? PieceKind::kBrace : PieceKind::kBrick;
      result.pieces.push_back({std::move(current), kind});
      continue;
    }
    auto [first, second] = tight_cut_contractions(current, *cut, budgets.matchings);
    result.cut_trace.push_back({current, *cut});
    work.push_back(std::move(second.graph));
    work.push_back(std::move(first.graph));
  }
  return result;
}

CutBalance verify_cut_balance(const Graph& g, const EdgeCut& cut, std::uint64_t budget) {
  using Reason = CutHypothesisError::Reason;
  require_same_host(g, cut);
  const auto parts = bipartition(g);
  if (!parts) throw CutHypothesisError(Reason::kNotBipartite, "host is not bipartite");
  if (cut.delta.empty()) throw CutHypothesisError(Reason::kEmptyCut, "cut has no edges");
  // Colour class holding the shore-side endpoints plays the role of A.
  int side_colour = -1;
  for (const Edge& e : cut.delta) {
    const Vertex inner = cut.in_shore(e.u) ? e.u : e.v;
    const int c = parts->colour[inner];
    if (side_colour == -1) side_colour = c;
    if (c != side_colour) {
      throw CutHypothesisError(Reason::kMixedEndpointColours, "shore-side endpoints lie in both colour classes");
    }
  }
  bool single_crossing = false;
  for (const Edge& e : cut.delta) {
    std::vector<Edge> others;
    for (const Edge& f : cut.delta) {
      if (f != e) others.push_back(f);
    }
    const std::array<Edge, 1> forced{e};
    if (perfect_matching_with(g, forced, others)) {
      single_crossing = true;
      break;
    }
  }
  if (!single_crossing) {
    throw CutHypothesisError(Reason::kNoSingleCrossingMatching, "no perfect matching meets the cut exactly once");
  }
  CutBalance balance;
  for (Vertex v = 0; v < g.order(); ++v) {
    const bool a_side = parts->colour[v] == side_colour;
    if (cut.in_shore(v)) {
      (a_side ? balance.shore_a : balance.shore_b)++;
    } else {
      (a_side ? balance.far_a : balance.far_b)++;
    }
  }
  balance.every_matching_crosses_once = crosses_once_always(g, shore_mask(cut), budget, &balance.matchings_checked);
  return balance;
}

}  // namespace bracekit
