#include "bracekit/pfaffian.hpp"

#include <algorithm>
#include <bit>
#include <set>

#include "bracekit/detail/masks.hpp"
#include "bracekit/errors.hpp"
#include "bracekit/fixtures.hpp"
#include "bracekit/isomorphism.hpp"
#include "bracekit/matching.hpp"

namespace bracekit {

using detail::bit;

Vertex Orientation::tail(const Graph& g, int edge) const {
  const Edge& e = g.edges()[edge];
  return reversed[edge] ? e.v : e.u;
}

Vertex Orientation::head(const Graph& g, int edge) const {
  const Edge& e = g.edges()[edge];
  return reversed[edge] ? e.u : e.v;
}

Orientation Orientation::switched_at(const Graph& g, Vertex v) const {
  Orientation o = *this;
  for (Vertex w : g.neighbours(v)) {
    const int i = g.edge_index(v, w);
    o.reversed[i] ^= 1;
  }
  return o;
}

namespace {

void require_perfect_matching(const Graph& g) {
  require_mask_capacity(g, "Pfaffian routines");
  if (!has_perfect_matching(g)) throw PreconditionError("graph has no perfect matching");
}

void require_orientation(const Graph& g, const Orientation& o) {
  if (static_cast<int>(o.reversed.size()) != g.size()) throw PreconditionError("orientation does not match the graph");
}

// Visits every even cycle in canonical form; stops when visit returns false.
template <typename Visit>
void for_each_even_cycle(const Graph& g, std::uint64_t budget, Visit&& visit) {
  const int n = g.order();
  std::vector<Vertex> path;
  std::uint64_t seen = 0;
  bool stopped = false;
  auto dfs = [&](auto&& self, Vertex s, Vertex v, VertexMask on_path) -> void {
    for (Vertex w : g.neighbours(v)) {
      if (stopped) return;
      if (w == s) {
        if (path.size() >= 4 && path.size() % 2 == 0 && path[1] < path.back()) {
          if (++seen > budget) throw BudgetExceeded("even cycle enumeration", seen - 1);
          if (!visit(path, on_path)) stopped = true;
        }
        continue;
      }
      if (w < s || (on_path & bit(w))) continue;
      path.push_back(w);
      self(self, s, w, on_path | bit(w));
      path.pop_back();
    }
  };
  for (Vertex s = 0; s < n && !stopped; ++s) {
    path.assign(1, s);
    dfs(dfs, s, s, bit(s));
  }
}

template <typename Visit>
void for_each_nice_cycle(const Graph& g, std::uint64_t budget, Visit&& visit) {
  detail::MaskGraph mg(g);
  for_each_even_cycle(g, budget, [&](const std::vector<Vertex>& cycle, VertexMask on_cycle) {
    if (!mg.has_perfect_matching(mg.all() & ~on_cycle)) return true;
    return visit(cycle);
  });
}

// Number of cycle edges traversed from smaller to larger endpoint, plus the
// edge indices of the cycle.
int reference_forward(const Graph& g, const std::vector<Vertex>& cycle, std::vector<int>* edges) {
  int forward = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % cycle.size()];
    forward += a < b;
    if (edges) edges->push_back(g.edge_index(a, b));
  }
  return forward;
}

// Linear system over GF(2) with rows kept in echelon form by lowest bit.
class Gf2System {
 public:
  explicit Gf2System(int vars) : vars_(vars), words_((vars + 63) / 64), pivot_(vars) {}

  using Row = std::vector<std::uint64_t>;

  Row zero() const { return Row(words_, 0); }
  static void set(Row& r, int i) { r[i / 64] ^= std::uint64_t{1} << (i % 64); }
  static bool get(const Row& r, int i) { return (r[i / 64] >> (i % 64)) & 1; }

  /// Adds an equation; false when the system becomes inconsistent.
  bool add(Row row, bool rhs) {
    for (int w = 0; w < words_; ++w) {
      while (row[w]) {
        const int p = w * 64 + std::countr_zero(row[w]);
        if (!pivot_[p]) {
          pivot_[p] = Entry{std::move(row), rhs};
          return true;
        }
        for (int k = w; k < words_; ++k) row[k] ^= pivot_[p]->row[k];
        rhs ^= pivot_[p]->rhs;
      }
    }
    return !rhs;
  }

  std::vector<char> solution() const {
    std::vector<char> x(vars_, 0);
    for (int p = vars_ - 1; p >= 0; --p) {
      if (!pivot_[p]) continue;
      bool value = pivot_[p]->rhs;
      for (int j = p + 1; j < vars_; ++j) {
        if (get(pivot_[p]->row, j) && x[j]) value = !value;
      }
      x[p] = value;
    }
    return x;
  }

 private:
  struct Entry {
    Row row;
    bool rhs;
  };
  int vars_;
  int words_;
  std::vector<std::optional<Entry>> pivot_;
};

std::optional<Orientation> by_class_enumeration(const Graph& g, const Budgets& budgets) {
  const int n = g.order();
  const int m = g.size();
  // breadth-first spanning forest
  std::vector<char> tree(m, 0);
  std::vector<char> reached(n, 0);
  for (Vertex root = 0; root < n; ++root) {
    if (reached[root]) continue;
    reached[root] = 1;
    std::vector<Vertex> queue{root};
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const Vertex v = queue[head];
      for (Vertex w : g.neighbours(v)) {
        if (reached[w]) continue;
        reached[w] = 1;
        tree[g.edge_index(v, w)] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<int> cotree;
  std::vector<int> slot(m, -1);
  for (int i = 0; i < m; ++i) {
    if (!tree[i]) {
      slot[i] = static_cast<int>(cotree.size());
      cotree.push_back(i);
    }
  }
  const int k = static_cast<int>(cotree.size());
  if (k > budgets.orientation_class_exponent) {
    throw BudgetExceeded("orientation class search (2^" + std::to_string(k) + " classes)", 0);
  }
  std::set<std::pair<std::uint64_t, int>> constraints;
  for_each_nice_cycle(g, budgets.cycles, [&](const std::vector<Vertex>& cycle) {
    std::vector<int> edges;
    const int forward = reference_forward(g, cycle, &edges);
    std::uint64_t mask = 0;
    for (int e : edges) {
      if (slot[e] >= 0) mask ^= std::uint64_t{1} << slot[e];
    }
    constraints.emplace(mask, (forward + 1) % 2);
    return true;
  });
  const std::vector<std::pair<std::uint64_t, int>> list(constraints.begin(), constraints.end());
  const std::uint64_t classes = std::uint64_t{1} << k;
  for (std::uint64_t c = 0; c < classes; ++c) {
    bool ok = true;
    for (const auto& [mask, rhs] : list) {
      if ((std::popcount(mask & c) & 1) != rhs) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    Orientation o = Orientation::reference(g);
    for (int j = 0; j < k; ++j) o.reversed[cotree[j]] = (c >> j) & 1;
    return o;
  }
  return std::nullopt;
}

std::optional<Orientation> by_cycle_system(const Graph& g, const Budgets& budgets) {
  Gf2System system(g.size());
  bool consistent = true;
  for_each_nice_cycle(g, budgets.cycles, [&](const std::vector<Vertex>& cycle) {
    std::vector<int> edges;
    const int forward = reference_forward(g, cycle, &edges);
    auto row = system.zero();
    for (int e : edges) Gf2System::set(row, e);
    consistent = system.add(std::move(row), (forward + 1) % 2);
    return consistent;
  });
  if (!consistent) return std::nullopt;
  return Orientation{system.solution()};
}

// Parity of the permutation u1 v1 u2 v2 ... for a matching with u_i < v_i.
bool permutation_parity(std::span<const Edge> matching) {
  std::vector<Vertex> seq;
  for (const Edge& e : matching) {
    seq.push_back(e.u);
    seq.push_back(e.v);
  }
  bool odd = false;
  for (std::size_t i = 0; i < seq.size(); ++i) {
    for (std::size_t j = i + 1; j < seq.size(); ++j) odd ^= seq[i] > seq[j];
  }
  return odd;
}

std::optional<Orientation> by_matching_system(const Graph& g, const Budgets& budgets) {
  Gf2System system(g.size());
  std::optional<Gf2System::Row> first;
  bool first_parity = false;
  bool consistent = true;
  std::uint64_t seen = 0;
  bool exceeded = false;
  for_each_perfect_matching(g, [&](std::span<const Edge> m) {
    if (seen >= budgets.matchings) {
      exceeded = true;
      return false;
    }
    ++seen;
    auto row = system.zero();
    for (const Edge& e : m) Gf2System::set(row, g.edge_index(e));
    const bool parity = permutation_parity(m);
    if (!first) {
      first = row;
      first_parity = parity;
      return true;
    }
    for (std::size_t w = 0; w < row.size(); ++w) row[w] ^= (*first)[w];
    consistent = system.add(std::move(row), parity != first_parity);
    return consistent;
  });
  if (exceeded) throw BudgetExceeded("perfect matching sign system", seen);
  if (!consistent) return std::nullopt;
  return Orientation{system.solution()};
}

}  // namespace

std::vector<NiceCycle> nice_cycles(const Graph& g, std::uint64_t budget) {
  require_perfect_matching(g);
  std::vector<NiceCycle> out;
  for_each_nice_cycle(g, budget, [&](const std::vector<Vertex>& cycle) {
    out.push_back({cycle});
    return true;
  });
  std::sort(out.begin(), out.end());
  return out;
}

bool is_oddly_oriented(const Graph& g, const Orientation& o, const std::vector<Vertex>& cycle) {
  require_orientation(g, o);
  if (cycle.size() < 3) throw PreconditionError("cycle needs at least three vertices");
  int forward = 0;
  for (std::size_t i = 0; i < cycle.size(); ++i) {
    const Vertex a = cycle[i];
    const Vertex b = cycle[(i + 1) % cycle.size()];
    const int e = g.edge_index(a, b);
    if (e < 0) throw PreconditionError("cycle uses a non-edge " + to_string(make_edge(a, b)));
    forward += o.tail(g, e) == a;
  }
  return forward % 2 == 1;
}

bool is_pfaffian_orientation(const Graph& g, const Orientation& o, std::uint64_t budget) {
  require_perfect_matching(g);
  require_orientation(g, o);
  bool ok = true;
  for_each_nice_cycle(g, budget, [&](const std::vector<Vertex>& cycle) {
    ok = is_oddly_oriented(g, o, cycle);
    return ok;
  });
  return ok;
}

std::optional<Orientation> find_pfaffian_orientation(const Graph& g, const Budgets& budgets, PfaffianSearch search) {
  require_perfect_matching(g);
  switch (search) {
    case PfaffianSearch::kClassEnumeration: return by_class_enumeration(g, budgets);
    case PfaffianSearch::kCycleSystem: return by_cycle_system(g, budgets);
    case PfaffianSearch::kMatchingSystem: return by_matching_system(g, budgets);
  }
  return std::nullopt;
}

bool is_pfaffian(const Graph& g, const Budgets& budgets) {
  return find_pfaffian_orientation(g, budgets, PfaffianSearch::kMatchingSystem).has_value();
}

GirthTheoremVerdict check_pfaffian_girth_theorem(const Graph& g, const Budgets& budgets) {
  using Branch = GirthTheoremVerdict::Branch;
  if (!is_brace(g)) throw PreconditionError("graph is not a brace");
  if (!is_pfaffian(g, budgets)) return {Branch::kNotPfaffian};
  if (are_isomorphic(g, fixture(FixtureId::kHeawood))) return {Branch::kHeawood};
  if (girth(g) == 4) return {Branch::kGirthFour};
  return {Branch::kViolation};
}

}  // namespace bracekit
