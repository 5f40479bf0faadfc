#include "bracekit/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace bracekit {

namespace {

// Colour refinement run on both graphs at once so that colour ids are
// comparable across them.
std::pair<std::vector<int>, std::vector<int>> refine(const Graph& a, const Graph& b) {
  std::vector<int> ca(a.order()), cb(b.order());
  for (Vertex v = 0; v < a.order(); ++v) ca[v] = a.degree(v);
  for (Vertex v = 0; v < b.order(); ++v) cb[v] = b.degree(v);
  for (int round = 0; round < a.order(); ++round) {
    std::map<std::vector<int>, int> ids;
    auto signature = [](const Graph& g, const std::vector<int>& c, Vertex v) {
      std::vector<int> sig{c[v]};
      std::vector<int> around;
      for (Vertex w : g.neighbours(v)) around.push_back(c[w]);
      std::sort(around.begin(), around.end());
      sig.insert(sig.end(), around.begin(), around.end());
      return sig;
    };
    std::vector<std::vector<int>> sa(a.order()), sb(b.order());
    for (Vertex v = 0; v < a.order(); ++v) ids.emplace(sa[v] = signature(a, ca, v), 0);
    for (Vertex v = 0; v < b.order(); ++v) ids.emplace(sb[v] = signature(b, cb, v), 0);
    int next = 0;
    for (auto& [sig, id] : ids) id = next++;
    std::vector<int> na(a.order()), nb(b.order());
    for (Vertex v = 0; v < a.order(); ++v) na[v] = ids[sa[v]];
    for (Vertex v = 0; v < b.order(); ++v) nb[v] = ids[sb[v]];
    const auto classes = [](const std::vector<int>& c) {
      std::vector<int> s = c;
      std::sort(s.begin(), s.end());
      return std::unique(s.begin(), s.end()) - s.begin();
    };
    const bool stable = classes(na) == classes(ca) && classes(nb) == classes(cb);
    ca = std::move(na);
    cb = std::move(nb);
    if (stable) break;
  }
  return {ca, cb};
}

struct Matcher {
  const Graph& a;
  const Graph& b;
  const std::vector<int>& ca;
  const std::vector<int>& cb;
  std::vector<Vertex> order;
  std::vector<Vertex> image;
  std::vector<char> used;

  bool consistent(Vertex v, Vertex w) const {
    if (ca[v] != cb[w] || used[w]) return false;
    for (Vertex u = 0; u < a.order(); ++u) {
      if (image[u] < 0) continue;
      if (a.adjacent(u, v) != b.adjacent(image[u], w)) return false;
    }
    return true;
  }

  bool extend(std::size_t depth) {
    if (depth == order.size()) return true;
    const Vertex v = order[depth];
    for (Vertex w = 0; w < b.order(); ++w) {
      if (!consistent(v, w)) continue;
      image[v] = w;
      used[w] = 1;
      if (extend(depth + 1)) return true;
      image[v] = -1;
      used[w] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b) {
  if (a.order() != b.order() || a.size() != b.size()) return std::nullopt;
  if (degree_sequence(a) != degree_sequence(b)) return std::nullopt;
  const auto [ca, cb] = refine(a, b);
  {
    std::vector<int> sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  Matcher m{a, b, ca, cb, {}, std::vector<Vertex>(a.order(), -1), std::vector<char>(b.order(), 0)};
  // breadth-first order so each new vertex has a mapped neighbour
  std::vector<char> queued(a.order(), 0);
  for (Vertex root = 0; root < a.order(); ++root) {
    if (queued[root]) continue;
    queued[root] = 1;
    std::size_t head = m.order.size();
    m.order.push_back(root);
    while (head < m.order.size()) {
      const Vertex v = m.order[head++];
      for (Vertex w : a.neighbours(v)) {
        if (!queued[w]) {
          queued[w] = 1;
          m.order.push_back(w);
        }
      }
    }
  }
  if (!m.extend(0)) return std::nullopt;
  return m.image;
}

bool are_isomorphic(const Graph& a, const Graph& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace bracekit
