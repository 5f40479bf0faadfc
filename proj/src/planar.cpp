#include "bracekit/planar.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>

#include "bracekit/errors.hpp"

namespace bracekit {

RotationSystem make_rotation_system(const Graph& g, std::vector<std::vector<Vertex>> order) {
  if (static_cast<int>(order.size()) != g.order()) {
    throw PreconditionError("rotation lists " + std::to_string(order.size()) + " vertices, graph has " +
                            std::to_string(g.order()));
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    std::vector<Vertex> sorted = order[v];
    std::sort(sorted.begin(), sorted.end());
    const auto nb = g.neighbours(v);
    if (!std::equal(sorted.begin(), sorted.end(), nb.begin(), nb.end())) {
      throw PreconditionError("rotation at vertex " + std::to_string(v) + " is not a permutation of its neighbours");
    }
  }
  return RotationSystem{g.order(), std::move(order)};
}

FaceTrace trace_faces(const Graph& g, const RotationSystem& r) {
  const RotationSystem checked = make_rotation_system(g, r.order);
  if (!is_connected(g)) throw PreconditionError("face tracing needs a connected host");
  const int n = g.order();
  // position[v][i]: index of neighbour i (in sorted order) within v's rotation
  std::vector<std::vector<int>> slot(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) {
    const auto nb = g.neighbours(v);
    slot[v].resize(nb.size());
    for (std::size_t i = 0; i < checked.order[v].size(); ++i) {
      const auto at = std::lower_bound(nb.begin(), nb.end(), checked.order[v][i]) - nb.begin();
      slot[v][at] = static_cast<int>(i);
    }
  }
  auto dart_slot = [&](Vertex from, Vertex to) {
    const auto nb = g.neighbours(from);
    return static_cast<int>(std::lower_bound(nb.begin(), nb.end(), to) - nb.begin());
  };
  std::vector<std::vector<char>> used(static_cast<std::size_t>(n));
  for (Vertex v = 0; v < n; ++v) used[v].assign(g.neighbours(v).size(), 0);

  FaceTrace trace;
  for (Vertex start = 0; start < n; ++start) {
    for (Vertex first : checked.order[start]) {
      if (used[start][dart_slot(start, first)]) continue;
      std::vector<Vertex> walk;
      Vertex u = start;
      Vertex v = first;
      while (!used[u][dart_slot(u, v)]) {
        used[u][dart_slot(u, v)] = 1;
        walk.push_back(u);
        const auto& rot = checked.order[v];
        const int at = slot[v][dart_slot(v, u)];
        const Vertex w = rot[(at + 1) % rot.size()];
        u = v;
        v = w;
      }
      trace.faces.push_back(std::move(walk));
    }
  }
  const int faces = g.size() == 0 ? 1 : static_cast<int>(trace.faces.size());
  trace.genus = (2 - n + g.size() - faces) / 2;
  return trace;
}

int count_quadrilateral_faces(const Graph& g, const RotationSystem& r) {
  const FaceTrace t = trace_faces(g, r);
  if (!t.planar()) throw PreconditionError("rotation has genus " + std::to_string(t.genus));
  return static_cast<int>(std::count_if(t.faces.begin(), t.faces.end(), [](const auto& f) { return f.size() == 4; }));
}

FourCycle canonical_four_cycle(const FourCycle& c) {
  FourCycle best = c;
  for (int start = 0; start < 4; ++start) {
    for (int dir : {1, 3}) {
      FourCycle cand;
      for (int i = 0; i < 4; ++i) cand[i] = c[(start + dir * i) % 4];
      best = std::min(best, cand);
    }
  }
  return best;
}

std::array<Edge, 4> four_cycle_edges(const FourCycle& c) {
  return {make_edge(c[0], c[1]), make_edge(c[1], c[2]), make_edge(c[2], c[3]), make_edge(c[3], c[0])};
}

bool is_four_cycle(const Graph& g, const FourCycle& c) {
  for (int i = 0; i < 4; ++i) {
    if (c[i] < 0 || c[i] >= g.order()) return false;
    for (int j = i + 1; j < 4; ++j) {
      if (c[i] == c[j]) return false;
    }
  }
  for (int i = 0; i < 4; ++i) {
    if (!g.adjacent(c[i], c[(i + 1) % 4])) return false;
  }
  return true;
}

std::vector<FourCycle> all_four_cycles(const Graph& g) {
  std::vector<FourCycle> out;
  for (Vertex a = 0; a < g.order(); ++a) {
    const auto nb = g.neighbours(a);
    for (std::size_t i = 0; i < nb.size(); ++i) {
      const Vertex b = nb[i];
      if (b < a) continue;
      for (std::size_t j = i + 1; j < nb.size(); ++j) {
        const Vertex d = nb[j];
        for (Vertex c : g.neighbours(b)) {
          if (c > a && c != d && g.adjacent(c, d)) out.push_back({a, b, c, d});
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool share_edge(const FourCycle& x, const FourCycle& y) {
  const auto ex = four_cycle_edges(x);
  const auto ey = four_cycle_edges(y);
  for (const Edge& e : ex) {
    if (std::find(ey.begin(), ey.end(), e) != ey.end()) return true;
  }
  return false;
}

}  // namespace

std::optional<FourCycle> edge_disjoint_partner(const Graph& g, const FourCycle& c) {
  if (!is_four_cycle(g, c)) throw PreconditionError("not a 4-cycle of the graph");
  for (const FourCycle& other : all_four_cycles(g)) {
    if (!share_edge(c, other)) return other;
  }
  return std::nullopt;
}

std::optional<std::array<FourCycle, 3>> three_edge_disjoint_four_cycles(const Graph& g) {
  const auto cycles = all_four_cycles(g);
  const std::size_t k = cycles.size();
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = i + 1; j < k; ++j) {
      if (share_edge(cycles[i], cycles[j])) continue;
      for (std::size_t l = j + 1; l < k; ++l) {
        if (!share_edge(cycles[i], cycles[l]) && !share_edge(cycles[j], cycles[l])) {
          return std::array<FourCycle, 3>{cycles[i], cycles[j], cycles[l]};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_minor_witness(const Graph& g, const Graph& h, const std::vector<std::vector<Vertex>>& branch_sets) {
  if (static_cast<int>(branch_sets.size()) != h.order()) return false;
  std::vector<int> owner(g.order(), -1);
  for (std::size_t i = 0; i < branch_sets.size(); ++i) {
    const auto& set = branch_sets[i];
    if (set.empty()) return false;
    for (Vertex v : set) {
      if (v < 0 || v >= g.order() || owner[v] >= 0) return false;
      owner[v] = static_cast<int>(i);
    }
    std::vector<Vertex> sorted = set;
    std::sort(sorted.begin(), sorted.end());
    if (!is_connected(g.induced(sorted))) return false;
  }
  for (const Edge& e : h.edges()) {
    bool realised = false;
    for (Vertex a : branch_sets[e.u]) {
      for (Vertex b : g.neighbours(a)) realised = realised || owner[b] == e.v;
    }
    if (!realised) return false;
  }
  return true;
}

RotationSystem read_rotation_system(const Graph& g, std::istream& in) {
  std::vector<std::vector<Vertex>> order(static_cast<std::size_t>(g.order()));
  std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    const auto colon = line.find(':');
    if (colon == std::string::npos) throw ParseError(line_no, "missing ':' in rotation line");
    std::istringstream head(line.substr(0, colon));
    Vertex v = -1;
    std::string extra;
    if (!(head >> v) || (head >> extra)) throw ParseError(line_no, "bad vertex label");
    if (v < 0 || v >= g.order()) throw ParseError(line_no, "vertex out of range");
    if (seen[v]) throw ParseError(line_no, "vertex listed twice");
    seen[v] = 1;
    std::istringstream tail(line.substr(colon + 1));
    std::string token;
    while (tail >> token) {
      try {
        std::size_t used = 0;
        const int w = std::stoi(token, &used);
        if (used != token.size()) throw ParseError(line_no, "bad neighbour '" + token + "'");
        order[v].push_back(w);
      } catch (const std::logic_error&) {
        throw ParseError(line_no, "bad neighbour '" + token + "'");
      }
    }
  }
  for (Vertex v = 0; v < g.order(); ++v) {
    if (!seen[v]) throw ParseError(line_no, "vertex " + std::to_string(v) + " has no rotation line");
  }
  return make_rotation_system(g, std::move(order));
}

void write_rotation_system(std::ostream& out, const RotationSystem& r) {
  for (Vertex v = 0; v < r.host_order; ++v) {
    out << v << ':';
    for (Vertex w : r.order[v]) out << ' ' << w;
    out << '\n';
  }
}

}  // namespace bracekit
