#include "bracekit/constructions.hpp"

#include <algorithm>
#include <istream>
#include <sstream>

#include "bracekit/errors.hpp"
#include "bracekit/fixtures.hpp"

namespace bracekit {

namespace {

constexpr std::array<Pairing, 6> kPairings{
    Pairing{0, 1, 2}, Pairing{0, 2, 1}, Pairing{1, 0, 2}, Pairing{1, 2, 0}, Pairing{2, 0, 1}, Pairing{2, 1, 0},
};

bool is_permutation_of_three(const Pairing& p) {
  return std::find(kPairings.begin(), kPairings.end(), p) != kPairings.end();
}

}  // namespace

std::span<const Pairing> all_pairings() { return kPairings; }

StarProduct star_product(const StarSpec& spec) {
  const Graph& g1 = spec.g1;
  const Graph& g2 = spec.g2;
  if (spec.v1 < 0 || spec.v1 >= g1.order() || g1.degree(spec.v1) != 3) {
    throw PreconditionError("first vertex must have degree 3");
  }
  if (spec.v2 < 0 || spec.v2 >= g2.order() || g2.degree(spec.v2) != 3) {
    throw PreconditionError("second vertex must have degree 3");
  }
  if (!is_permutation_of_three(spec.pairing)) throw PreconditionError("pairing is not a bijection");

  StarProduct out{Graph(1, std::span<const Edge>{}), {}, std::vector<Vertex>(g1.order(), -1),
                  std::vector<Vertex>(g2.order(), -1)};
  int next = 0;
  for (Vertex u = 0; u < g1.order(); ++u) {
    if (u != spec.v1) out.from_first[u] = next++;
  }
  const int first_count = next;
  for (Vertex u = 0; u < g2.order(); ++u) {
    if (u != spec.v2) out.from_second[u] = next++;
  }
  std::vector<Edge> edges;
  for (const Edge& e : g1.edges()) {
    if (e.u != spec.v1 && e.v != spec.v1) edges.push_back(make_edge(out.from_first[e.u], out.from_first[e.v]));
  }
  for (const Edge& e : g2.edges()) {
    if (e.u != spec.v2 && e.v != spec.v2) edges.push_back(make_edge(out.from_second[e.u], out.from_second[e.v]));
  }
  const auto n1 = g1.neighbours(spec.v1);
  const auto n2 = g2.neighbours(spec.v2);
  for (int i = 0; i < 3; ++i) {
    edges.push_back(make_edge(out.from_first[n1[i]], out.from_second[n2[spec.pairing[i]]]));
  }
  out.graph = Graph(next, edges);
  std::vector<Vertex> shore(static_cast<std::size_t>(first_count));
  for (int i = 0; i < first_count; ++i) shore[i] = i;
  out.principal_cut = cut_around(out.graph, shore);
  return out;
}

bool principal_cut_is_induced_matching(const Graph& g, const EdgeCut& cut) {
  return cut.delta.size() == 3 && is_induced_matching(g, cut.delta);
}

Trisum trisum(const TrisumSpec& spec) {
  for (int i = 0; i < 3; ++i) {
    const Graph& part = spec.parts[i];
    const auto& c = spec.cycle[i];
    const std::string which = "part " + std::to_string(i + 1);
    if (!is_bipartite(part)) throw PreconditionError(which + " is not bipartite");
    for (int j = 0; j < 4; ++j) {
      if (c[j] < 0 || c[j] >= part.order()) throw PreconditionError(which + ": cycle vertex out of range");
      for (int k = j + 1; k < 4; ++k) {
        if (c[j] == c[k]) throw PreconditionError(which + ": cycle repeats a vertex");
      }
    }
    for (int j = 0; j < 4; ++j) {
      if (!part.adjacent(c[j], c[(j + 1) % 4])) throw PreconditionError(which + ": cycle edge missing");
    }
    if (part.adjacent(c[0], c[2]) || part.adjacent(c[1], c[3])) {
      throw PreconditionError(which + ": chord inside the shared cycle");
    }
    if (part.order() <= 4) throw PreconditionError(which + " has no vertex outside the cycle");
  }
  for (int r : spec.removed) {
    if (r < 0 || r > 3) throw PreconditionError("removed cycle edge index must be 0..3");
  }

  Trisum out{Graph(1, std::span<const Edge>{}), {}};
  int next = 4;
  std::vector<Edge> edges;
  for (int i = 0; i < 3; ++i) {
    const Graph& part = spec.parts[i];
    auto& map = out.maps[i];
    map.assign(part.order(), -1);
    for (int j = 0; j < 4; ++j) map[spec.cycle[i][j]] = j;
    for (Vertex u = 0; u < part.order(); ++u) {
      if (map[u] < 0) map[u] = next++;
    }
    for (const Edge& e : part.edges()) {
      if (map[e.u] < 4 && map[e.v] < 4) continue;
      edges.push_back(make_edge(map[e.u], map[e.v]));
    }
  }
  for (int j = 0; j < 4; ++j) {
    if (std::find(spec.removed.begin(), spec.removed.end(), j) == spec.removed.end()) {
      edges.push_back(make_edge(j, (j + 1) % 4));
    }
  }
  // Joint 2-colouring: the cycle with all four edges plus every part.
  std::vector<Edge> full = edges;
  for (int j = 0; j < 4; ++j) full.push_back(make_edge(j, (j + 1) % 4));
  std::sort(full.begin(), full.end());
  full.erase(std::unique(full.begin(), full.end()), full.end());
  if (!is_bipartite(Graph(next, full))) throw PreconditionError("parts cannot be coloured consistently");
  out.graph = Graph(next, edges);
  return out;
}

FamilyResult diwan_family(std::span<const FamilyStep> recipe) {
  if (recipe.empty()) throw PreconditionError("recipe is empty");
  auto base = [](std::size_t step, const std::string& name) {
    try {
      return fixture(name);
    } catch (const UnknownFixture&) {
      throw PreconditionError("step " + std::to_string(step) + ": unknown base " + name);
    }
  };
  FamilyResult out{base(1, recipe[0].base), {}};
  std::vector<std::vector<Vertex>> shores;
  for (std::size_t i = 1; i < recipe.size(); ++i) {
    const FamilyStep& step = recipe[i];
    const std::string where = "step " + std::to_string(i + 1) + ": ";
    StarProduct sp{Graph(1, std::span<const Edge>{}), {}, {}, {}};
    try {
      const Graph g2 = base(i + 1, step.base);
      if (step.vertex < 0 || step.vertex >= out.graph.order()) throw PreconditionError("vertex out of range");
      sp = star_product({out.graph, step.vertex, g2, 0, step.pairing});
    } catch (const PreconditionError& e) {
      const std::string msg = e.what();
      throw PreconditionError(msg.rfind("step ", 0) == 0 ? msg : where + msg);
    }
    for (auto& shore : shores) {
      std::vector<Vertex> moved;
      const bool expanded = std::binary_search(shore.begin(), shore.end(), step.vertex);
      for (Vertex u : shore) {
        if (u != step.vertex) moved.push_back(sp.from_first[u]);
      }
      if (expanded) {
        for (Vertex w : sp.from_second) {
          if (w >= 0) moved.push_back(w);
        }
      }
      std::sort(moved.begin(), moved.end());
      shore = std::move(moved);
    }
    shores.push_back(sp.principal_cut.shore);
    out.graph = std::move(sp.graph);
  }
  for (const auto& shore : shores) out.cuts.push_back(cut_around(out.graph, shore));
  return out;
}

std::vector<FamilyStep> parse_recipe(std::istream& in) {
  std::vector<FamilyStep> steps;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<std::string> tokens;
    for (std::string t; fields >> t;) tokens.push_back(t);
    if (tokens.empty()) continue;
    FamilyStep step;
    step.base = tokens[0];
    if (steps.empty()) {
      if (tokens.size() != 1) throw ParseError(line_no, "first step takes only a base name");
      steps.push_back(step);
      continue;
    }
    if (tokens.size() < 2 || tokens.size() > 3) throw ParseError(line_no, "expected BASE VERTEX [PAIRING]");
    try {
      std::size_t used = 0;
      step.vertex = std::stoi(tokens[1], &used);
      if (used != tokens[1].size() || step.vertex < 0) throw ParseError(line_no, "bad vertex '" + tokens[1] + "'");
    } catch (const std::logic_error&) {
      throw ParseError(line_no, "bad vertex '" + tokens[1] + "'");
    }
    if (tokens.size() == 3) {
      const std::string& p = tokens[2];
      if (p.size() != 3) throw ParseError(line_no, "pairing must be three digits");
      for (int i = 0; i < 3; ++i) step.pairing[i] = p[i] - '0';
      if (!is_permutation_of_three(step.pairing)) throw ParseError(line_no, "pairing must permute 012");
    }
    steps.push_back(step);
  }
  return steps;
}

}  // namespace bracekit
