#pragma once

#include <optional>
#include <vector>

#include "bracekit/graph.hpp"

namespace bracekit {

/// A bijection phi with uv ∈ E(a) ⟺ phi(u)phi(v) ∈ E(b), found by
/// backtracking over colour-refined candidates.
std::optional<std::vector<Vertex>> find_isomorphism(const Graph& a, const Graph& b);

bool are_isomorphic(const Graph& a, const Graph& b);

}  // namespace bracekit
