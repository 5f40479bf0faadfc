#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "bracekit/graph.hpp"

namespace bracekit {

/// Largest order graph6 can represent (8-byte size header).
inline constexpr std::int64_t kGraph6MaxOrder = 68719476735LL;

/// Decodes one graph6 line. An optional ">>graph6<<" prefix and a trailing
/// newline are accepted. Throws ParseError naming the byte offset for illegal
/// characters, a malformed size header, a truncated or overlong bit vector
/// and non-zero padding.
Graph graph6_decode(std::string_view text);

/// Encodes in canonical graph6 (zero padding, shortest size header).
std::string graph6_encode(const Graph& g);

}  // namespace bracekit
