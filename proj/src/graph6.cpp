#include "bracekit/graph6.hpp"

#include <vector>

#include "bracekit/errors.hpp"

namespace bracekit {
namespace {

constexpr int kBias = 63;
constexpr int kSizeEscape = 126;

bool printable(unsigned char c) { return c >= kBias && c <= 126; }

std::int64_t read_size(std::string_view s, std::size_t base, std::size_t& pos) {
  auto take = [&](std::size_t count) {
    std::int64_t value = 0;
    for (std::size_t i = 0; i < count; ++i) {
      if (pos >= s.size()) throw ParseError(base + pos, "truncated size header");
      const auto c = static_cast<unsigned char>(s[pos]);
      if (!printable(c)) throw ParseError(base + pos, "illegal character in size header");
      value = (value << 6) | (c - kBias);
      ++pos;
    }
    return value;
  };
  if (pos >= s.size()) throw ParseError(base + pos, "empty graph6 string");
  const auto first = static_cast<unsigned char>(s[pos]);
  if (!printable(first)) throw ParseError(base + pos, "illegal character in size header");
  if (first != kSizeEscape) {
    ++pos;
    return first - kBias;
  }
  ++pos;
  if (pos < s.size() && static_cast<unsigned char>(s[pos]) == kSizeEscape) {
    ++pos;
    const std::int64_t n = take(6);
    if (n <= 258047) throw ParseError(base, "non-canonical 8-byte size header");
    return n;
  }
  const std::int64_t n = take(3);
  if (n <= 62) throw ParseError(base, "non-canonical 4-byte size header");
  return n;
}

void write_size(std::string& out, std::int64_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + kBias));
  } else if (n <= 258047) {
    out.push_back(static_cast<char>(kSizeEscape));
    for (int shift = 12; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  } else {
    out.push_back(static_cast<char>(kSizeEscape));
    out.push_back(static_cast<char>(kSizeEscape));
    for (int shift = 30; shift >= 0; shift -= 6) out.push_back(static_cast<char>(((n >> shift) & 63) + kBias));
  }
}

}  // namespace

Graph graph6_decode(std::string_view text) {
  constexpr std::string_view kHeader = ">>graph6<<";
  std::size_t base = 0;
  if (text.substr(0, kHeader.size()) == kHeader) {
    base = kHeader.size();
    text.remove_prefix(kHeader.size());
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) text.remove_suffix(1);

  std::size_t pos = 0;
  const std::int64_t n64 = read_size(text, base, pos);
  if (n64 < 1) throw ParseError(base, "graph6 string encodes a graph without vertices");
  if (n64 > 1'000'000) throw ParseError(base, "graph too large for this toolkit");
  const int n = static_cast<int>(n64);

  const std::uint64_t bits = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
  const std::uint64_t bytes = (bits + 5) / 6;
  const std::size_t body = pos;
  for (std::size_t i = body; i < text.size(); ++i) {
    if (!printable(static_cast<unsigned char>(text[i]))) throw ParseError(base + i, "illegal character");
  }
  if (text.size() - body < bytes) throw ParseError(base + text.size(), "truncated bit vector");
  if (text.size() - body > bytes) throw ParseError(base + body + bytes, "trailing bytes after bit vector");

  std::vector<Edge> edges;
  std::uint64_t k = 0;
  for (int j = 1; j < n; ++j) {
    for (int i = 0; i < j; ++i, ++k) {
      const int byte = static_cast<unsigned char>(text[body + k / 6]) - kBias;
      if (byte & (1 << (5 - static_cast<int>(k % 6)))) edges.push_back(Edge{i, j});
    }
  }
  if (bytes > 0) {
    const int last = static_cast<unsigned char>(text[body + bytes - 1]) - kBias;
    const int used = static_cast<int>(bits - (bytes - 1) * 6);
    if (last & ((1 << (6 - used)) - 1)) throw ParseError(base + body + bytes - 1, "non-zero padding bits");
  }
  return Graph(n, edges);
}

std::string graph6_encode(const Graph& g) {
  const int n = g.order();
  std::string out;
  write_size(out, n);
  const std::uint64_t bits = static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(n - 1) / 2;
  std::vector<unsigned char> packed((bits + 5) / 6, 0);
  for (const Edge& e : g.edges()) {
    // column-major upper triangle: bit index of (i, j), i < j
    const std::uint64_t k = static_cast<std::uint64_t>(e.v) * static_cast<std::uint64_t>(e.v - 1) / 2 + static_cast<std::uint64_t>(e.u);
    packed[k / 6] |= static_cast<unsigned char>(1 << (5 - static_cast<int>(k % 6)));
  }
  for (unsigned char c : packed) out.push_back(static_cast<char>(c + kBias));
  return out;
}

}  // namespace bracekit
