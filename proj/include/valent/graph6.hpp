#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "valent/graph.hpp"

namespace valent {

/// Largest order accepted by the graph6 reader and writer. Covers the
/// one-byte and four-byte size headers; the eight-byte form is rejected.
inline constexpr int kMaxGraph6Order = 65535;

namespace detail {

inline constexpr char kG6Offset = 63;
inline constexpr std::string_view kG6Header = ">>graph6<<";

[[noreturn]] inline void g6_error(std::size_t pos, const std::string& reason) {
  fail(ErrorCode::MalformedGraph6, "at position " + std::to_string(pos) + ": " + reason);
}

inline int g6_sextet(std::string_view text, std::size_t pos) {
  if (pos >= text.size()) g6_error(pos, "unexpected end of input");
  const auto c = static_cast<unsigned char>(text[pos]);
  if (c < 63 || c > 126) g6_error(pos, "character outside 63..126");
  return c - kG6Offset;
}

}  // namespace detail

/// Encodes `g` in graph6: size header N(n) then the upper triangle of the
/// adjacency matrix column by column, six bits per character, big-endian
/// within each character, zero padded.
inline std::string write_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kMaxGraph6Order) fail(ErrorCode::UnsupportedSize, "n=" + std::to_string(n));
  std::string out;
  if (n <= 62) {
    out.push_back(static_cast<char>(n + detail::kG6Offset));
  } else {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 0x3f) + detail::kG6Offset));
    }
  }
  int acc = 0;
  int bits = 0;
  for (Vertex j = 1; j < n; ++j) {
    auto nb = g.neighbors(j);
    auto it = nb.begin();
    for (Vertex i = 0; i < j; ++i) {
      while (it != nb.end() && *it < i) ++it;
      acc = (acc << 1) | (it != nb.end() && *it == i ? 1 : 0);
      if (++bits == 6) {
        out.push_back(static_cast<char>(acc + detail::kG6Offset));
        acc = 0;
        bits = 0;
      }
    }
  }
  if (bits > 0) out.push_back(static_cast<char>((acc << (6 - bits)) + detail::kG6Offset));
  return out;
}

/// Decodes one graph6 line. An optional ">>graph6<<" prefix and a single
/// trailing newline (LF or CRLF) are accepted; anything else is an error.
inline Graph parse_graph6(std::string_view text) {
  if (text.starts_with(detail::kG6Header)) text.remove_prefix(detail::kG6Header.size());
  if (text.ends_with('\n')) text.remove_suffix(1);
  if (text.ends_with('\r')) text.remove_suffix(1);
  if (text.empty()) detail::g6_error(0, "empty input");

  std::size_t pos = 0;
  std::int64_t n = 0;
  if (text[0] != '~') {
    n = detail::g6_sextet(text, 0);
    pos = 1;
  } else if (text.size() > 1 && text[1] == '~') {
    std::int64_t big = 0;
    for (std::size_t k = 2; k < 8; ++k) big = (big << 6) | detail::g6_sextet(text, k);
    fail(ErrorCode::UnsupportedSize, "n=" + std::to_string(big));
  } else {
    for (std::size_t k = 1; k < 4; ++k) n = (n << 6) | detail::g6_sextet(text, k);
    if (n <= 62) detail::g6_error(1, "four-byte header used for n <= 62");
    pos = 4;
  }
  if (n > kMaxGraph6Order) fail(ErrorCode::UnsupportedSize, "n=" + std::to_string(n));

  const std::int64_t pair_bits = n * (n - 1) / 2;
  const std::size_t body = static_cast<std::size_t>((pair_bits + 5) / 6);
  if (text.size() - pos != body) {
    detail::g6_error(pos, "expected " + std::to_string(body) + " data characters, found " +
                              std::to_string(text.size() - pos));
  }

  EdgeList edges;
  std::int64_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int sextet = detail::g6_sextet(text, pos + static_cast<std::size_t>(k / 6));
      if ((sextet >> (5 - k % 6)) & 1) edges.emplace_back(i, j);
    }
  }
  if (k % 6 != 0) {
    const int last = detail::g6_sextet(text, text.size() - 1);
    if (last & ((1 << (6 - k % 6)) - 1)) detail::g6_error(text.size() - 1, "nonzero padding bits");
  }
  return Graph::from_edges(static_cast<int>(n), edges);
}

}  // namespace valent
