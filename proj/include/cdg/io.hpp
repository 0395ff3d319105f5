#pragma once

#include <algorithm>
#include <charconv>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "cdg/graph.hpp"

namespace cdg {

// Malformed textual graph input. `offset()` is the byte offset (graph6) or the
// 1-based line number (edge list) where decoding failed.
class ParseError : public InputError {
 public:
  ParseError(const std::string& what, std::size_t offset)
      : InputError(what + " (at " + std::to_string(offset) + ")"), offset_(offset) {}
  [[nodiscard]] std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

inline constexpr std::string_view kGraph6Header = ">>graph6<<";
inline constexpr std::size_t kGraph6DefaultMaxVertices = 1 << 16;

namespace detail {

inline void append_graph6_size(std::string& out, std::size_t n) {
  if (n <= 62) {
    out.push_back(static_cast<char>(n + 63));
  } else if (n <= 258047) {
    out.push_back('~');
    for (int shift = 12; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
    }
  } else {
    out.append("~~");
    for (int shift = 30; shift >= 0; shift -= 6) {
      out.push_back(static_cast<char>(((n >> shift) & 63U) + 63));
    }
  }
}

inline unsigned graph6_sextet(std::string_view s, std::size_t pos, std::size_t base) {
  const auto c = static_cast<unsigned char>(s[pos]);
  if (c < 63 || c > 126) {
    throw ParseError("graph6 byte outside the printable range 63..126", base + pos);
  }
  return c - 63U;
}

}  // namespace detail

// Upper-triangle bits in column order (0,1),(0,2),(1,2),(0,3),... packed six
// per byte, most significant first, each byte offset by 63.
inline std::string encode_graph6(const Graph& g) {
  const std::size_t n = g.size();
  std::string out;
  detail::append_graph6_size(out, n);
  unsigned acc = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      acc = (acc << 1) | (g.adjacent(i, j) ? 1U : 0U);
      if (++filled == 6) {
        out.push_back(static_cast<char>(acc + 63));
        acc = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
  return out;
}

// Strict decoder: body length must match n exactly and padding bits must be
// zero, so encode_graph6(decode_graph6(s)) == s for every accepted s.
inline Graph decode_graph6(std::string_view text,
                           std::size_t max_vertices = kGraph6DefaultMaxVertices) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) {
    base = kGraph6Header.size();
    text.remove_prefix(base);
  }
  if (text.empty()) throw ParseError("empty graph6 string", base);

  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != '~') {
    n = detail::graph6_sextet(text, 0, base);
    pos = 1;
  } else {
    const bool wide = text.size() > 1 && text[1] == '~';
    const std::size_t start = wide ? 2 : 1;
    const std::size_t digits = wide ? 6 : 3;
    if (text.size() < start + digits) throw ParseError("truncated graph6 size header", base + text.size());
    for (std::size_t k = 0; k < digits; ++k) {
      n = (n << 6) | detail::graph6_sextet(text, start + k, base);
    }
    pos = start + digits;
    if ((!wide && n < 63) || (wide && n <= 258047)) {
      throw ParseError("non-canonical graph6 size header", base);
    }
  }
  if (n > max_vertices) {
    throw ParseError("graph6 vertex count " + std::to_string(n) + " exceeds limit " +
                         std::to_string(max_vertices),
                     base);
  }

  const std::size_t bits = n * (n == 0 ? 0 : n - 1) / 2;
  const std::size_t body = (bits + 5) / 6;
  if (text.size() - pos != body) {
    throw ParseError("graph6 body has " + std::to_string(text.size() - pos) +
                         " bytes, expected " + std::to_string(body),
                     base + std::min(text.size(), pos + body));
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  Vertex i = 0;
  Vertex j = 1;
  for (std::size_t k = 0; k < body; ++k) {
    const unsigned sextet = detail::graph6_sextet(text, pos + k, base);
    for (int b = 5; b >= 0; --b, ++bit) {
      const bool set = ((sextet >> b) & 1U) != 0;
      if (bit >= bits) {
        if (set) throw ParseError("nonzero graph6 padding bits", base + pos + k);
        continue;
      }
      if (set) edges.emplace_back(i, j);
      if (++i == j) {
        i = 0;
        ++j;
      }
    }
  }
  return Graph::from_edges(n, edges);
}

// "n\nu v\nu v\n...", edges as emitted by Graph::edges().
inline std::string encode_edge_list(const Graph& g) {
  std::string out = std::to_string(g.size()) + "\n";
  for (const auto& [u, v] : g.edges()) {
    out += std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

// Blank lines and '#' comments are ignored. The first record is the vertex
// count; every following line holds exactly one edge.
inline Graph decode_edge_list(std::string_view text,
                              std::size_t max_vertices = kGraph6DefaultMaxVertices) {
  std::optional<std::size_t> n;
  std::vector<Edge> edges;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::vector<std::size_t> values;
    std::string_view rest = line;
    while (true) {
      const auto first = rest.find_first_not_of(" \t\r");
      if (first == std::string_view::npos) break;
      rest.remove_prefix(first);
      std::size_t value = 0;
      auto [ptr, ec] = std::from_chars(rest.data(), rest.data() + rest.size(), value);
      if (ec != std::errc{} || (ptr != rest.data() + rest.size() && *ptr != ' ' && *ptr != '\t' && *ptr != '\r')) {
        throw ParseError("expected a nonnegative integer", line_no);
      }
      values.push_back(value);
      rest.remove_prefix(static_cast<std::size_t>(ptr - rest.data()));
    }
    if (values.empty()) continue;
    if (!n) {
      if (values.size() != 1) throw ParseError("first line must hold only the vertex count", line_no);
      n = values[0];
      if (*n > max_vertices) throw ParseError("vertex count exceeds limit", line_no);
      continue;
    }
    if (values.size() != 2) throw ParseError("edge line must hold exactly two vertices", line_no);
    if (values[0] >= *n || values[1] >= *n || values[0] == values[1]) {
      throw ParseError("invalid edge " + std::to_string(values[0]) + " " + std::to_string(values[1]),
                       line_no);
    }
    edges.emplace_back(values[0], values[1]);
  }
  if (!n) throw ParseError("missing vertex count", line_no);
  return Graph::from_edges(*n, edges);
}

// Edge lists start with a decimal digit; graph6 bytes never do.
inline Graph decode_graph_auto(std::string_view text,
                               std::size_t max_vertices = kGraph6DefaultMaxVertices) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) throw ParseError("empty input", 0);
  const char c = text[first];
  if ((c >= '0' && c <= '9') || c == '#') return decode_edge_list(text, max_vertices);
  auto last = text.find_last_not_of(" \t\r\n");
  return decode_graph6(text.substr(first, last - first + 1), max_vertices);
}

}  // namespace cdg
