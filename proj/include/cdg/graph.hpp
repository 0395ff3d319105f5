#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cdg {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;
using VertexSet = std::vector<Vertex>;  // always sorted ascending

// Thrown when caller-supplied data violates an operation's precondition.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Immutable simple undirected graph on the dense vertex set {0, ..., n-1}.
//
// Adjacency is stored as one bitset row per vertex, `words_per_row()` 64-bit
// words wide. Rows are symmetric and have no diagonal bits.
class Graph {
 public:
  Graph() = default;

  // Validates endpoints and collapses duplicates; (u,v) and (v,u) are the same
  // edge.
  static Graph from_edges(std::size_t n, std::span<const Edge> edges) {
    Graph g(n);
    for (const auto& [u, v] : edges) {
      if (u >= n || v >= n) {
        throw InputError("edge (" + std::to_string(u) + "," +
                         std::to_string(v) + ") has an endpoint outside 0.." +
                         std::to_string(n == 0 ? 0 : n - 1));
      }
      if (u == v) {
        throw InputError("self-loop at vertex " + std::to_string(u));
      }
      g.set(u, v);
      g.set(v, u);
    }
    return g;
  }

  // Single-word rows for n <= 64, as produced by the enumeration and
  // canonical labeling paths. Symmetry and irreflexivity are checked.
  static Graph from_rows(std::size_t n, std::span<const std::uint64_t> rows) {
    if (n > 64 || rows.size() != n) {
      throw InputError("from_rows requires n <= 64 and one row per vertex");
    }
    Graph g(n);
    const std::uint64_t mask = n == 64 ? ~0ULL : ((1ULL << n) - 1);
    for (Vertex v = 0; v < n; ++v) {
      if ((rows[v] & ~mask) != 0 || ((rows[v] >> v) & 1U) != 0) {
        throw InputError("row " + std::to_string(v) + " is out of range or has a self-loop");
      }
      g.bits_[v] = rows[v];
    }
    for (Vertex u = 0; u < n; ++u) {
      for (Vertex v = u + 1; v < n; ++v) {
        if (g.adjacent(u, v) != g.adjacent(v, u)) {
          throw InputError("adjacency rows are not symmetric");
        }
      }
    }
    return g;
  }

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] bool empty() const noexcept { return n_ == 0; }
  [[nodiscard]] std::size_t words_per_row() const noexcept { return words_; }

  [[nodiscard]] bool adjacent(Vertex u, Vertex v) const noexcept {
    return ((bits_[u * words_ + v / 64] >> (v % 64)) & 1U) != 0;
  }

  [[nodiscard]] std::span<const std::uint64_t> row(Vertex v) const {
    check_vertex(v);
    return {bits_.data() + v * words_, words_};
  }

  // Fast path for n <= 64.
  [[nodiscard]] std::uint64_t row_word(Vertex v) const noexcept { return bits_[v * words_]; }

  [[nodiscard]] std::size_t degree(Vertex v) const {
    check_vertex(v);
    std::size_t d = 0;
    for (std::size_t w = 0; w < words_; ++w) {
      d += static_cast<std::size_t>(std::popcount(bits_[v * words_ + w]));
    }
    return d;
  }

  [[nodiscard]] VertexSet neighbors(Vertex v) const {
    check_vertex(v);
    VertexSet out;
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t word = bits_[v * words_ + w];
      while (word != 0) {
        out.push_back(w * 64 + static_cast<std::size_t>(std::countr_zero(word)));
        word &= word - 1;
      }
    }
    return out;
  }

  [[nodiscard]] std::size_t edge_count() const noexcept {
    std::size_t total = 0;
    for (auto word : bits_) total += static_cast<std::size_t>(std::popcount(word));
    return total / 2;
  }

  // Edges (u,v) with u < v, ordered by u then v.
  [[nodiscard]] std::vector<Edge> edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u) {
      for (Vertex v : neighbors(u)) {
        if (u < v) out.emplace_back(u, v);
      }
    }
    return out;
  }

  void check_vertex(Vertex v) const {
    if (v >= n_) {
      throw InputError("vertex " + std::to_string(v) + " out of range for graph on " +
                       std::to_string(n_) + " vertices");
    }
  }

  friend bool operator==(const Graph&, const Graph&) = default;

 private:
  explicit Graph(std::size_t n) : n_(n), words_(n == 0 ? 0 : (n + 63) / 64), bits_(n * words_, 0) {}

  void set(Vertex u, Vertex v) { bits_[u * words_ + v / 64] |= 1ULL << (v % 64); }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> bits_;
};

inline Graph build_graph(std::size_t n, std::span<const Edge> edges) {
  return Graph::from_edges(n, edges);
}

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
  return Graph::from_edges(n, std::span<const Edge>(edges.begin(), edges.size()));
}

inline std::size_t degree(const Graph& g, Vertex v) { return g.degree(v); }

// Sorted descending.
inline std::vector<std::size_t> degree_multiset(const Graph& g) {
  std::vector<std::size_t> out;
  out.reserve(g.size());
  for (Vertex v = 0; v < g.size(); ++v) out.push_back(g.degree(v));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

inline void require_nonempty(const Graph& g, const char* what) {
  if (g.empty()) {
    throw InputError(std::string(what) + " is undefined on the graph with no vertices");
  }
}

inline bool all_degrees_odd(const Graph& g) {
  require_nonempty(g, "all_degrees_odd");
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.degree(v) % 2 == 0) return false;
  }
  return true;
}

inline bool is_complete(const Graph& g) {
  require_nonempty(g, "is_complete");
  return g.edge_count() == g.size() * (g.size() - 1) / 2;
}

struct Regularity {
  bool regular = false;
  std::size_t degree = 0;  // common degree; meaningful only when regular

  friend bool operator==(const Regularity&, const Regularity&) = default;
};

inline Regularity is_regular(const Graph& g) {
  require_nonempty(g, "is_regular");
  const std::size_t k = g.degree(0);
  for (Vertex v = 1; v < g.size(); ++v) {
    if (g.degree(v) != k) return {false, 0};
  }
  return {true, k};
}

// Every vertex has even degree. The graph need not be connected.
inline bool even_degree_subgraph_check(const Graph& g) {
  require_nonempty(g, "even_degree_subgraph_check");
  for (Vertex v = 0; v < g.size(); ++v) {
    if (g.degree(v) % 2 != 0) return false;
  }
  return true;
}

// Result of restricting a graph to a vertex subset. `labels[i]` is the vertex
// of the parent graph that became vertex i.
struct InducedSubgraph {
  Graph graph;
  VertexSet labels;
};

inline InducedSubgraph induced_subgraph(const Graph& g, VertexSet subset) {
  std::sort(subset.begin(), subset.end());
  subset.erase(std::unique(subset.begin(), subset.end()), subset.end());
  for (Vertex v : subset) g.check_vertex(v);
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < subset.size(); ++i) {
    for (std::size_t j = i + 1; j < subset.size(); ++j) {
      if (g.adjacent(subset[i], subset[j])) edges.emplace_back(i, j);
    }
  }
  return {Graph::from_edges(subset.size(), edges), std::move(subset)};
}

// Relabels vertex v as perm[v].
inline Graph permute(const Graph& g, std::span<const Vertex> perm) {
  if (perm.size() != g.size()) throw InputError("permutation size does not match graph");
  std::vector<bool> seen(g.size(), false);
  for (Vertex v : perm) {
    if (v >= g.size() || seen[v]) throw InputError("not a permutation of the vertex set");
    seen[v] = true;
  }
  std::vector<Edge> edges;
  for (const auto& [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph::from_edges(g.size(), edges);
}

}  // namespace cdg
