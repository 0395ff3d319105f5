#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "cdg/graph.hpp"

namespace cdg {

using Distance = std::uint32_t;
inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

// Single-source BFS distances; kUnreachable outside the component of `source`.
inline std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
  g.check_vertex(source);
  std::vector<Distance> dist(g.size(), kUnreachable);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const Vertex u = queue[head];
    for (Vertex v : g.neighbors(u)) {
      if (dist[v] == kUnreachable) {
        dist[v] = dist[u] + 1;
        queue.push_back(v);
      }
    }
  }
  return dist;
}

class DistanceMatrix {
 public:
  explicit DistanceMatrix(const Graph& g) : n_(g.size()), d_(n_ * n_, kUnreachable) {
    for (Vertex s = 0; s < n_; ++s) {
      auto row = bfs_distances(g, s);
      std::copy(row.begin(), row.end(), d_.begin() + static_cast<std::ptrdiff_t>(s * n_));
    }
  }

  [[nodiscard]] std::size_t size() const noexcept { return n_; }
  [[nodiscard]] Distance at(Vertex u, Vertex v) const { return d_.at(u * n_ + v); }

 private:
  std::size_t n_;
  std::vector<Distance> d_;
};

inline DistanceMatrix distance_matrix(const Graph& g) { return DistanceMatrix(g); }

// Largest distance from v; kUnreachable when the graph is disconnected.
inline Distance eccentricity(const Graph& g, Vertex v) {
  const auto dist = bfs_distances(g, v);
  return *std::max_element(dist.begin(), dist.end());
}

// kUnreachable for disconnected graphs, 0 for a single vertex.
inline Distance diameter(const Graph& g) {
  require_nonempty(g, "diameter");
  Distance best = 0;
  for (Vertex v = 0; v < g.size(); ++v) best = std::max(best, eccentricity(g, v));
  return best;
}

// Components ordered by smallest member; each component sorted.
inline std::vector<VertexSet> connected_components(const Graph& g) {
  std::vector<VertexSet> out;
  std::vector<bool> seen(g.size(), false);
  for (Vertex s = 0; s < g.size(); ++s) {
    if (seen[s]) continue;
    VertexSet comp{s};
    seen[s] = true;
    for (std::size_t head = 0; head < comp.size(); ++head) {
      for (Vertex v : g.neighbors(comp[head])) {
        if (!seen[v]) {
          seen[v] = true;
          comp.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

inline bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

struct BlockDecomposition {
  std::vector<VertexSet> blocks;  // sorted lexicographically
  VertexSet cut_vertices;
};

// Hopcroft-Tarjan lowpoint decomposition, iterative. Isolated vertices form
// singleton blocks; bridges form two-vertex blocks.
inline BlockDecomposition block_decomposition(const Graph& g) {
  const std::size_t n = g.size();
  BlockDecomposition out;
  std::vector<std::size_t> disc(n, 0), low(n, 0);
  std::vector<bool> visited(n, false), is_cut(n, false);
  std::vector<Edge> edge_stack;
  std::size_t timer = 0;

  struct Frame {
    Vertex v;
    Vertex parent;
    VertexSet nbrs;
    std::size_t next = 0;
    std::size_t children = 0;
  };

  for (Vertex root = 0; root < n; ++root) {
    if (visited[root]) continue;
    if (g.degree(root) == 0) {
      visited[root] = true;
      out.blocks.push_back({root});
      continue;
    }
    std::vector<Frame> stack;
    visited[root] = true;
    disc[root] = low[root] = ++timer;
    stack.push_back({root, root, g.neighbors(root)});
    while (!stack.empty()) {
      Frame& f = stack.back();
      if (f.next < f.nbrs.size()) {
        const Vertex w = f.nbrs[f.next++];
        if (!visited[w]) {
          visited[w] = true;
          disc[w] = low[w] = ++timer;
          edge_stack.emplace_back(f.v, w);
          ++f.children;
          stack.push_back({w, f.v, g.neighbors(w)});
        } else if (w != f.parent && disc[w] < disc[f.v]) {
          edge_stack.emplace_back(f.v, w);
          low[f.v] = std::min(low[f.v], disc[w]);
        }
        continue;
      }
      const Vertex v = f.v;
      const Vertex parent = f.parent;
      const std::size_t children = f.children;
      stack.pop_back();
      if (stack.empty()) {
        if (children >= 2) is_cut[v] = true;
        continue;
      }
      low[parent] = std::min(low[parent], low[v]);
      if (low[v] >= disc[parent]) {
        if (parent != root) is_cut[parent] = true;
        VertexSet block;
        while (!edge_stack.empty()) {
          const Edge e = edge_stack.back();
          edge_stack.pop_back();
          block.push_back(e.first);
          block.push_back(e.second);
          if (e == Edge{parent, v}) break;
        }
        std::sort(block.begin(), block.end());
        block.erase(std::unique(block.begin(), block.end()), block.end());
        out.blocks.push_back(std::move(block));
      }
    }
  }
  for (Vertex v = 0; v < n; ++v) {
    if (is_cut[v]) out.cut_vertices.push_back(v);
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

// Connected with no cut vertex. K1 and K2 are blocks.
inline bool is_block(const Graph& g) {
  require_nonempty(g, "is_block");
  return is_connected(g) && block_decomposition(g).cut_vertices.empty();
}

// Standard reading: connected and every vertex of even degree.
inline bool is_eulerian(const Graph& g) {
  return even_degree_subgraph_check(g) && is_connected(g);
}

}  // namespace cdg
