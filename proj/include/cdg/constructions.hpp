#pragma once

#include <vector>

#include "cdg/graph.hpp"

namespace cdg {

inline Graph complete_graph(std::size_t n) {
  if (n == 0) throw InputError("complete_graph requires n >= 1");
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u) {
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  }
  return Graph::from_edges(n, edges);
}

// Six vertices: hubs 0 and 1 adjacent to each other and to 2..5, plus the
// edges 2-3 and 4-5. Degrees {5,5,3,3,3,3}.
inline Graph seed_graph() {
  return build_graph(6, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                         {1, 2}, {1, 3}, {1, 4}, {1, 5},
                         {2, 3}, {4, 5}});
}

// Join: disjoint union plus every edge between the two sides. Vertices of `a`
// keep their labels; vertex v of `b` becomes a.size() + v.
inline Graph direct_product(const Graph& a, const Graph& b) {
  if (a.empty() || b.empty()) throw InputError("direct_product requires nonempty operands");
  const std::size_t shift = a.size();
  std::vector<Edge> edges = a.edges();
  for (const auto& [u, v] : b.edges()) edges.emplace_back(u + shift, v + shift);
  for (Vertex u = 0; u < a.size(); ++u) {
    for (Vertex v = 0; v < b.size(); ++v) edges.emplace_back(u, v + shift);
  }
  return Graph::from_edges(a.size() + b.size(), edges);
}

// Target order of the odd-degree family; even and at least 6.
class FamilySpec {
 public:
  explicit FamilySpec(std::size_t n) : n_(n) {
    if (n < 6 || n % 2 != 0) {
      throw InputError("odd-degree family is defined for even n >= 6, got " + std::to_string(n));
    }
  }
  [[nodiscard]] std::size_t n() const noexcept { return n_; }

 private:
  std::size_t n_;
};

// F(6) is the six-vertex seed; F(n) = direct_product(F(n-2), K2). Four
// vertices of degree n-3, the remaining n-4 of degree n-1.
inline Graph odd_family(FamilySpec spec) {
  Graph g = seed_graph();
  const Graph k2 = complete_graph(2);
  while (g.size() < spec.n()) g = direct_product(g, k2);
  return g;
}

}  // namespace cdg
