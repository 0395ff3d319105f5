#pragma once

#include <vector>

#include "cdg/graph.hpp"

namespace cdg::fixtures {

inline Graph path(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph::from_edges(n, edges);
}

inline Graph cycle(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
  return Graph::from_edges(n, edges);
}

inline Graph edgeless(std::size_t n) { return Graph::from_edges(n, {}); }

inline Graph p4() { return path(4); }

// 2K2
inline Graph two_k2() { return build_graph(4, {{0, 1}, {2, 3}}); }

// a=0, b=1 are the hubs; c=2, d=3, e=4, f=5.
inline const std::vector<Edge> kSeedEdges = {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {1, 2},
                                                {1, 3}, {1, 4}, {1, 5}, {2, 3}, {4, 5}};

inline Graph seed_literal() { return Graph::from_edges(6, kSeedEdges); }

// Cliques on {0,1,2,3} and {4,5,6,7}; 2 and 3 are each adjacent to 4 and 5.
// Base vertex 0 gives rho1={0,1}, rho2={2,3}, rho3={4,5}, rho4={6,7}.
inline const std::vector<Edge> kTwoK4Edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3},
                                              {4, 5}, {4, 6}, {4, 7}, {5, 6}, {5, 7}, {6, 7},
                                              {2, 4}, {2, 5}, {3, 4}, {3, 5}};

inline Graph two_k4_linked() { return Graph::from_edges(8, kTwoK4Edges); }

// Two triangles sharing vertex 2.
inline Graph bowtie() { return build_graph(5, {{0, 1}, {0, 2}, {1, 2}, {2, 3}, {2, 4}, {3, 4}}); }

// K3 on {0,1,2} plus isolated 3 and 4.
inline Graph k3_plus_two_isolated() { return build_graph(5, {{0, 1}, {0, 2}, {1, 2}}); }

// Two disjoint triangles.
inline Graph two_triangles() { return build_graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }

}  // namespace cdg::fixtures
