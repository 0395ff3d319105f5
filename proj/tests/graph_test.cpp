#include <gtest/gtest.h>

#include <random>

#include "cdg/constructions.hpp"
#include "cdg/graph.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace cdg {
namespace {

using Degrees = std::vector<std::size_t>;

// Incidence count straight from an edge list.
std::size_t count_incidences(const std::vector<Edge>& edges, Vertex v) {
  std::size_t d = 0;
  for (const auto& [a, b] : edges) d += (a == v) + (b == v);
  return d;
}

TEST(BuildGraph, PathFromEdgeList) {
  const Graph g = build_graph(4, {{0, 1}, {1, 2}, {2, 3}});
  EXPECT_EQ(g.size(), 4U);
  EXPECT_EQ(g.edge_count(), 3U);
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 3));
}

TEST(BuildGraph, EmptyGraph) {
  const Graph g = build_graph(0, {});
  EXPECT_EQ(g.size(), 0U);
  EXPECT_EQ(g.edge_count(), 0U);
}

TEST(BuildGraph, SeedGraphHasElevenEdges) {
  EXPECT_EQ(fixtures::seed_literal().edge_count(), 11U);
}

TEST(BuildGraph, DuplicatesAndReversedPairsCollapse) {
  const Graph g = build_graph(3, {{0, 1}, {1, 0}, {0, 1}, {1, 2}});
  EXPECT_EQ(g.edge_count(), 2U);
  EXPECT_EQ(g, build_graph(3, {{0, 1}, {1, 2}}));
}

TEST(BuildGraph, RejectsOutOfRangeAndSelfLoops) {
  EXPECT_THROW(build_graph(3, {{0, 3}}), InputError);
  EXPECT_THROW(build_graph(3, {{1, 1}}), InputError);
  EXPECT_THROW(build_graph(0, {{0, 0}}), InputError);
}

TEST(BuildGraph, FromRowsRejectsAsymmetry) {
  const std::vector<std::uint64_t> rows{0b10, 0b00};
  EXPECT_THROW(Graph::from_rows(2, rows), InputError);
  const std::vector<std::uint64_t> loop{0b01, 0b00};
  EXPECT_THROW(Graph::from_rows(2, loop), InputError);
}

TEST(BuildGraph, WideGraphsUseSeveralWords) {
  std::vector<Edge> edges{{0, 129}, {64, 65}, {63, 64}};
  const Graph g = Graph::from_edges(130, edges);
  EXPECT_EQ(g.words_per_row(), 3U);
  EXPECT_TRUE(g.adjacent(129, 0));
  EXPECT_EQ(g.degree(64), 2U);
  EXPECT_EQ(g.neighbors(64), (VertexSet{63, 65}));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 129}, {63, 64}, {64, 65}}));
}

TEST(Degree, SeedGraphHubAndLeafSide) {
  const Graph g = fixtures::seed_literal();
  EXPECT_EQ(degree(g, 0), count_incidences(fixtures::kSeedEdges, 0));
  EXPECT_EQ(degree(g, 0), 5U);
  EXPECT_EQ(degree(g, 2), count_incidences(fixtures::kSeedEdges, 2));
  EXPECT_EQ(degree(g, 2), 3U);
}

TEST(Degree, IsolatedVertexAndRange) {
  const Graph k1 = complete_graph(1);
  EXPECT_EQ(degree(k1, 0), 0U);
  EXPECT_THROW(degree(k1, 1), InputError);
}

TEST(DegreeMultiset, NamedGraphs) {
  Degrees oracle;
  for (Vertex v = 0; v < 6; ++v) oracle.push_back(count_incidences(fixtures::kSeedEdges, v));
  std::sort(oracle.rbegin(), oracle.rend());
  EXPECT_EQ(degree_multiset(fixtures::seed_literal()), oracle);
  EXPECT_EQ(degree_multiset(fixtures::seed_literal()), (Degrees{5, 5, 3, 3, 3, 3}));
  EXPECT_EQ(degree_multiset(complete_graph(6)), (Degrees{5, 5, 5, 5, 5, 5}));
  EXPECT_EQ(degree_multiset(fixtures::p4()), (Degrees{2, 2, 1, 1}));
}

TEST(AllDegreesOdd, NamedGraphs) {
  EXPECT_TRUE(all_degrees_odd(fixtures::seed_literal()));
  EXPECT_TRUE(all_degrees_odd(complete_graph(6)));
  EXPECT_FALSE(all_degrees_odd(fixtures::cycle(4)));
  EXPECT_THROW(all_degrees_odd(fixtures::edgeless(0)), InputError);
}

TEST(AllDegreesOdd, CompleteGraphParity) {
  for (std::size_t n = 1; n <= 20; ++n) {
    EXPECT_EQ(all_degrees_odd(complete_graph(n)), n % 2 == 0) << "n=" << n;
  }
}

TEST(CompleteAndRegular, NamedGraphs) {
  EXPECT_TRUE(is_complete(complete_graph(6)));
  EXPECT_EQ(is_regular(complete_graph(6)), (Regularity{true, 5}));
  EXPECT_FALSE(is_complete(fixtures::cycle(5)));
  EXPECT_EQ(is_regular(fixtures::cycle(5)), (Regularity{true, 2}));
  EXPECT_FALSE(is_complete(fixtures::seed_literal()));
  EXPECT_FALSE(is_regular(fixtures::seed_literal()).regular);
}

TEST(InducedSubgraph, SeedGraphRestriction) {
  const Graph g = fixtures::seed_literal();
  const auto sub = induced_subgraph(g, {0, 1, 2, 3});
  // Oracle: filter the literal edge list to pairs inside {0,1,2,3}.
  std::size_t inside = 0;
  for (const auto& [a, b] : fixtures::kSeedEdges) inside += (a < 4 && b < 4);
  EXPECT_EQ(sub.graph.edge_count(), inside);
  EXPECT_EQ(inside, 6U);  // {a,b,c,d} induces K4
  EXPECT_TRUE(is_complete(sub.graph));
  EXPECT_EQ(sub.labels, (VertexSet{0, 1, 2, 3}));
}

TEST(InducedSubgraph, EmptySubsetAndHereditaryCompleteness) {
  EXPECT_EQ(induced_subgraph(complete_graph(6), {}).graph.size(), 0U);
  const auto sub = induced_subgraph(complete_graph(6), {5, 1, 3});
  EXPECT_EQ(sub.graph, complete_graph(3));
  EXPECT_EQ(sub.labels, (VertexSet{1, 3, 5}));
  EXPECT_THROW(induced_subgraph(complete_graph(3), {0, 3}), InputError);
}

TEST(InducedSubgraph, FullVertexSetIsIdentity) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 12, 0.4, rng);
    VertexSet all(g.size());
    std::iota(all.begin(), all.end(), Vertex{0});
    EXPECT_EQ(induced_subgraph(g, all).graph, g);
  }
}

TEST(EvenDegree, EulerianReadings) {
  EXPECT_TRUE(even_degree_subgraph_check(fixtures::cycle(4)));
  EXPECT_TRUE(even_degree_subgraph_check(fixtures::two_triangles()));
  EXPECT_FALSE(even_degree_subgraph_check(fixtures::p4()));
}

TEST(Handshake, SumOfDegreesIsTwiceEdges) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const Graph g = oracle::random_graph(1 + trial % 70, 0.3, rng);
    std::size_t total = 0;
    for (Vertex v = 0; v < g.size(); ++v) total += g.degree(v);
    EXPECT_EQ(total, 2 * g.edge_count());
  }
}

TEST(Permute, RejectsNonPermutations) {
  const Graph g = fixtures::p4();
  EXPECT_THROW(permute(g, std::vector<Vertex>{0, 1, 1, 2}), InputError);
  EXPECT_THROW(permute(g, std::vector<Vertex>{0, 1, 2}), InputError);
}

}  // namespace
}  // namespace cdg
