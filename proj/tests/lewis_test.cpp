#include <gtest/gtest.h>

#include <random>

#include "cdg/constructions.hpp"
#include "cdg/lewis.hpp"
#include "fixtures.hpp"
#include "oracles.hpp"

namespace cdg {
namespace {

LewisPartition partition_at(const Graph& g, Vertex base) {
  auto p = lewis_partition(g, base);
  if (!p) throw std::logic_error("expected a partition");
  return *p;
}

TEST(LewisPartition, PathFromEndpoint) {
  const auto p = partition_at(fixtures::p4(), 0);
  EXPECT_EQ(p.rho1, VertexSet{0});
  EXPECT_EQ(p.rho2, VertexSet{1});
  EXPECT_EQ(p.rho3, VertexSet{2});
  EXPECT_EQ(p.rho4, VertexSet{3});
  EXPECT_EQ(p.far, 3U);
  EXPECT_TRUE(validate_partition(fixtures::p4(), p).valid());
}

TEST(LewisPartition, NotApplicableBelowDiameterThree) {
  EXPECT_FALSE(lewis_partition(fixtures::seed_literal(), 0).has_value());
  EXPECT_FALSE(enumerate_lewis_partitions(fixtures::seed_literal()).has_value());
  for (std::size_t n = 1; n <= 8; ++n) {
    EXPECT_FALSE(enumerate_lewis_partitions(complete_graph(n)).has_value());
  }
  EXPECT_FALSE(lewis_partition(fixtures::two_k2(), 0).has_value());
  EXPECT_FALSE(analyze_lewis(fixtures::two_k2()).has_value());
  // Eccentricity 2 inside a diameter-3 graph.
  EXPECT_FALSE(lewis_partition(fixtures::p4(), 1).has_value());
}

TEST(LewisPartition, SixCycleFailsCliqueFlags) {
  const Graph c6 = fixtures::cycle(6);
  const auto v = validate_partition(c6, partition_at(c6, 0));
  EXPECT_FALSE(v.valid());
  EXPECT_FALSE(v.rho34_complete.ok);
  EXPECT_EQ(v.rho34_complete.witness, (VertexSet{2, 4}));
  EXPECT_FALSE(v.rho12_complete.ok);
  EXPECT_EQ(v.rho12_complete.witness, (VertexSet{1, 5}));
}

TEST(LewisPartition, AddedRho1Rho4EdgeIsDetected) {
  const auto p = partition_at(fixtures::p4(), 0);
  const auto v = validate_partition(fixtures::cycle(4), p);
  EXPECT_FALSE(v.no_rho1_to_rho34_edges.ok);
  EXPECT_EQ(v.no_rho1_to_rho34_edges.witness, (VertexSet{0, 3}));
  EXPECT_FALSE(v.no_rho4_to_rho12_edges.ok);
  EXPECT_TRUE(v.rho12_complete.ok);
}

TEST(LewisPartition, EnumerationCoversEveryEccentricityThreeVertex) {
  const auto entries = enumerate_lewis_partitions(fixtures::p4());
  ASSERT_TRUE(entries.has_value());
  ASSERT_EQ(entries->size(), 2U);
  EXPECT_EQ((*entries)[0].partition.base, 0U);
  EXPECT_EQ((*entries)[1].partition.base, 3U);
  EXPECT_EQ((*entries)[1].partition.rho4, VertexSet{0});
}

// Structural invariants over random connected graphs of diameter 3.
TEST(LewisPartition, LevelsAreDisjointAndDistanceConsistent) {
  std::mt19937_64 rng(43);
  int seen = 0;
  for (int trial = 0; trial < 3000 && seen < 200; ++trial) {
    const Graph g = oracle::random_graph(4 + trial % 10, 0.3, rng);
    const auto entries = enumerate_lewis_partitions(g);
    if (!entries) continue;
    ++seen;
    const auto fw = oracle::floyd_warshall(g);
    for (const auto& [p, validity] : *entries) {
      std::vector<int> owner(g.size(), 0);
      int level = 0;
      for (const VertexSet* s : {&p.rho1, &p.rho2, &p.rho3, &p.rho4}) {
        ++level;
        for (Vertex v : *s) {
          ASSERT_EQ(owner[v], 0);
          owner[v] = level;
        }
      }
      for (Vertex v = 0; v < g.size(); ++v) {
        const std::size_t d = fw[p.base][v];
        ASSERT_NE(owner[v], 0);
        const int expected = d == 0 ? 1 : d == 1 ? (owner[v] == 1 ? 1 : 2) : d == 2 ? 3 : 4;
        EXPECT_EQ(owner[v], expected);
      }
      for (Vertex v : p.rho2) {
        EXPECT_TRUE(std::any_of(p.rho3.begin(), p.rho3.end(), [&](Vertex w) { return g.adjacent(v, w); }));
      }
      for (Vertex v : p.rho1) {
        EXPECT_TRUE(std::none_of(p.rho3.begin(), p.rho3.end(), [&](Vertex w) { return g.adjacent(v, w); }));
      }
      EXPECT_EQ(fw[p.base][p.far], 3U);
    }
  }
  EXPECT_EQ(seen, 200);
}

TEST(OddDegreeCharacterization, TwoLinkedCliques) {
  const Graph g = fixtures::two_k4_linked();
  EXPECT_EQ(degree_multiset(g), (std::vector<std::size_t>{5, 5, 5, 5, 3, 3, 3, 3}));
  const auto p = partition_at(g, 0);
  EXPECT_EQ(p.rho1, (VertexSet{0, 1}));
  EXPECT_EQ(p.rho2, (VertexSet{2, 3}));
  EXPECT_EQ(p.rho3, (VertexSet{4, 5}));
  EXPECT_EQ(p.rho4, (VertexSet{6, 7}));
  ASSERT_TRUE(validate_partition(g, p).valid());
  for (EulerianMode mode : {EulerianMode::standard, EulerianMode::even_only}) {
    const auto v = check_odd_degree_characterization(g, p, mode);
    EXPECT_TRUE(v.is_all_odd);
    EXPECT_TRUE(v.is_block);
    EXPECT_TRUE(v.rho12_even());
    EXPECT_TRUE(v.rho34_even());
    // G[rho2 u rho3] is K4: every degree is 3.
    EXPECT_FALSE(v.rho23_eulerian);
    EXPECT_FALSE(v.conditions_hold());
    EXPECT_FALSE(v.characterization_holds());
  }
}

TEST(OddDegreeCharacterization, PathHasEvenDegrees) {
  const auto v = check_odd_degree_characterization(fixtures::p4(), partition_at(fixtures::p4(), 0));
  EXPECT_FALSE(v.is_all_odd);
  EXPECT_FALSE(v.is_block);
  EXPECT_FALSE(v.conditions_hold());
  EXPECT_TRUE(v.characterization_holds());
}

TEST(OddDegreeCharacterization, RequiresValidPartition) {
  const Graph c6 = fixtures::cycle(6);
  EXPECT_THROW(check_odd_degree_characterization(c6, partition_at(c6, 0)), HypothesisError);
}

TEST(OddImpliesBlock, Verdicts) {
  const auto fig = check_odd_implies_block(fixtures::seed_literal());
  EXPECT_EQ(fig.verdict, Verdict::pass);
  EXPECT_FALSE(fig.vacuous);
  const auto path = check_odd_implies_block(fixtures::p4());
  EXPECT_EQ(path.verdict, Verdict::pass);
  EXPECT_TRUE(path.vacuous);
  EXPECT_EQ(check_odd_implies_block(fixtures::two_k2()).verdict, Verdict::fail);
}

TEST(RegularNotOdd, Verdicts) {
  EXPECT_EQ(check_regular_not_odd(fixtures::cycle(4)).verdict, Verdict::pass);
  EXPECT_EQ(check_regular_not_odd(complete_graph(6)).verdict, Verdict::not_applicable);
  EXPECT_EQ(check_regular_not_odd(fixtures::p4()).verdict, Verdict::not_applicable);
  // The cube is 3-regular on 8 vertices.
  const Graph cube = build_graph(8, {{0, 1}, {0, 2}, {0, 4}, {1, 3}, {1, 5}, {2, 3},
                                     {2, 6}, {3, 7}, {4, 5}, {4, 6}, {5, 7}, {6, 7}});
  EXPECT_EQ(check_regular_not_odd(cube).verdict, Verdict::fail);
}

TEST(CompleteGraphAllOdd, ParityOfOrder) {
  EXPECT_TRUE(complete_graph_all_odd(6));
  EXPECT_FALSE(complete_graph_all_odd(7));
  EXPECT_THROW(complete_graph_all_odd(1), InputError);
}

TEST(Rho2CutVertex, PathHasTwoCutVertices) {
  const auto t = check_rho2_cut_vertex(fixtures::p4(), partition_at(fixtures::p4(), 0));
  EXPECT_EQ(t.verdict, Verdict::fail);
  EXPECT_NE(t.detail.find("not admissible"), std::string::npos);
}

TEST(Rho2CutVertex, SingleCutVertexIsRho2) {
  // Pendant 0 on vertex 1 of the clique pair {1,2,3}, {2,3,4}.
  const Graph g = build_graph(5, {{0, 1}, {1, 2}, {1, 3}, {2, 3}, {2, 4}, {3, 4}});
  const auto p = partition_at(g, 0);
  EXPECT_EQ(p.rho2, VertexSet{1});
  ASSERT_TRUE(validate_partition(g, p).valid());
  EXPECT_EQ(block_decomposition(g).cut_vertices, VertexSet{1});
  EXPECT_EQ(check_rho2_cut_vertex(g, p).verdict, Verdict::pass);
  EXPECT_EQ(check_rho2_cut_vertex(fixtures::cycle(6), partition_at(fixtures::cycle(6), 0)).verdict,
            Verdict::not_applicable);
}

TEST(BlockRhoSizes, Verdicts) {
  EXPECT_EQ(check_block_rho_sizes(fixtures::p4(), partition_at(fixtures::p4(), 0)).verdict, Verdict::pass);
  const Graph g = fixtures::two_k4_linked();
  EXPECT_EQ(check_block_rho_sizes(g, partition_at(g, 0)).verdict, Verdict::pass);
}

TEST(AnalyzeLewis, UsesSmallestBase) {
  const auto a = analyze_lewis(fixtures::two_k4_linked(), EulerianMode::even_only);
  ASSERT_TRUE(a.has_value());
  EXPECT_EQ(a->partition.base, 0U);
  ASSERT_TRUE(a->odd_degree.has_value());
  EXPECT_EQ(a->odd_degree->mode, EulerianMode::even_only);
  EXPECT_FALSE(a->odd_degree->characterization_holds());
  EXPECT_EQ(a->block_rho_sizes.verdict, Verdict::pass);
}

}  // namespace
}  // namespace cdg
