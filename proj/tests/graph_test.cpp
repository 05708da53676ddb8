#include "rwstab/graph.hpp"

#include <gtest/gtest.h>

#include <random>
#include <sstream>

#include "oracles.hpp"
#include "rwstab/dimacs.hpp"

namespace rwstab {
namespace {

TEST(GraphTest, TriangleHasThreeEdges) {
  Graph g(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_EQ(g.edge_count(), 3u);
  EXPECT_TRUE(g.adjacent(2, 0));
}

TEST(GraphTest, ReversedDuplicateIsMerged) {
  Graph g(2, {{0, 1}, {1, 0}});
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.edges().front(), (Edge{0, 1}));
}

TEST(GraphTest, SelfLoopRejected) {
  EXPECT_THROW(Graph(4, {{0, 0}}), std::invalid_argument);
}

TEST(GraphTest, OutOfRangeEndpointRejected) {
  EXPECT_THROW(Graph(3, {{0, 3}}), std::invalid_argument);
}

TEST(GraphTest, DegreeSumIsTwiceEdgeCount) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    Graph g = oracle::random_graph(1 + trial % 12, 0.4, rng);
    std::size_t sum = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
      sum += g.degree(v);
      for (Vertex w : g.neighbors(v)) EXPECT_TRUE(g.adjacent(w, v));
    }
    EXPECT_EQ(sum, 2 * g.edge_count());
  }
}

TEST(ConnectivityTest, Examples) {
  EXPECT_TRUE(is_connected(oracle::cycle(6)));
  EXPECT_FALSE(is_connected(Graph(4, {{0, 1}, {2, 3}})));
  EXPECT_TRUE(is_connected(Graph(0, {})));
}

TEST(BipartitionTest, EvenCycle) {
  auto parts = bipartition(oracle::cycle(6));
  ASSERT_TRUE(parts.has_value());
  EXPECT_EQ(parts->first, (std::vector<Vertex>{0, 2, 4}));
  EXPECT_EQ(parts->second, (std::vector<Vertex>{1, 3, 5}));
}

TEST(BipartitionTest, OddCycleHasNone) { EXPECT_FALSE(bipartition(oracle::cycle(5))); }

TEST(BipartitionTest, ComponentSmallestVertexGoesFirst) {
  // Components {0,3} and {1,2}: 0 and 1 both land in the first side.
  auto parts = bipartition(Graph(4, {{0, 3}, {2, 1}}));
  ASSERT_TRUE(parts.has_value());
  EXPECT_EQ(parts->first, (std::vector<Vertex>{0, 1}));
}

TEST(BipartitionTest, AgreesWithOddCycleSearch) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    Graph g = oracle::random_graph(2 + trial % 11, 0.25, rng);
    EXPECT_EQ(bipartition(g).has_value(), !oracle::has_odd_cycle(g));
  }
}

TEST(TwinTest, CompleteGraphHasNone) { EXPECT_TRUE(twin_pairs(oracle::complete(4)).empty()); }

TEST(TwinTest, RelationIsTransitive) {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(3 + trial % 8, 0.3, rng);
    auto pairs = twin_pairs(g);
    std::set<Edge> lookup(pairs.begin(), pairs.end());
    for (auto [u, v] : pairs) {
      EXPECT_FALSE(g.adjacent(u, v));
      for (auto [x, y] : pairs) {
        if (x == v && u != y) EXPECT_TRUE(lookup.count({std::min(u, y), std::max(u, y)}));
      }
    }
  }
}

TEST(InducedSubgraphTest, Examples) {
  auto k3 = induced_subgraph(oracle::complete(4), std::vector<Vertex>{0, 1, 2});
  EXPECT_EQ(k3.graph, oracle::complete(3));
  auto k2 = induced_subgraph(oracle::cycle(6), std::vector<Vertex>{1, 0});
  EXPECT_EQ(k2.graph, Graph(2, {{0, 1}}));
  EXPECT_EQ(k2.original_vertex, (std::vector<Vertex>{0, 1}));
  EXPECT_THROW(induced_subgraph(oracle::cycle(6), std::vector<Vertex>{}), std::invalid_argument);
}

TEST(QuotientTest, AntipodalQuotientOfHexagonIsTriangle) {
  VertexPartition cells(6, {{0, 3}, {1, 4}, {2, 5}});
  EXPECT_EQ(quotient_graph(oracle::cycle(6), cells), oracle::cycle(3));
}

TEST(QuotientTest, SingletonCellsGiveTheSameGraph) {
  std::mt19937_64 rng(5);
  Graph g = oracle::random_graph(9, 0.4, rng);
  EXPECT_EQ(quotient_graph(g, VertexPartition::singletons(9)), g);
}

TEST(QuotientTest, InvalidPartitionsRejected) {
  EXPECT_THROW(VertexPartition(3, {{0, 1}}), std::invalid_argument);
  EXPECT_THROW(VertexPartition(3, {{0, 1}, {1, 2}}), std::invalid_argument);
  EXPECT_THROW(VertexPartition(3, {{0, 1, 2}, {}}), std::invalid_argument);
  EXPECT_THROW(quotient_graph(oracle::cycle(4), VertexPartition::singletons(3)),
               std::invalid_argument);
}

TEST(DimacsTest, WriteThenReadGivesTheSameGraph) {
  Graph g = oracle::petersen();
  std::stringstream buffer;
  write_dimacs(buffer, g, {"petersen"});
  EXPECT_EQ(read_dimacs(buffer), g);
}

TEST(DimacsTest, WriterSortsEdges) {
  std::stringstream buffer;
  write_dimacs(buffer, Graph(3, {{2, 1}, {0, 2}}));
  EXPECT_EQ(buffer.str(), "p edge 3 2\ne 1 3\ne 2 3\n");
}

TEST(DimacsTest, ZeroBasedIdRejectedWithLineNumber) {
  std::stringstream in("c comment\np edge 3 1\ne 0 1\n");
  try {
    read_dimacs(in);
    FAIL() << "expected a parse error";
  } catch (const DimacsError& e) {
    EXPECT_EQ(e.line(), 3u);
  }
}

TEST(DimacsTest, DuplicateAndLoopRejected) {
  std::stringstream dup("p edge 3 2\ne 1 2\ne 2 1\n");
  EXPECT_THROW(read_dimacs(dup), DimacsError);
  std::stringstream loop("p edge 3 1\ne 2 2\n");
  EXPECT_THROW(read_dimacs(loop), DimacsError);
  std::stringstream count("p edge 3 2\ne 1 2\n");
  EXPECT_THROW(read_dimacs(count), DimacsError);
}

}  // namespace
}  // namespace rwstab
