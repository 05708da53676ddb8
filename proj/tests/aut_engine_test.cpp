#include "rwstab/automorphisms.hpp"

#include <gtest/gtest.h>

#include <chrono>
#include <random>

#include "oracles.hpp"

namespace rwstab {
namespace {

void expect_engine_matches_oracle(const Graph& g) {
  const auto expected = oracle::count_automorphisms(g);
  auto result = search_automorphisms(g);
  for (const auto& p : result.generators) EXPECT_TRUE(is_automorphism(g, p));
  PermGroup group = automorphism_group(g);
  EXPECT_EQ(group.order(), BigInt(expected));
}

TEST(AutomorphismTest, CycleOrderIsTwiceLength) {
  for (std::size_t n = 3; n <= 40; ++n) {
    EXPECT_EQ(automorphism_group(oracle::cycle(n)).order(), BigInt(2 * n)) << n;
  }
}

TEST(AutomorphismTest, CompleteGraphOrderIsFactorial) {
  BigInt factorial = 1;
  for (std::size_t n = 1; n <= 14; ++n) {
    factorial *= n;
    EXPECT_EQ(automorphism_group(oracle::complete(n)).order(), factorial) << n;
  }
}

TEST(AutomorphismTest, Petersen) {
  EXPECT_EQ(oracle::count_automorphisms(oracle::petersen()), 120u);
  EXPECT_EQ(automorphism_group(oracle::petersen()).order(), 120);
}

TEST(AutomorphismTest, EmptyAndEdgelessGraphs) {
  EXPECT_EQ(automorphism_group(Graph(0, {})).order(), 1);
  EXPECT_EQ(automorphism_group(Graph(6, {})).order(), 720);
}

TEST(AutomorphismTest, ColoringIsRespected) {
  // Colouring one vertex of C6 leaves only the reflection through it.
  std::vector<std::uint32_t> colors(6, 0);
  colors[0] = 1;
  SearchOptions options;
  options.initial_coloring = Coloring(colors);
  EXPECT_EQ(automorphism_group(oracle::cycle(6), options).order(), 2);
}

TEST(AutomorphismTest, ExpiredDeadlineThrows) {
  SearchOptions options;
  options.deadline = std::chrono::steady_clock::now() - std::chrono::seconds(1);
  EXPECT_THROW(automorphism_group(oracle::complete(30), options), SearchTimeout);
}

TEST(AutomorphismProperty, AllConnectedGraphsUpToSixVertices) {
  std::size_t checked = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    oracle::for_each_labeled_graph(n, [&](const Graph& g) {
      if (!is_connected(g)) return;
      ++checked;
      ASSERT_EQ(automorphism_group(g).order(), BigInt(oracle::count_automorphisms(g)));
    });
  }
  EXPECT_GT(checked, 26000u);
}

TEST(AutomorphismProperty, RandomGraphsUpToEightVertices) {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 200; ++trial) {
    Graph g = oracle::random_graph(2 + trial % 7, 0.2 + 0.1 * (trial % 6), rng);
    expect_engine_matches_oracle(g);
  }
}

TEST(AutomorphismProperty, DisconnectedGraphsUpToFiveVertices) {
  for (std::size_t n = 1; n <= 5; ++n) {
    oracle::for_each_labeled_graph(n, [&](const Graph& g) {
      ASSERT_EQ(automorphism_group(g).order(), BigInt(oracle::count_automorphisms(g)));
    });
  }
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  const auto shift = static_cast<Vertex>(g.vertex_count());
  for (auto [u, v] : h.edges()) edges.emplace_back(u + shift, v + shift);
  return Graph(g.vertex_count() + h.vertex_count(), edges);
}

// Two copies of a connected graph: |Aut| = 2|Aut(G)|^2. Inequivalence found
// deep in the tree must not leak into shallower levels.
TEST(AutomorphismProperty, DisjointCopiesSquareTheGroup) {
  std::mt19937_64 rng(77);
  std::vector<Graph> pieces{oracle::petersen(), oracle::cycle(7), oracle::path(5)};
  for (int k = 0; k < 30; ++k) {
    Graph g = oracle::random_graph(5 + k % 4, 0.45, rng);
    if (is_connected(g)) pieces.push_back(g);
  }
  for (const auto& g : pieces) {
    const BigInt single = oracle::count_automorphisms(g);
    EXPECT_EQ(automorphism_group(disjoint_union(g, g)).order(), 2 * single * single);
    EXPECT_EQ(automorphism_group(disjoint_union(g, oracle::random_relabel(g, rng))).order(),
              2 * single * single);
  }
}

TEST(AutomorphismProperty, UnionsOfSmallGraphsAgainstBruteForce) {
  std::mt19937_64 rng(78);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_graph(3 + trial % 3, 0.5, rng);
    Graph h = oracle::random_graph(3 + trial % 4, 0.5, rng);
    Graph u = disjoint_union(g, h);
    ASSERT_EQ(automorphism_group(u).order(), BigInt(oracle::count_automorphisms(u)));
  }
}

TEST(CanonicalFormTest, InvariantUnderRelabeling) {
  std::mt19937_64 rng(17);
  const std::vector<Graph> samples{oracle::petersen(), oracle::cycle(9),
                                   oracle::random_graph(12, 0.35, rng),
                                   oracle::random_graph(15, 0.2, rng)};
  for (const auto& g : samples) {
    const auto base = canonical_form(g);
    for (int k = 0; k < 50; ++k) EXPECT_EQ(canonical_form(oracle::random_relabel(g, rng)), base);
  }
}

TEST(CanonicalFormTest, LabelingReproducesForm) {
  std::mt19937_64 rng(23);
  Graph g = oracle::random_graph(11, 0.4, rng);
  auto labeling = canonical_labeling(g);
  Graph relabeled = relabel(g, labeling.position_of);
  EXPECT_EQ(relabeled.edges(), labeling.form.edges);
}

TEST(CanonicalFormTest, SeparatesNonIsomorphicGraphsOnFiveVertices) {
  // 34 isomorphism classes of graphs on five vertices.
  std::set<std::vector<Edge>> forms;
  oracle::for_each_labeled_graph(5, [&](const Graph& g) { forms.insert(canonical_form(g).edges); });
  EXPECT_EQ(forms.size(), 34u);
}

TEST(CanonicalFormTest, SixVertexClassCount) {
  std::set<std::vector<Edge>> forms;
  oracle::for_each_labeled_graph(6, [&](const Graph& g) { forms.insert(canonical_form(g).edges); });
  EXPECT_EQ(forms.size(), 156u);
}

TEST(IsomorphismTest, MapIsVerified) {
  std::mt19937_64 rng(5);
  Graph g = oracle::random_graph(10, 0.3, rng);
  Graph h = oracle::random_relabel(g, rng);
  auto map = are_isomorphic(g, h);
  ASSERT_TRUE(map.has_value());
  EXPECT_EQ(relabel(g, map->images()), h);
  EXPECT_FALSE(are_isomorphic(oracle::cycle(6), Graph(6, {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}})));
  EXPECT_FALSE(are_isomorphic(oracle::cycle(5), oracle::cycle(6)));
}

TEST(EdgeOrbitTest, Examples) {
  EXPECT_EQ(edge_orbit_count(oracle::cycle(6), automorphism_group(oracle::cycle(6))), 1u);
  EXPECT_EQ(edge_orbit_count(oracle::path(4), automorphism_group(oracle::path(4))), 2u);
  EXPECT_EQ(edge_orbit_count(oracle::petersen(), automorphism_group(oracle::petersen())), 1u);
  PermGroup wrong(4, {Permutation::parse("(0 2)", 4)});
  EXPECT_THROW(edge_orbit_count(oracle::path(4), wrong), std::invalid_argument);
}

TEST(EdgeOrbitTest, OrbitsPartitionTheEdges) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 40; ++trial) {
    Graph g = oracle::random_graph(8, 0.4, rng);
    auto orbits = edge_orbits(g, automorphism_group(g));
    std::vector<int> seen(g.edge_count(), 0);
    for (const auto& orbit : orbits)
      for (auto e : orbit) ++seen[e];
    for (int s : seen) EXPECT_EQ(s, 1);
  }
}

TEST(ArcTransitivityTest, Examples) {
  auto petersen = oracle::petersen();
  auto aut = automorphism_group(petersen);
  EXPECT_TRUE(is_s_arc_transitive(petersen, aut, 3));
  EXPECT_FALSE(is_s_arc_transitive(petersen, aut, 4));
  EXPECT_EQ(s_arc_count(petersen, 1), 30u);
  EXPECT_EQ(s_arc_count(petersen, 3), 30u * 2 * 2);
  auto c5 = oracle::cycle(5);
  EXPECT_TRUE(is_s_arc_transitive(c5, automorphism_group(c5), 7));
  auto k4 = oracle::complete(4);
  EXPECT_TRUE(is_s_arc_transitive(k4, automorphism_group(k4), 2));
  EXPECT_FALSE(is_s_arc_transitive(k4, automorphism_group(k4), 3));
  EXPECT_THROW(is_s_arc_transitive(Graph(4, {{0, 1}, {2, 3}}), PermGroup::trivial(4), 1),
               std::invalid_argument);
  EXPECT_THROW(is_s_arc_transitive(c5, automorphism_group(c5), 0), std::invalid_argument);
}

TEST(ColorRefinementTest, RegularGraphStaysUniform) {
  auto c = color_refinement(oracle::petersen(), Coloring::uniform(10));
  EXPECT_EQ(c.color_count(), 1u);
}

TEST(ColorRefinementTest, PathSplitsByDistanceFromEnds) {
  auto c = color_refinement(oracle::path(5), Coloring::uniform(5));
  EXPECT_EQ(c.color_count(), 3u);
  EXPECT_EQ(c[0], c[4]);
  EXPECT_EQ(c[1], c[3]);
  EXPECT_NE(c[0], c[2]);
}

TEST(ColorRefinementTest, ResultIsEquitable) {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    Graph g = oracle::random_graph(12, 0.3, rng);
    auto c = color_refinement(g, Coloring::uniform(12));
    for (Vertex u = 0; u < 12; ++u)
      for (Vertex v = 0; v < 12; ++v) {
        if (c[u] != c[v]) continue;
        std::vector<std::size_t> du(c.color_count()), dv(c.color_count());
        for (Vertex w : g.neighbors(u)) ++du[c[w]];
        for (Vertex w : g.neighbors(v)) ++dv[c[w]];
        EXPECT_EQ(du, dv);
      }
  }
}

TEST(ColorRefinementTest, InvalidColoringRejected) {
  EXPECT_THROW(Coloring({0, 2}), std::invalid_argument);
}

}  // namespace
}  // namespace rwstab
