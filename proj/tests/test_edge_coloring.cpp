#include <gtest/gtest.h>

#include <random>

#include "goldcord/edge_coloring.hpp"
#include "goldcord/goldberg.hpp"
#include "oracles.hpp"

using namespace goldcord;

namespace {

Graph prism(std::size_t k) {
  Graph g(2 * k);
  for (Vertex i = 0; i < k; ++i) {
    g.add_edge(i, (i + 1) % k);
    g.add_edge(k + i, k + (i + 1) % k);
    g.add_edge(i, k + i);
  }
  return g;
}

Graph k33() {
  Graph g(6);
  for (Vertex a = 0; a < 3; ++a) {
    for (Vertex b = 3; b < 6; ++b) g.add_edge(a, b);
  }
  return g;
}

}  // namespace

TEST(ThreeEdgeColoring, K4IsColorable) {
  auto c = find_3_edge_coloring(complete_graph(4));
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(oracle::coloring_is_proper(complete_graph(4), *c));
}

TEST(ThreeEdgeColoring, PetersenHasNone) {
  // frozen from full 3^15 enumeration
  EXPECT_FALSE(oracle::three_edge_colorable_full(petersen()));
  EXPECT_FALSE(find_3_edge_coloring(petersen()).has_value());
}

TEST(ThreeEdgeColoring, GoldbergFiveHasNone) {
  auto r = search_3_edge_coloring(goldberg(5).graph());
  EXPECT_FALSE(r.coloring.has_value());
  EXPECT_FALSE(r.exhausted);
  EXPECT_GT(r.nodes, 0u);
}

TEST(ThreeEdgeColoring, RejectsNonCubic) {
  try {
    find_3_edge_coloring(path_graph(3));
    FAIL();
  } catch (const GraphError& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotCubic);
  }
}

TEST(ThreeEdgeColoring, BudgetStopsSearch) {
  auto r = search_3_edge_coloring(goldberg(7).graph(), 100);
  EXPECT_TRUE(r.exhausted);
  EXPECT_LE(r.nodes, 100u);
}

TEST(ThreeEdgeColoring, DeterministicStatistics) {
  auto a = search_3_edge_coloring(goldberg(5).graph());
  auto b = search_3_edge_coloring(goldberg(5).graph());
  EXPECT_EQ(a.nodes, b.nodes);
}

TEST(ThreeEdgeColoring, SmallFamilies) {
  for (std::size_t k = 3; k <= 8; ++k) {
    auto c = find_3_edge_coloring(prism(k));
    ASSERT_TRUE(c.has_value()) << "prism " << k;
    EXPECT_TRUE(oracle::coloring_is_proper(prism(k), *c));
  }
  ASSERT_TRUE(find_3_edge_coloring(k33()).has_value());
}

TEST(ThreeEdgeColoring, CompleteOnRandomCubicGraphs) {
  std::mt19937_64 rng(314);
  std::vector<Graph> corpus{complete_graph(4), k33(), petersen(), prism(5)};
  // Petersen with one vertex replaced by a triangle is still uncolorable
  Graph blown(12);
  for (const Edge& e : petersen().edges()) {
    if (e.u != 0) blown.add_edge(e);
  }
  blown.add_edge(10, 1);
  blown.add_edge(11, 4);
  blown.add_edge(0, 5);
  blown.add_edge(0, 10);
  blown.add_edge(10, 11);
  blown.add_edge(11, 0);
  corpus.push_back(blown);
  for (int trial = 0; trial < 60; ++trial) corpus.push_back(oracle::random_cubic(rng, 4 + 2 * (trial % 7)));
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    const Graph& g = corpus[i];
    ASSERT_LE(g.vertex_count(), 16u);
    auto c = find_3_edge_coloring(g);
    EXPECT_EQ(c.has_value(), oracle::three_edge_colorable(g)) << "graph " << i;
    if (c) {
      EXPECT_TRUE(oracle::coloring_is_proper(g, *c)) << "graph " << i;
    }
  }
}

TEST(ThreeEdgeColoring, DisconnectedCubic) {
  Graph g(8);
  for (const Edge& e : complete_graph(4).edges()) {
    g.add_edge(e);
    g.add_edge(e.u + 4, e.v + 4);
  }
  auto c = find_3_edge_coloring(g);
  ASSERT_TRUE(c.has_value());
  EXPECT_TRUE(is_proper_edge_coloring(g, *c));
}
