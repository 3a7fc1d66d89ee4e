#include <gtest/gtest.h>

#include "lct/fixtures.hpp"
#include "lct/graph.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace lct;

TEST(Graph, RejectsLoopsAndBadIds) {
  Graph g(3);
  EXPECT_THROW(g.add_edge(1, 1), precondition_error);
  EXPECT_THROW(g.add_edge(0, 3), invalid_vertex);
  EXPECT_THROW(Graph(65), size_limit);
}

TEST(Graph, EdgesSortedAndCounted) {
  Graph g(4, {{3, 1}, {0, 2}, {1, 0}});
  EXPECT_EQ(g.size(), 3);
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}}));
  EXPECT_EQ(g.degree(1), 2);
}

TEST(Graph, LabelsMustBeUnique) {
  Graph g(2);
  EXPECT_THROW(g.set_labels({"x", "x"}), precondition_error);
  EXPECT_THROW(g.set_labels({"x"}), precondition_error);
  g.set_labels({"x", "y"});
  EXPECT_EQ(g.find_label("y"), 1);
  EXPECT_EQ(g.label(0), "x");
}

TEST(Graph, Fig1ComponentsWithoutS) {
  const Graph g = fixtures::fig1();
  using support::id;
  const VertexSet s{id(g, "a"), id(g, "b"), id(g, "c"), id(g, "d")};
  const auto comps = components_without(g, s);
  ASSERT_EQ(comps.size(), 4u);
  EXPECT_EQ(comps[0], VertexSet{id(g, "v1")});
  EXPECT_EQ(comps[1], VertexSet{id(g, "v2")});
  EXPECT_EQ(comps[2], (VertexSet{id(g, "v3"), id(g, "v4")}));
  EXPECT_EQ(comps[3], VertexSet{id(g, "v5")});
}

TEST(Graph, InducedRenumbers) {
  const Graph g = fixtures::cycle(5);
  const Graph h = g.induced(VertexSet{0, 1, 2});
  EXPECT_EQ(h.order(), 3);
  EXPECT_EQ(h.edges(), (std::vector<Edge>{{0, 1}, {1, 2}}));
}

TEST(GraphProperty, TwoConnectivityMatchesCutVertexScan) {
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    const int n = 3 + static_cast<int>(seed % 8);
    const Graph g = support::random_graph(n, 0.45, seed);
    EXPECT_EQ(is_2connected(g), oracle::biconnected(g)) << "seed " << seed;
  }
}

TEST(GraphProperty, SeparatesMatchesComponentScan) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const Graph g = support::random_graph(9, 0.3, seed);
    std::mt19937_64 rng(seed);
    VertexSet s(rng() & 0x1FF), x(rng() & 0x1FF);
    EXPECT_EQ(separates(g, s, x), oracle::crosses(g, s.to_vector(), x.to_vector())) << "seed " << seed;
  }
}

TEST(GraphProperty, CliqueNumberMatchesSubsetSearch) {
  for (std::uint64_t seed = 0; seed < 150; ++seed) {
    const Graph g = support::random_graph(9, 0.55, seed);
    EXPECT_EQ(max_clique_size(g), oracle::clique_number(g)) << "seed " << seed;
  }
}

TEST(Fixtures, Sizes) {
  EXPECT_EQ(fixtures::fig1().size(), 19);
  EXPECT_EQ(fixtures::fig2().order(), 8);
  EXPECT_EQ(fixtures::fig2().size(), 12);
  EXPECT_EQ(fixtures::fig4().size(), 21);
  const Graph p = fixtures::petersen();
  EXPECT_EQ(p.size(), 15);
  for (Vertex v = 0; v < 10; ++v) EXPECT_EQ(p.degree(v), 3);
  EXPECT_EQ(fixtures::named("K5").size(), 10);
  EXPECT_EQ(fixtures::named("complete(6)").size(), 15);
  EXPECT_EQ(fixtures::named("cycle(7)").size(), 7);
  EXPECT_EQ(fixtures::named("C4").size(), 4);
  EXPECT_THROW(fixtures::named("nope"), precondition_error);
  EXPECT_THROW(fixtures::named("Kx"), precondition_error);
}

TEST(Fixtures, AllTwoConnected) {
  for (const char* name : {"fig1", "fig2", "fig3", "fig4", "petersen"})
    EXPECT_TRUE(is_2connected(fixtures::named(name))) << name;
}
