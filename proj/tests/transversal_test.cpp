#include <gtest/gtest.h>

#include "lct/fixtures.hpp"
#include "lct/generators.hpp"
#include "lct/transversal.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace lct;

namespace {

class Fig6 : public ::testing::Test {
 protected:
  Graph g = fixtures::fig1();
  Vertex v(const char* n) const { return support::id(g, n); }
  VertexSet k() const { return VertexSet{v("a"), v("b"), v("c"), v("d")}; }
  CycleSeq c() const { return CycleSeq({v("a"), v("v2"), v("b"), v("c"), v("v5")}); }
};

}  // namespace

TEST_F(Fig6, PartsArePairwiseUnrelated) {
  ASSERT_TRUE(c().lies_in(g));
  const VertexSet triple{v("a"), v("b"), v("c")};
  const PathSeq ab = part_between(c(), triple, v("a"), v("b"));
  const PathSeq ac = part_between(c(), triple, v("a"), v("c"));
  const PathSeq bc = part_between(c(), triple, v("b"), v("c"));
  EXPECT_FALSE(sim_k(g, ab, ac, k()));
  EXPECT_FALSE(sim_k(g, ab, bc, k()));
  EXPECT_FALSE(sim_k(g, bc, ac, k()));
}

TEST_F(Fig6, ABreaksTheCycle) {
  EXPECT_TRUE(breaks(g, v("a"), c(), k()));
  EXPECT_THROW(breaks(g, v("d"), c(), k()), precondition_error);
}

TEST_F(Fig6, SimRelatesPartsSharingAComponent) {
  EXPECT_TRUE(sim_k(g, PathSeq({v("b"), v("v3")}), PathSeq({v("v4"), v("c")}), k()));
  EXPECT_FALSE(sim_k(g, PathSeq({v("a"), v("b")}), PathSeq({v("b"), v("v3")}), k()));
}

TEST(BreaksPrecondition, NeedsThreeCrossing) {
  const Graph g = fixtures::fig1();
  auto id = [&](const char* s) { return support::id(g, s); };
  const VertexSet k{id("a"), id("b"), id("c"), id("d")};
  const CycleSeq fenced({id("v3"), id("v4"), id("c"), id("a"), id("b")});
  EXPECT_THROW(breaks(g, id("a"), fenced, k), precondition_error);
}

TEST(Lct, Fixtures) {
  struct Case {
    const char* name;
    int L, lct;
  };
  for (auto [name, L, value] : {Case{"fig1", 9, 1}, Case{"fig2", 8, 1}, Case{"fig4", 9, 1}, Case{"petersen", 9, 2}}) {
    const Graph g = fixtures::named(name);
    const auto r = compute_lct(g);
    EXPECT_EQ(r.L, L) << name;
    EXPECT_EQ(r.value, value) << name;
    EXPECT_EQ(r.value, oracle::lct(g)) << name;
    EXPECT_EQ(lct_naive(g), value) << name;
    for (const auto& c : enumerate_longest_cycles(g)) EXPECT_TRUE(c.vertices().intersects(r.transversal));
  }
}

TEST(Lct, LongestCyclesRepresentSets) {
  const auto r = compute_lct(fixtures::fig4());
  EXPECT_EQ(r.longest_cycles.size(), r.longest_vertex_sets.size());
  for (const auto& c : r.longest_cycles) EXPECT_EQ(c.length(), r.L);
}

TEST(Lct, NaiveRefusesLargeGraphs) {
  EXPECT_THROW(lct_naive(fixtures::cycle(13)), size_limit);
  EXPECT_THROW(compute_lct(fixtures::path(4)), no_cycle);
}

TEST(HittingSet, LexLeastOptimum) {
  std::vector<VertexSet> fam{VertexSet{0, 1}, VertexSet{2, 3}, VertexSet{1, 3}};
  EXPECT_EQ(min_hitting_set(fam, VertexSet::range(4)), (VertexSet{0, 3}));
  EXPECT_EQ(min_hitting_set(fam, VertexSet{1, 2, 3}), (VertexSet{1, 2}));
  EXPECT_EQ(min_hitting_set({}, VertexSet::range(4)), VertexSet{});
  EXPECT_EQ(min_hitting_set({VertexSet{5, 63}}, VertexSet::range(64)), VertexSet{5});
}

TEST(LctProperty, MatchesNaive) {
  int checked = 0;
  for (std::uint64_t seed = 0; checked < 80; ++seed) {
    const int n = 4 + static_cast<int>(seed % 6);
    const Graph g = support::random_graph(n, 0.55, seed);
    if (oracle::longest_cycles(g).empty()) continue;
    ++checked;
    const auto r = compute_lct(g);
    EXPECT_EQ(r.value, lct_naive(g)) << "seed " << seed;
    if (n <= 8) EXPECT_EQ(r.value, oracle::lct(g)) << "seed " << seed;
  }
}

TEST(Attractor, Fig1) {
  const Graph g = fixtures::fig1();
  auto id = [&](const char* s) { return support::id(g, s); };
  const VertexSet s{id("a"), id("b"), id("c"), id("d")};
  const auto longest = enumerate_longest_cycles(g);
  // Hamiltonian cycles pass through every component of G - S, so they cross S.
  for (const auto& c : longest) {
    const auto r = is_attractor(g, c, s, longest);
    EXPECT_FALSE(r.fenced);
    EXPECT_FALSE(r.is_attractor);
  }
  EXPECT_FALSE(find_attractor(g, s, 4).has_value());
  EXPECT_THROW(is_attractor(g, CycleSeq({id("a"), id("b"), id("c")}), s, longest), precondition_error);
}

TEST(Attractor, FoundCycleIsAnAttractor) {
  // Two disjoint-ish blocks glued on a triangle: S = one bag of a 2-tree.
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    const auto gen = gen_ktree(9, 2, seed);
    const Graph& g = gen.graph;
    const auto longest = enumerate_longest_cycles(g);
    for (VertexSet bag : gen.decomposition->bags()) {
      const auto found = find_attractor(g, bag, 3);
      // cross-check against the full scan over listed cycles
      bool any = false;
      for (const auto& c : longest)
        if (is_attractor(g, c, bag, longest).is_attractor) any = true;
      EXPECT_EQ(found.has_value(), any) << "seed " << seed;
      if (found) {
        EXPECT_TRUE(is_attractor(g, found->cycle, bag, longest).is_attractor);
        EXPECT_LE(found->k, 3);
      }
    }
  }
}
