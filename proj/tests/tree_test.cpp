#include <gtest/gtest.h>

#include "decycle/generators.hpp"
#include "decycle/tree.hpp"

using namespace decycle;

TEST(RootAtCenter, PathFive) {
  RootedTree t = root_at_center(path_graph(5));
  EXPECT_EQ(t.root(), 2);
  EXPECT_EQ(t.depths(), (std::vector<int>{2, 1, 0, 1, 2}));
  EXPECT_FALSE(t.parent(2).has_value());
  EXPECT_EQ(t.parent(0), 1);
}

TEST(RootAtCenter, StarHub) {
  RootedTree t = root_at_center(star_graph(4));
  EXPECT_EQ(t.root(), 0);
  EXPECT_EQ(tree_stats(t).radius, 1);
}

TEST(RootAtCenter, TwoCentersPickSmallerId) {
  EXPECT_EQ(tree_center(path_graph(4)), (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(root_at_center(path_graph(4)).root(), 1);
  // same path with labels reversed: 3-2-1-0 still has center {1,2}
  Graph relabeled(4, {{3, 2}, {2, 1}, {1, 0}});
  EXPECT_EQ(root_at_center(relabeled).root(), 1);
}

TEST(RootAtCenter, RejectsNonTrees) {
  EXPECT_THROW(root_at_center(cycle_graph(4)), GraphError);
  EXPECT_THROW(root_at_center(Graph(4, {{0, 1}, {2, 3}})), GraphError);
}

TEST(RootedTree, ParentDepthInvariants) {
  for (std::uint64_t s = 0; s < 50; ++s) {
    Graph g = random_tree(1 + s % 15, s);
    for (Vertex root = 0; root < static_cast<Vertex>(g.order()); root += 3) {
      RootedTree t(g, root);
      EXPECT_EQ(t.depth(root), 0);
      for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
        if (v == root)
          continue;
        auto p = t.parent(v);
        ASSERT_TRUE(p.has_value());
        EXPECT_TRUE(g.has_edge(v, *p));
        EXPECT_EQ(t.depth(v), t.depth(*p) + 1);
      }
    }
  }
}

TEST(TreeStats, Star) {
  TreeStats s = tree_stats(root_at_center(star_graph(4)));
  EXPECT_EQ(s.out, 3u);
  EXPECT_EQ(s.excess[0], 1);
  EXPECT_EQ(s.diameter, 2);
  EXPECT_EQ(s.radius, 1);
}

TEST(TreeStats, PathFive) {
  TreeStats s = tree_stats(root_at_center(path_graph(5)));
  EXPECT_EQ(s.out, 2u);
  EXPECT_EQ(s.excess_sum(), 0);
  EXPECT_EQ(s.diameter, 4);
  EXPECT_EQ(s.radius, 2);
}

TEST(TreeStats, SpiderTwoTwoTwo) {
  // center 0 with three degree-2 neighbors: ex(0) = 3 - 2 = 1
  RootedTree t = root_at_center(spider_graph({2, 2, 2}));
  TreeStats s = tree_stats(t);
  EXPECT_EQ(t.root(), 0);
  EXPECT_EQ(s.out, 3u);
  EXPECT_EQ(s.excess[0], 1);
  EXPECT_EQ(s.excess_sum(), 1);
  EXPECT_EQ(s.diameter, 4);
  EXPECT_EQ(s.depth_one_degree_two, 3u);
}

TEST(TreeStats, RadiusDiameterRelation) {
  for (std::uint64_t s = 0; s < 300; ++s) {
    Graph g = random_tree(2 + s % 14, s);
    RootedTree t = root_at_center(g);
    TreeStats st = tree_stats(t);
    EXPECT_LE(st.diameter, 2 * st.radius);
    EXPECT_LE(2 * st.radius, st.diameter + 1);
    EXPECT_EQ(t.height(), st.radius); // rooted at a center, eccentricity = radius
    EXPECT_TRUE(st.center.size() == 1 || st.center.size() == 2);
    EXPECT_EQ(st.center.size() == 2, st.diameter % 2 == 1);
    EXPECT_GE(st.out, 2u);
  }
}

TEST(TreeStats, ExcessMatchesDefinition) {
  for (std::uint64_t s = 0; s < 100; ++s) {
    Graph g = random_tree(3 + s % 12, 1000 + s);
    TreeStats st = tree_stats(root_at_center(g));
    for (Vertex v = 0; v < static_cast<Vertex>(g.order()); ++v) {
      int low = 0;
      for (Vertex w : g.neighbors(v))
        low += g.degree(w) <= 2;
      int expected = (g.degree(v) >= 2 && low > 2) ? low - 2 : 0;
      EXPECT_EQ(st.excess[v], expected);
    }
  }
}

TEST(TreeStats, TinyTrees) {
  TreeStats one = tree_stats(root_at_center(path_graph(1)));
  EXPECT_EQ(one.diameter, 0);
  EXPECT_EQ(one.out, 0u);
  TreeStats two = tree_stats(root_at_center(path_graph(2)));
  EXPECT_EQ(two.diameter, 1);
  EXPECT_EQ(two.radius, 1);
  EXPECT_EQ(two.out, 2u);
}
