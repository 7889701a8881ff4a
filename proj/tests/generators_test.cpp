#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "decycle/enumerate.hpp"
#include "decycle/generators.hpp"
#include "decycle/tree.hpp"

using namespace decycle;

namespace {

// Textbook O(n^2) decoding, kept separate from the library's linear one.
Graph naive_prufer_decode(const std::vector<Vertex> &seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<int> degree(n, 1);
  for (Vertex x : seq)
    ++degree[x];
  std::vector<Edge> edges;
  for (Vertex x : seq) {
    for (std::size_t leaf = 0; leaf < n; ++leaf) {
      if (degree[leaf] == 1) {
        edges.emplace_back(static_cast<Vertex>(leaf), x);
        --degree[leaf];
        --degree[x];
        break;
      }
    }
  }
  std::vector<Vertex> last;
  for (std::size_t v = 0; v < n; ++v)
    if (degree[v] == 1)
      last.push_back(static_cast<Vertex>(v));
  edges.emplace_back(last[0], last[1]);
  return Graph(n, edges);
}

std::uint64_t ipow(std::uint64_t b, std::size_t e) {
  std::uint64_t r = 1;
  while (e--)
    r *= b;
  return r;
}

} // namespace

TEST(Generators, BasicShapes) {
  EXPECT_EQ(path_graph(4).edges(), (std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}}));
  EXPECT_EQ(cycle_graph(4).size(), 4u);
  EXPECT_EQ(complete_graph(5).size(), 10u);
  Graph s = star_graph(5);
  EXPECT_EQ(s.order(), 5u);
  EXPECT_EQ(s.degree(0), 4u);
  Graph sp = spider_graph({1, 2, 3});
  EXPECT_EQ(sp.order(), 7u);
  EXPECT_EQ(tree_diameter(sp), 5);
  EXPECT_THROW(cycle_graph(2), std::invalid_argument);
}

TEST(Generators, PerfectKary) {
  Graph t = perfect_kary_tree(2, 3);
  EXPECT_EQ(t.order(), 7u);
  EXPECT_EQ(t.size(), 6u);
  EXPECT_EQ(tree_diameter(t), 4);
  EXPECT_TRUE(t.has_edge(0, 1));
  EXPECT_TRUE(t.has_edge(2, 6));
  EXPECT_EQ(perfect_kary_order(3, 3), 13u);
  EXPECT_EQ(perfect_kary_tree(3, 1).order(), 1u);
  EXPECT_THROW(perfect_kary_tree(2, 0), std::invalid_argument);
  EXPECT_THROW(perfect_kary_tree(1, 3), std::invalid_argument);
}

TEST(Generators, KaryTreesHaveFullInternalVertices) {
  for (std::size_t k = 2; k <= 4; ++k) {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      Graph t = random_kary_tree(k, 1 + seed % 7, seed);
      ASSERT_TRUE(is_tree(t));
      EXPECT_EQ(t.order() % k, 1u);
      RootedTree r(t, 0);
      for (Vertex v = 0; v < static_cast<Vertex>(t.order()); ++v) {
        auto c = r.children(v).size();
        EXPECT_TRUE(c == 0 || c == k);
      }
    }
  }
}

TEST(Generators, RandomTreeIsSeeded) {
  EXPECT_EQ(random_tree(12, 7), random_tree(12, 7));
  EXPECT_TRUE(is_tree(random_tree(12, 7)));
  EXPECT_TRUE(is_tree(random_tree(1, 7)));
  EXPECT_TRUE(is_tree(random_tree(2, 7)));
}

TEST(Prufer, StarFromRepeatedHub) {
  EXPECT_EQ(prufer_decode({0, 0}), star_graph(4));
  EXPECT_EQ(prufer_decode({}), path_graph(2));
  EXPECT_EQ(prufer_encode(star_graph(4)), (std::vector<Vertex>{0, 0}));
}

TEST(Prufer, PathEncoding) {
  // leaves 0 and 4: removing 0, then 1, then 2 leaves neighbors 1, 2, 3
  EXPECT_EQ(prufer_encode(path_graph(5)), (std::vector<Vertex>{1, 2, 3}));
}

TEST(Prufer, RejectsBadInput) {
  EXPECT_THROW(prufer_decode({0, 5}), std::invalid_argument);
  EXPECT_THROW(prufer_encode(cycle_graph(4)), GraphError);
}

TEST(Prufer, DecodeMatchesNaiveAndRoundTrips) {
  for (std::size_t n = 2; n <= 7; ++n) {
    for_each_labeled_tree(n, [&](std::uint64_t idx, const Graph &g) {
      auto seq = prufer_sequence_at(n, idx);
      ASSERT_EQ(g, naive_prufer_decode(seq));
      ASSERT_EQ(prufer_encode(g), seq);
    });
  }
}

TEST(Enumerate, CountsAndDistinctness) {
  for (std::size_t n = 1; n <= 7; ++n) {
    auto trees = enumerate_trees(n);
    const std::uint64_t expected = n <= 2 ? 1 : ipow(n, n - 2);
    EXPECT_EQ(labeled_tree_count(n), expected);
    ASSERT_EQ(trees.size(), expected);
    std::set<std::vector<Edge>> distinct;
    for (const Graph &t : trees) {
      EXPECT_TRUE(is_tree(t));
      distinct.insert(t.edges());
    }
    EXPECT_EQ(distinct.size(), expected);
  }
}

TEST(Enumerate, LexicographicOrder) {
  auto prev = prufer_sequence_at(5, 0);
  EXPECT_EQ(prev, (std::vector<Vertex>{0, 0, 0}));
  for (std::uint64_t i = 1; i < labeled_tree_count(5); ++i) {
    auto cur = prufer_sequence_at(5, i);
    EXPECT_LT(prev, cur);
    prev = cur;
  }
  EXPECT_EQ(prev, (std::vector<Vertex>{4, 4, 4}));
}

TEST(Enumerate, RangesPartitionTheSpace) {
  std::vector<Graph> whole = enumerate_trees(6), pieces;
  const std::uint64_t total = labeled_tree_count(6);
  for (std::uint64_t b = 0; b < total; b += 333)
    for_each_labeled_tree(6, [&](std::uint64_t, const Graph &g) { pieces.push_back(g); }, b,
                          std::min(total, b + 333));
  EXPECT_EQ(whole, pieces);
}

TEST(Enumerate, Caps) {
  EXPECT_THROW(enumerate_trees(11), std::invalid_argument);
  EXPECT_THROW(enumerate_trees(13, 13), std::invalid_argument);
  EXPECT_EQ(labeled_tree_count(10), 100000000u);
}
