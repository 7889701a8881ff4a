#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <string>
#include <optional>
#include <vector>

#include "decycle/graph.hpp"

namespace decycle {

/// A tree with a designated root. Children lists are sorted by id and
/// `bfs_order()` lists vertices in BFS order from the root.
class RootedTree {
public:
  static constexpr Vertex kNone = -1;

  RootedTree(Graph g, Vertex root) : graph_(std::move(g)), root_(root) {
    if (!is_tree(graph_))
      throw GraphError("graph is not a tree");
    if (root < 0 || static_cast<std::size_t>(root) >= graph_.order())
      throw GraphError("root " + std::to_string(root) + " out of range");

    const std::size_t n = graph_.order();
    parent_.assign(n, kNone);
    depth_.assign(n, 0);
    children_.assign(n, {});
    order_.reserve(n);
    order_.push_back(root_);
    std::vector<char> seen(n, 0);
    seen[root_] = 1;
    for (std::size_t head = 0; head < order_.size(); ++head) {
      Vertex v = order_[head];
      for (Vertex w : graph_.neighbors(v)) {
        if (seen[w])
          continue;
        seen[w] = 1;
        parent_[w] = v;
        depth_[w] = depth_[v] + 1;
        children_[v].push_back(w);
        order_.push_back(w);
      }
    }
  }

  const Graph &graph() const { return graph_; }
  std::size_t order() const { return graph_.order(); }
  Vertex root() const { return root_; }

  std::optional<Vertex> parent(Vertex v) const {
    if (parent_[v] == kNone)
      return std::nullopt;
    return parent_[v];
  }
  int depth(Vertex v) const { return depth_[v]; }
  const std::vector<int> &depths() const { return depth_; }
  const std::vector<Vertex> &children(Vertex v) const { return children_[v]; }
  const std::vector<Vertex> &bfs_order() const { return order_; }

  int height() const {
    int h = 0;
    for (int d : depth_)
      h = std::max(h, d);
    return h;
  }

private:
  Graph graph_;
  Vertex root_;
  std::vector<Vertex> parent_;
  std::vector<int> depth_;
  std::vector<std::vector<Vertex>> children_;
  std::vector<Vertex> order_;
};

/// Center of a tree by repeated leaf stripping. Returns one or two vertices, ascending.
inline std::vector<Vertex> tree_center(const Graph &g) {
  if (!is_tree(g))
    throw GraphError("graph is not a tree");
  const std::size_t n = g.order();
  if (n == 1)
    return {0};
  std::vector<std::size_t> deg(n);
  std::vector<Vertex> layer;
  for (std::size_t v = 0; v < n; ++v) {
    deg[v] = g.degree(static_cast<Vertex>(v));
    if (deg[v] == 1)
      layer.push_back(static_cast<Vertex>(v));
  }
  std::size_t remaining = n;
  while (remaining > 2) {
    remaining -= layer.size();
    std::vector<Vertex> next;
    for (Vertex v : layer)
      for (Vertex w : g.neighbors(v))
        if (--deg[w] == 1)
          next.push_back(w);
    layer = std::move(next);
  }
  std::sort(layer.begin(), layer.end());
  return layer;
}

/// Roots the tree at its center; with two centers the smaller id wins.
inline RootedTree root_at_center(const Graph &g) {
  auto center = tree_center(g);
  return RootedTree(g, center.front());
}

/// Double-sweep BFS; valid for trees only.
inline int tree_diameter(const Graph &tree) {
  if (tree.order() <= 1)
    return 0;
  auto d0 = bfs_distances(tree, 0);
  auto far = static_cast<Vertex>(std::max_element(d0.begin(), d0.end()) - d0.begin());
  auto d1 = bfs_distances(tree, far);
  return *std::max_element(d1.begin(), d1.end());
}

struct TreeStats {
  int diameter = 0;
  int radius = 0;
  std::vector<Vertex> center;
  std::size_t out = 0;        // number of leaves
  std::vector<int> excess;    // ex(v) per vertex; zero on leaves
  std::size_t depth_one_degree_two = 0; // degree-2 vertices at depth 1

  int excess_sum() const { return std::accumulate(excess.begin(), excess.end(), 0); }
};

/// Eccentricity of the root is the radius only when the tree is rooted at a
/// center; diameter and center are computed independently of the root.
inline TreeStats tree_stats(const RootedTree &t) {
  const Graph &g = t.graph();
  const std::size_t n = g.order();
  TreeStats s;
  s.center = tree_center(g);

  s.diameter = tree_diameter(g);
  s.radius = (s.diameter + 1) / 2;

  s.excess.assign(n, 0);
  for (std::size_t v = 0; v < n; ++v) {
    const auto vid = static_cast<Vertex>(v);
    if (g.degree(vid) == 1)
      ++s.out;
    if (g.degree(vid) < 2)
      continue;
    int low = 0;
    for (Vertex w : g.neighbors(vid))
      if (g.degree(w) < 3)
        ++low;
    s.excess[v] = low > 2 ? low - 2 : 0;
  }
  for (Vertex c : t.children(t.root()))
    if (g.degree(c) == 2)
      ++s.depth_one_degree_two;
  return s;
}

} // namespace decycle
