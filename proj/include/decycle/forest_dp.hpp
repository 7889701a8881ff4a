#pragma once

#include <algorithm>
#include <cstddef>
#include <vector>

#include "decycle/graph.hpp"
#include "decycle/tree.hpp"
#include "decycle/union_find.hpp"

namespace decycle {

/// Edge subset of a host graph whose components are all paths.
struct LinearForest {
  std::vector<Edge> edges; // sorted

  std::size_t size() const { return edges.size(); }
  friend bool operator==(const LinearForest &, const LinearForest &) = default;
};

/// Checks membership in the host, max degree 2 and acyclicity.
inline bool is_linear_forest(const Graph &host, const std::vector<Edge> &edges) {
  std::vector<int> deg(host.order(), 0);
  UnionFind uf(host.order());
  for (const Edge &e : edges) {
    if (!host.has_edge(e))
      return false;
    if (++deg[e.u] > 2 || ++deg[e.v] > 2)
      return false;
    if (!uf.unite(static_cast<std::uint32_t>(e.u), static_cast<std::uint32_t>(e.v)))
      return false;
  }
  return true;
}

/// Forest-degree of v in the given edge set.
inline std::size_t forest_degree(const std::vector<Edge> &edges, Vertex v) {
  return static_cast<std::size_t>(
      std::count_if(edges.begin(), edges.end(), [v](const Edge &e) { return e.touches(v); }));
}

/// Root record of the DP: a maximum linear forest of the whole tree, and a
/// largest one in which the root has forest-degree at most one.
struct DpRecord {
  LinearForest best;
  LinearForest best_constrained;
};

/// Children of a vertex that the chosen forest connects to it (kNone if unused).
struct Join {
  Vertex first = RootedTree::kNone;
  Vertex second = RootedTree::kNone;

  int count() const { return (first != RootedTree::kNone) + (second != RootedTree::kNone); }
  bool contains(Vertex c) const { return c != RootedTree::kNone && (c == first || c == second); }
};

/// Per-vertex DP values for the subtree rooted at each vertex.
struct DpTable {
  std::vector<std::size_t> best;        // |F(T_v)|
  std::vector<std::size_t> constrained; // |F'(T_v)|, root degree <= 1
  std::vector<Join> join_best;
  std::vector<Join> join_constrained;
};

enum class DpStrategy {
  top_two,   // O(n): only the two children with largest gain can matter
  all_pairs, // O(sum of deg^2): every Q_i and R_ij evaluated explicitly
};

namespace detail {

// Combination step at one vertex. Let P be the sum of the children's best
// values and gain(c) = constrained(c) + 1 - best(c); joining child c costs
// best(c) and returns constrained(c) + 1. Ties prefer R over Q over P, and
// among children the smaller id.
inline void combine_top_two(const std::vector<Vertex> &children, DpTable &t, Vertex v) {
  std::size_t sum_best = 0;
  Vertex a = RootedTree::kNone, b = RootedTree::kNone;
  long ga = -1, gb = -1;
  for (Vertex c : children) { // ascending ids
    sum_best += t.best[c];
    long gain = static_cast<long>(t.constrained[c]) + 1 - static_cast<long>(t.best[c]);
    if (gain > ga) {
      b = a, gb = ga;
      a = c, ga = gain;
    } else if (gain > gb) {
      b = c, gb = gain;
    }
  }
  const long p = static_cast<long>(sum_best);
  const long q = a != RootedTree::kNone ? p + ga : -1;
  const long r = b != RootedTree::kNone ? p + ga + gb : -1;

  Join jq{a, RootedTree::kNone};
  Join jr{std::min(a, b), std::max(a, b)};

  if (r >= 0 && r >= q && r >= p) {
    t.best[v] = static_cast<std::size_t>(r);
    t.join_best[v] = jr;
  } else if (q >= 0 && q >= p) {
    t.best[v] = static_cast<std::size_t>(q);
    t.join_best[v] = jq;
  } else {
    t.best[v] = static_cast<std::size_t>(p);
    t.join_best[v] = {};
  }
  if (q >= 0 && q >= p) {
    t.constrained[v] = static_cast<std::size_t>(q);
    t.join_constrained[v] = jq;
  } else {
    t.constrained[v] = static_cast<std::size_t>(p);
    t.join_constrained[v] = {};
  }
}

inline void combine_all_pairs(const std::vector<Vertex> &children, DpTable &t, Vertex v) {
  std::size_t p = 0;
  for (Vertex c : children)
    p += t.best[c];

  long best_q = -1, best_r = -1;
  Join jq, jr;
  for (std::size_t i = 0; i < children.size(); ++i) {
    Vertex ci = children[i];
    long q = static_cast<long>(p - t.best[ci] + t.constrained[ci] + 1);
    if (q > best_q) {
      best_q = q;
      jq = {ci, RootedTree::kNone};
    }
    for (std::size_t j = i + 1; j < children.size(); ++j) {
      Vertex cj = children[j];
      long r = static_cast<long>(p - t.best[ci] - t.best[cj] + t.constrained[ci] +
                                 t.constrained[cj] + 2);
      if (r > best_r) {
        best_r = r;
        jr = {ci, cj};
      }
    }
  }
  const long pl = static_cast<long>(p);
  if (best_r >= 0 && best_r >= best_q && best_r >= pl) {
    t.best[v] = static_cast<std::size_t>(best_r);
    t.join_best[v] = jr;
  } else if (best_q >= 0 && best_q >= pl) {
    t.best[v] = static_cast<std::size_t>(best_q);
    t.join_best[v] = jq;
  } else {
    t.best[v] = p;
    t.join_best[v] = {};
  }
  if (best_q >= 0 && best_q >= pl) {
    t.constrained[v] = static_cast<std::size_t>(best_q);
    t.join_constrained[v] = jq;
  } else {
    t.constrained[v] = p;
    t.join_constrained[v] = {};
  }
}

} // namespace detail

/// Bottom-up DP over the rooted tree (leaves have value 0 in both slots).
inline DpTable linear_forest_table(const RootedTree &tree,
                                   DpStrategy strategy = DpStrategy::top_two) {
  const std::size_t n = tree.order();
  DpTable t;
  t.best.assign(n, 0);
  t.constrained.assign(n, 0);
  t.join_best.assign(n, {});
  t.join_constrained.assign(n, {});
  const auto &order = tree.bfs_order();
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const auto &children = tree.children(*it);
    if (children.empty())
      continue;
    if (strategy == DpStrategy::top_two)
      detail::combine_top_two(children, t, *it);
    else
      detail::combine_all_pairs(children, t, *it);
  }
  return t;
}

/// Realizes the forest chosen by the table. With `constrained_root` the root
/// follows its degree<=1 choice.
inline LinearForest reconstruct_forest(const RootedTree &tree, const DpTable &t,
                                       bool constrained_root) {
  const std::size_t n = tree.order();
  std::vector<char> constrained(n, 0);
  constrained[tree.root()] = constrained_root;
  LinearForest f;
  for (Vertex v : tree.bfs_order()) {
    const Join &j = constrained[v] ? t.join_constrained[v] : t.join_best[v];
    for (Vertex c : tree.children(v)) {
      if (j.contains(c)) {
        f.edges.emplace_back(v, c);
        constrained[c] = 1;
      }
    }
  }
  std::sort(f.edges.begin(), f.edges.end());
  return f;
}

inline DpRecord max_linear_forest(const RootedTree &tree,
                                  DpStrategy strategy = DpStrategy::top_two) {
  DpTable t = linear_forest_table(tree, strategy);
  return {reconstruct_forest(tree, t, false), reconstruct_forest(tree, t, true)};
}

/// l(T): edge count of a maximum linear forest. Any root gives the same value.
inline std::size_t l_of_tree(const Graph &tree, Vertex root = 0) {
  RootedTree rt(tree, root); // throws if not a tree
  return linear_forest_table(rt).best[rt.root()];
}

/// Hamiltonian completion number of a tree, n - l(T). Needs n >= 2.
inline std::size_t hc_of_tree(const Graph &tree) {
  if (tree.order() < 2)
    throw GraphError("hamiltonian completion needs at least two vertices");
  return tree.order() - l_of_tree(tree);
}

} // namespace decycle
