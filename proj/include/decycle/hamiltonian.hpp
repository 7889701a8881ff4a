#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <vector>

#include "decycle/graph.hpp"
#include "decycle/tree.hpp"

namespace decycle {

/// Edges added to a tree to make it Hamiltonian, and the resulting cycle.
struct Completion {
  std::vector<Edge> added_edges; // in the order they were added
  std::vector<Vertex> cycle;     // Hamiltonian cycle of tree + added_edges, starting at its lowest-id vertex
};

/// Grows a cycle leaf by leaf: close the path between the two lowest-id
/// leaves, then repeatedly take the lowest-id leaf v off the cycle, walk to
/// its nearest cycle vertex u, drop the cycle edge u-w (w the smaller-id
/// cycle neighbor of u) and splice in the path u..v plus the new edge v-w.
/// Uses exactly out(T) - 1 new edges.
inline Completion hc_construct(const Graph &tree) {
  if (!is_tree(tree))
    throw GraphError("hc_construct: graph is not a tree");
  const std::size_t n = tree.order();
  if (n < 3)
    throw GraphError("hc_construct: needs at least three vertices");

  const std::vector<Vertex> leaves = tree.leaves(); // ascending
  std::vector<Vertex> next(n, RootedTree::kNone), prev(n, RootedTree::kNone);
  std::vector<char> on_cycle(n, 0);
  Completion out;

  // initial cycle: tree path between the two smallest leaves, closed by a new edge
  {
    const Vertex a = leaves[0], b = leaves[1];
    RootedTree rooted(tree, a);
    std::vector<Vertex> path{b};
    while (path.back() != a)
      path.push_back(*rooted.parent(path.back()));
    std::reverse(path.begin(), path.end()); // a .. b
    for (std::size_t i = 0; i < path.size(); ++i) {
      on_cycle[path[i]] = 1;
      next[path[i]] = path[(i + 1) % path.size()];
      prev[path[(i + 1) % path.size()]] = path[i];
    }
    out.added_edges.emplace_back(a, b);
  }

  std::vector<int> dist(n);
  std::vector<Vertex> from(n);
  for (std::size_t li = 2; li < leaves.size(); ++li) {
    const Vertex v = leaves[li];
    if (on_cycle[v])
      continue;
    // BFS from v until the cycle is reached; the tree path is unique
    std::fill(dist.begin(), dist.end(), -1);
    std::vector<Vertex> queue{v};
    dist[v] = 0;
    Vertex u = RootedTree::kNone;
    for (std::size_t head = 0; head < queue.size() && u == RootedTree::kNone; ++head) {
      for (Vertex w : tree.neighbors(queue[head])) {
        if (dist[w] >= 0)
          continue;
        dist[w] = dist[queue[head]] + 1;
        from[w] = queue[head];
        if (on_cycle[w]) {
          u = w;
          break;
        }
        queue.push_back(w);
      }
    }
    // path u = p_k, p_{k-1}, ..., p_0 = v
    std::vector<Vertex> path{u};
    while (path.back() != v)
      path.push_back(from[path.back()]);

    const Vertex w = std::min(next[u], prev[u]);
    // splice: u -> p_{k-1} -> ... -> v -> w, in the cycle's own orientation
    if (w == next[u]) {
      Vertex cur = u;
      for (std::size_t i = 1; i < path.size(); ++i) {
        next[cur] = path[i];
        prev[path[i]] = cur;
        cur = path[i];
      }
      next[cur] = w;
      prev[w] = cur;
    } else {
      Vertex cur = u;
      for (std::size_t i = 1; i < path.size(); ++i) {
        prev[cur] = path[i];
        next[path[i]] = cur;
        cur = path[i];
      }
      prev[cur] = w;
      next[w] = cur;
    }
    for (Vertex x : path)
      on_cycle[x] = 1;
    out.added_edges.emplace_back(v, w);
  }

  Vertex start = 0;
  Vertex cur = start;
  do {
    out.cycle.push_back(cur);
    cur = next[cur];
  } while (cur != start && out.cycle.size() <= n);
  return out;
}

/// T[u_i -> u_j]: detach leaf u_i from its neighbor and hang it under leaf u_j.
inline Graph leaf_exchange(const Graph &tree, Vertex ui, Vertex uj) {
  if (!is_tree(tree))
    throw GraphError("leaf_exchange: graph is not a tree");
  auto in_range = [&](Vertex x) { return x >= 0 && static_cast<std::size_t>(x) < tree.order(); };
  if (!in_range(ui) || !in_range(uj))
    throw GraphError("leaf_exchange: vertex out of range");
  if (ui == uj)
    throw GraphError("leaf_exchange: the two leaves must differ");
  if (tree.degree(ui) != 1)
    throw GraphError("leaf_exchange: vertex " + std::to_string(ui) + " is not a leaf");
  if (tree.degree(uj) != 1)
    throw GraphError("leaf_exchange: vertex " + std::to_string(uj) + " is not a leaf");
  const Edge drop(ui, tree.neighbors(ui).front());
  std::vector<Edge> edges;
  edges.reserve(tree.size());
  for (const Edge &e : tree.edges())
    if (e != drop)
      edges.push_back(e);
  edges.emplace_back(uj, ui);
  return Graph(tree.order(), std::move(edges));
}

/// ceil((out + sum of ex(v)) / 2), a lower bound on hc(T).
inline std::size_t hc_lower_bound(const TreeStats &s) {
  const auto total = s.out + static_cast<std::size_t>(s.excess_sum());
  return (total + 1) / 2;
}

/// out(T) - 1, the upper bound realized by hc_construct.
inline std::size_t hc_upper_bound(const TreeStats &s) { return s.out - 1; }

} // namespace decycle
