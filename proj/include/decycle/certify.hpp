#pragma once

// Polynomial-time certificate checks for oracle and DP witnesses. These use
// plain graph traversal and share no code with the subset searches.

#include <algorithm>
#include <vector>

#include "decycle/graph.hpp"

namespace decycle {

namespace detail {

/// Subgraph induced by `vertices`, relabeled 0..k-1 in the given order.
inline Graph induced_subgraph(const Graph &g, const std::vector<Vertex> &vertices) {
  std::vector<Vertex> label(g.order(), -1);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (vertices[i] < 0 || static_cast<std::size_t>(vertices[i]) >= g.order() ||
        label[vertices[i]] >= 0)
      throw GraphError("vertex set has invalid or repeated entries");
    label[vertices[i]] = static_cast<Vertex>(i);
  }
  std::vector<Edge> edges;
  for (const Edge &e : g.edges())
    if (label[e.u] >= 0 && label[e.v] >= 0)
      edges.emplace_back(label[e.u], label[e.v]);
  return Graph(vertices.size(), std::move(edges));
}

} // namespace detail

inline bool is_induced_forest(const Graph &g, const std::vector<Vertex> &vertices) {
  Graph h = detail::induced_subgraph(g, vertices);
  return h.size() + detail::count_components(h) == h.order();
}

inline bool is_induced_tree(const Graph &g, const std::vector<Vertex> &vertices) {
  Graph h = detail::induced_subgraph(g, vertices);
  return h.order() >= 1 && is_tree(h);
}

/// The edges, in order, form a simple path of g.
inline bool is_simple_path(const Graph &g, const std::vector<Edge> &walk) {
  if (walk.empty())
    return true;
  std::vector<Vertex> seq;
  if (walk.size() == 1) {
    seq = {walk[0].u, walk[0].v};
  } else {
    Vertex start = walk[1].touches(walk[0].u) ? walk[0].v : walk[0].u;
    seq.push_back(start);
    for (const Edge &e : walk) {
      if (!e.touches(seq.back()))
        return false;
      seq.push_back(e.other(seq.back()));
    }
  }
  for (const Edge &e : walk)
    if (!g.has_edge(e))
      return false;
  std::vector<Vertex> sorted = seq;
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

/// `cycle` visits every vertex of g once and consecutive vertices are adjacent.
inline bool is_hamiltonian_cycle(const Graph &g, const std::vector<Vertex> &cycle) {
  if (g.order() < 3 || cycle.size() != g.order())
    return false;
  std::vector<Vertex> sorted = cycle;
  std::sort(sorted.begin(), sorted.end());
  for (std::size_t i = 0; i < sorted.size(); ++i)
    if (sorted[i] != static_cast<Vertex>(i))
      return false;
  for (std::size_t i = 0; i < cycle.size(); ++i)
    if (!g.has_edge(cycle[i], cycle[(i + 1) % cycle.size()]))
      return false;
  return true;
}

/// g with extra edges (which must be non-edges of g).
inline Graph with_edges(const Graph &g, const std::vector<Edge> &extra) {
  std::vector<Edge> edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  return Graph(g.order(), std::move(edges));
}

} // namespace decycle
