#pragma once

#include <vector>

#include "decycle/graph.hpp"

namespace decycle {

/// Line graph plus the source edge of each of its vertices. Vertex i of
/// `graph` stands for `source_edges[i]`, and source edges are in sorted order.
struct LineGraph {
  Graph graph;
  std::vector<Edge> source_edges;
};

inline LineGraph line_graph(const Graph &g) {
  const auto &edges = g.edges(); // already sorted
  std::vector<std::vector<Vertex>> incident(g.order());
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].u].push_back(static_cast<Vertex>(i));
    incident[edges[i].v].push_back(static_cast<Vertex>(i));
  }
  std::vector<Edge> lg_edges;
  for (const auto &inc : incident)
    for (std::size_t a = 0; a < inc.size(); ++a)
      for (std::size_t b = a + 1; b < inc.size(); ++b)
        lg_edges.emplace_back(inc[a], inc[b]);
  // two distinct simple edges share at most one endpoint, so no duplicates arise
  return {Graph(edges.size(), std::move(lg_edges)), edges};
}

} // namespace decycle
