#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace decycle {

using Vertex = std::int32_t;

/// Undirected edge, always stored with u < v.
struct Edge {
  Vertex u = 0;
  Vertex v = 0;

  constexpr Edge() = default;
  constexpr Edge(Vertex a, Vertex b) : u(a < b ? a : b), v(a < b ? b : a) {}

  constexpr bool touches(Vertex x) const { return u == x || v == x; }
  constexpr Vertex other(Vertex x) const { return x == u ? v : u; }

  friend constexpr auto operator<=>(const Edge &, const Edge &) = default;
};

inline std::ostream &operator<<(std::ostream &os, const Edge &e) {
  return os << e.u << '-' << e.v;
}

class GraphError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

class ParseError : public GraphError {
public:
  ParseError(std::size_t line, const std::string &what)
      : GraphError("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

private:
  std::size_t line_;
};

/// Simple undirected graph on dense vertex ids 0..n-1. Immutable once built.
class Graph {
public:
  Graph() = default;

  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end());
    for (std::size_t i = 0; i < edges_.size(); ++i) {
      const Edge &e = edges_[i];
      if (e.u == e.v)
        throw GraphError("self-loop at vertex " + std::to_string(e.u));
      if (e.u < 0 || static_cast<std::size_t>(e.v) >= n_)
        throw GraphError("edge " + to_string(e) + " out of range for n=" + std::to_string(n_));
      if (i > 0 && edges_[i - 1] == e)
        throw GraphError("duplicate edge " + to_string(e));
    }
    adjacency_.assign(n_, {});
    for (const Edge &e : edges_) {
      adjacency_[e.u].push_back(e.v);
      adjacency_[e.v].push_back(e.u);
    }
    for (auto &nbrs : adjacency_)
      std::sort(nbrs.begin(), nbrs.end());
  }

  std::size_t order() const { return n_; }
  std::size_t size() const { return edges_.size(); }

  const std::vector<Edge> &edges() const { return edges_; }
  const std::vector<Vertex> &neighbors(Vertex v) const { return adjacency_[v]; }
  std::size_t degree(Vertex v) const { return adjacency_[v].size(); }

  bool has_edge(Vertex a, Vertex b) const {
    if (a == b || a < 0 || b < 0 || static_cast<std::size_t>(a) >= n_ ||
        static_cast<std::size_t>(b) >= n_)
      return false;
    const auto &nb = adjacency_[a];
    return std::binary_search(nb.begin(), nb.end(), b);
  }
  bool has_edge(const Edge &e) const { return has_edge(e.u, e.v); }

  /// Position of e in edges(), if present.
  std::optional<std::size_t> edge_index(const Edge &e) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    if (it == edges_.end() || *it != e)
      return std::nullopt;
    return static_cast<std::size_t>(it - edges_.begin());
  }

  std::vector<Vertex> leaves() const {
    std::vector<Vertex> out;
    for (std::size_t v = 0; v < n_; ++v)
      if (adjacency_[v].size() == 1)
        out.push_back(static_cast<Vertex>(v));
    return out;
  }

  friend bool operator==(const Graph &a, const Graph &b) {
    return a.n_ == b.n_ && a.edges_ == b.edges_;
  }

  static std::string to_string(const Edge &e) {
    return std::to_string(e.u) + "-" + std::to_string(e.v);
  }

private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<Vertex>> adjacency_;
};

namespace detail {

inline std::size_t count_components(const Graph &g) {
  std::vector<char> seen(g.order(), 0);
  std::vector<Vertex> stack;
  std::size_t components = 0;
  for (std::size_t s = 0; s < g.order(); ++s) {
    if (seen[s])
      continue;
    ++components;
    seen[s] = 1;
    stack.push_back(static_cast<Vertex>(s));
    while (!stack.empty()) {
      Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbors(v))
        if (!seen[w]) {
          seen[w] = 1;
          stack.push_back(w);
        }
    }
  }
  return components;
}

} // namespace detail

inline bool is_connected(const Graph &g) {
  return g.order() <= 1 || detail::count_components(g) == 1;
}

inline bool is_tree(const Graph &g) {
  return g.order() >= 1 && g.size() + 1 == g.order() && is_connected(g);
}

/// BFS distances from a source; unreachable vertices get -1.
inline std::vector<int> bfs_distances(const Graph &g, Vertex source) {
  std::vector<int> dist(g.order(), -1);
  std::vector<Vertex> queue{source};
  dist[source] = 0;
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Vertex v = queue[head];
    for (Vertex w : g.neighbors(v))
      if (dist[w] < 0) {
        dist[w] = dist[v] + 1;
        queue.push_back(w);
      }
  }
  return dist;
}

// Edge-list format: header "n m", then m lines "u v". Blank lines and
// lines starting with '#' are ignored.
inline Graph parse_graph(std::istream &in) {
  std::string line;
  std::size_t lineno = 0;
  std::optional<std::pair<long long, long long>> header;
  std::vector<Edge> edges;
  std::vector<std::size_t> edge_lines;

  auto content = [](const std::string &s) {
    auto pos = s.find_first_not_of(" \t\r");
    return pos != std::string::npos && s[pos] != '#';
  };

  while (std::getline(in, line)) {
    ++lineno;
    if (!content(line))
      continue;
    std::istringstream fields(line);
    long long a = 0, b = 0;
    std::string extra;
    if (!(fields >> a >> b) || (fields >> extra))
      throw ParseError(lineno, "expected two integers");
    if (!header) {
      if (a < 0 || b < 0)
        throw ParseError(lineno, "negative count in header");
      header.emplace(a, b);
      continue;
    }
    if (static_cast<long long>(edges.size()) >= header->second)
      throw ParseError(lineno, "more edges than the header declares (" +
                                   std::to_string(header->second) + ")");
    if (a < 0 || b < 0 || a >= header->first || b >= header->first)
      throw ParseError(lineno, "vertex id out of range 0.." + std::to_string(header->first - 1));
    if (a == b)
      throw ParseError(lineno, "self-loop at vertex " + std::to_string(a));
    Edge e(static_cast<Vertex>(a), static_cast<Vertex>(b));
    for (std::size_t i = 0; i < edges.size(); ++i)
      if (edges[i] == e)
        throw ParseError(lineno, "duplicate edge " + Graph::to_string(e) +
                                     " (first seen on line " + std::to_string(edge_lines[i]) + ")");
    edges.push_back(e);
    edge_lines.push_back(lineno);
  }
  if (!header)
    throw ParseError(lineno, "missing header line \"n m\"");
  if (static_cast<long long>(edges.size()) != header->second)
    throw ParseError(lineno, "header declares " + std::to_string(header->second) +
                                 " edges but " + std::to_string(edges.size()) + " were given");
  return Graph(static_cast<std::size_t>(header->first), std::move(edges));
}

inline Graph parse_graph(const std::string &text) {
  std::istringstream in(text);
  return parse_graph(in);
}

inline void write_edge_list(std::ostream &os, const Graph &g) {
  os << g.order() << ' ' << g.size() << '\n';
  for (const Edge &e : g.edges())
    os << e.u << ' ' << e.v << '\n';
}

inline std::string to_edge_list(const Graph &g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

/// Graphviz DOT document; highlighted edges are drawn bold red.
inline std::string to_dot(const Graph &g, const std::vector<Edge> &highlight = {}) {
  std::vector<Edge> marked = highlight;
  std::sort(marked.begin(), marked.end());
  for (const Edge &e : marked)
    if (!g.has_edge(e))
      throw GraphError("highlighted edge " + Graph::to_string(e) + " is not in the graph");

  std::ostringstream os;
  os << "graph G {\n";
  for (std::size_t v = 0; v < g.order(); ++v)
    os << "  " << v << ";\n";
  for (const Edge &e : g.edges()) {
    os << "  " << e.u << " -- " << e.v;
    if (std::binary_search(marked.begin(), marked.end(), e))
      os << " [color=red, penwidth=2.5]";
    os << ";\n";
  }
  os << "}\n";
  return os.str();
}

} // namespace decycle
