#pragma once

// Exponential-time reference computations. Everything here enumerates
// subsets or paths directly and is meant for small graphs only.

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "decycle/graph.hpp"

namespace decycle {

inline constexpr std::size_t kHardOracleVertexCap = 24;
inline constexpr std::size_t kHardOracleEdgeCap = 28;
inline constexpr std::size_t kHardHcVertexCap = 10;

struct OracleCaps {
  std::size_t vertices = 20;   // vertex-subset and path searches
  std::size_t edges = 24;      // edge-subset searches
  std::size_t hc_vertices = 9; // added-edge search for hc
};

class CapExceeded : public std::invalid_argument {
public:
  using std::invalid_argument::invalid_argument;
};

/// Optimum value plus a witness set that realizes it. Among optimal subsets
/// the lexicographically smallest (as a sorted list) is reported.
template <class W>
struct OracleResult {
  std::size_t value = 0;
  std::vector<W> witness;
};

using VertexResult = OracleResult<Vertex>;
using EdgeResult = OracleResult<Edge>;

namespace detail {

inline void check_cap(std::size_t have, std::size_t cap, std::size_t hard, const char *what) {
  const std::size_t limit = std::min(cap, hard);
  if (have > limit)
    throw CapExceeded(std::string("oracle: ") + what + " count " + std::to_string(have) +
                      " exceeds cap " + std::to_string(limit));
}

/// Visits the k-subsets of {0..m-1} in lexicographic order as bit masks.
/// fn(mask) returns true to stop; the function returns whether it stopped.
template <class Fn>
bool for_each_combination(std::size_t m, std::size_t k, Fn &&fn) {
  if (k > m)
    return false;
  std::array<std::uint32_t, 64> idx{};
  std::uint64_t mask = 0;
  for (std::size_t i = 0; i < k; ++i) {
    idx[i] = static_cast<std::uint32_t>(i);
    mask |= std::uint64_t{1} << i;
  }
  while (true) {
    if (fn(mask))
      return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == m - k + (i - 1))
      --i;
    if (i == 0)
      return false;
    --i;
    mask &= ~(std::uint64_t{1} << idx[i]);
    ++idx[i];
    mask |= std::uint64_t{1} << idx[i];
    for (std::size_t j = i + 1; j < k; ++j) {
      mask &= ~(std::uint64_t{1} << idx[j]);
      idx[j] = idx[j - 1] + 1;
      mask |= std::uint64_t{1} << idx[j];
    }
  }
}

/// Largest k (and its first subset in lexicographic order) for which test(mask) holds.
template <class Test>
std::pair<std::size_t, std::uint64_t> largest_subset(std::size_t m, Test &&test) {
  for (std::size_t k = m + 1; k-- > 0;) {
    std::uint64_t found = 0;
    if (for_each_combination(m, k, [&](std::uint64_t mask) {
          if (!test(mask))
            return false;
          found = mask;
          return true;
        }))
      return {k, found};
  }
  return {0, 0};
}

/// Small fixed-capacity union-find for the hot loops.
class TinyUnionFind {
public:
  explicit TinyUnionFind(std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
      p_[i] = static_cast<std::uint8_t>(i);
  }
  std::uint8_t find(std::uint8_t i) {
    while (p_[i] != i)
      i = p_[i] = p_[p_[i]];
    return i;
  }
  bool unite(std::uint8_t a, std::uint8_t b) {
    a = find(a);
    b = find(b);
    if (a == b)
      return false;
    p_[a] = b;
    return true;
  }

private:
  std::array<std::uint8_t, 64> p_{};
};

template <class T>
std::vector<T> pick(const std::vector<T> &items, std::uint64_t mask) {
  std::vector<T> out;
  for (std::size_t i = 0; i < items.size(); ++i)
    if (mask >> i & 1)
      out.push_back(items[i]);
  return out;
}

inline std::vector<Vertex> vertex_list(std::size_t n) {
  std::vector<Vertex> v(n);
  for (std::size_t i = 0; i < n; ++i)
    v[i] = static_cast<Vertex>(i);
  return v;
}

/// Edges of g[mask] are acyclic; optionally also counts them.
inline bool induced_acyclic(const Graph &g, std::uint64_t mask, std::size_t *edge_count = nullptr) {
  TinyUnionFind uf(g.order());
  std::size_t count = 0;
  for (const Edge &e : g.edges()) {
    if ((mask >> e.u & 1) && (mask >> e.v & 1)) {
      if (!uf.unite(static_cast<std::uint8_t>(e.u), static_cast<std::uint8_t>(e.v)))
        return false;
      ++count;
    }
  }
  if (edge_count)
    *edge_count = count;
  return true;
}

inline std::vector<std::uint32_t> adjacency_masks(const Graph &g) {
  std::vector<std::uint32_t> adj(g.order(), 0);
  for (const Edge &e : g.edges()) {
    adj[e.u] |= std::uint32_t{1} << e.v;
    adj[e.v] |= std::uint32_t{1} << e.u;
  }
  return adj;
}

inline bool hamiltonian_masks(const std::vector<std::uint32_t> &adj) {
  const std::size_t n = adj.size();
  if (n < 3)
    return false;
  const std::uint32_t all = (n == 32) ? ~0u : ((std::uint32_t{1} << n) - 1);
  // cycles are anchored at vertex 0
  auto extend = [&](auto &&self, std::uint32_t v, std::uint32_t visited) -> bool {
    if (visited == all)
      return (adj[v] & 1u) != 0;
    std::uint32_t cand = adj[v] & ~visited;
    while (cand) {
      std::uint32_t w = static_cast<std::uint32_t>(std::countr_zero(cand));
      cand &= cand - 1;
      if (self(self, w, visited | (std::uint32_t{1} << w)))
        return true;
    }
    return false;
  };
  return extend(extend, 0u, 1u);
}

} // namespace detail

/// f(G): largest vertex set inducing a forest.
inline VertexResult max_induced_forest(const Graph &g, const OracleCaps &caps = {}) {
  detail::check_cap(g.order(), caps.vertices, kHardOracleVertexCap, "vertex");
  auto [k, mask] = detail::largest_subset(
      g.order(), [&](std::uint64_t m) { return detail::induced_acyclic(g, m); });
  return {k, detail::pick(detail::vertex_list(g.order()), mask)};
}

/// Decycling number n - f(G); the witness is the complement of the forest witness.
inline VertexResult decycling_number(const Graph &g, const OracleCaps &caps = {}) {
  VertexResult forest = max_induced_forest(g, caps);
  VertexResult out{g.order() - forest.value, {}};
  std::size_t j = 0;
  for (std::size_t v = 0; v < g.order(); ++v) {
    if (j < forest.witness.size() && forest.witness[j] == static_cast<Vertex>(v))
      ++j;
    else
      out.witness.push_back(static_cast<Vertex>(v));
  }
  return out;
}

/// t(G): largest vertex set inducing a tree (connected and acyclic).
inline VertexResult max_induced_tree(const Graph &g, const OracleCaps &caps = {}) {
  detail::check_cap(g.order(), caps.vertices, kHardOracleVertexCap, "vertex");
  auto [k, mask] = detail::largest_subset(g.order(), [&](std::uint64_t m) {
    std::size_t edges = 0;
    const auto size = static_cast<std::size_t>(std::popcount(m));
    return size > 0 && detail::induced_acyclic(g, m, &edges) && edges + 1 == size;
  });
  return {k, detail::pick(detail::vertex_list(g.order()), mask)};
}

/// l(G) by scanning edge subsets: every vertex has degree <= 2 and no cycle.
inline EdgeResult max_linear_forest_bf(const Graph &g, const OracleCaps &caps = {}) {
  detail::check_cap(g.size(), caps.edges, kHardOracleEdgeCap, "edge");
  detail::check_cap(g.order(), 64, 64, "vertex");
  const auto &edges = g.edges();
  std::vector<std::uint64_t> incident(g.order(), 0);
  for (std::size_t i = 0; i < edges.size(); ++i) {
    incident[edges[i].u] |= std::uint64_t{1} << i;
    incident[edges[i].v] |= std::uint64_t{1} << i;
  }
  auto [k, mask] = detail::largest_subset(edges.size(), [&](std::uint64_t m) {
    for (std::uint64_t inc : incident)
      if (std::popcount(m & inc) > 2)
        return false;
    detail::TinyUnionFind uf(g.order());
    for (std::uint64_t rest = m; rest; rest &= rest - 1) {
      const Edge &e = edges[static_cast<std::size_t>(std::countr_zero(rest))];
      if (!uf.unite(static_cast<std::uint8_t>(e.u), static_cast<std::uint8_t>(e.v)))
        return false;
    }
    return true;
  });
  return {k, detail::pick(edges, mask)};
}

/// p(G): longest simple path, in edges. The witness lists the path's edges in
/// walking order; the first longest path found by DFS from low ids wins.
inline EdgeResult longest_path_bf(const Graph &g, const OracleCaps &caps = {}) {
  detail::check_cap(g.order(), caps.vertices, kHardOracleVertexCap, "vertex");
  std::vector<Vertex> current, best;
  std::vector<char> used(g.order(), 0);
  auto dfs = [&](auto &&self, Vertex v) -> void {
    if (current.size() > best.size())
      best = current;
    for (Vertex w : g.neighbors(v)) {
      if (used[w])
        continue;
      used[w] = 1;
      current.push_back(w);
      self(self, w);
      current.pop_back();
      used[w] = 0;
    }
  };
  for (std::size_t s = 0; s < g.order(); ++s) {
    used[s] = 1;
    current.assign(1, static_cast<Vertex>(s));
    dfs(dfs, static_cast<Vertex>(s));
    used[s] = 0;
  }
  EdgeResult out;
  for (std::size_t i = 1; i < best.size(); ++i)
    out.witness.emplace_back(best[i - 1], best[i]);
  out.value = out.witness.size();
  return out;
}

/// Backtracking search for a Hamiltonian cycle; false for n < 3.
inline bool is_hamiltonian(const Graph &g, const OracleCaps &caps = {}) {
  detail::check_cap(g.order(), caps.vertices, kHardOracleVertexCap, "vertex");
  return detail::hamiltonian_masks(detail::adjacency_masks(g));
}

/// hc(G): fewest non-edges whose addition makes g Hamiltonian, found by
/// trying added-edge sets in increasing size. Needs n >= 3.
inline EdgeResult hc_bf(const Graph &g, const OracleCaps &caps = {}) {
  detail::check_cap(g.order(), caps.hc_vertices, kHardHcVertexCap, "vertex");
  if (g.order() < 3)
    throw GraphError("hc_bf: a Hamiltonian cycle needs at least three vertices");
  std::vector<Edge> non_edges;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = a + 1; b < g.order(); ++b)
      if (!g.has_edge(static_cast<Vertex>(a), static_cast<Vertex>(b)))
        non_edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));

  const auto base = detail::adjacency_masks(g);
  for (std::size_t k = 0; k <= non_edges.size(); ++k) {
    std::uint64_t found = 0;
    if (detail::for_each_combination(non_edges.size(), k, [&](std::uint64_t m) {
          auto adj = base;
          for (std::uint64_t rest = m; rest; rest &= rest - 1) {
            const Edge &e = non_edges[static_cast<std::size_t>(std::countr_zero(rest))];
            adj[e.u] |= std::uint32_t{1} << e.v;
            adj[e.v] |= std::uint32_t{1} << e.u;
          }
          if (!detail::hamiltonian_masks(adj))
            return false;
          found = m;
          return true;
        }))
      return {k, detail::pick(non_edges, found)};
  }
  throw GraphError("hc_bf: no completion found"); // unreachable for n >= 3
}

/// All spanning trees of a connected graph, by filtering (n-1)-edge subsets.
inline std::vector<Graph> spanning_trees(const Graph &g, const OracleCaps &caps = {}) {
  detail::check_cap(g.size(), caps.edges, kHardOracleEdgeCap, "edge");
  detail::check_cap(g.order(), 64, 64, "vertex");
  std::vector<Graph> out;
  if (g.order() == 0)
    return out;
  const auto &edges = g.edges();
  detail::for_each_combination(edges.size(), g.order() - 1, [&](std::uint64_t m) {
    detail::TinyUnionFind uf(g.order());
    for (std::uint64_t rest = m; rest; rest &= rest - 1) {
      const Edge &e = edges[static_cast<std::size_t>(std::countr_zero(rest))];
      if (!uf.unite(static_cast<std::uint8_t>(e.u), static_cast<std::uint8_t>(e.v)))
        return false;
    }
    out.emplace_back(g.order(), detail::pick(edges, m));
    return false;
  });
  return out;
}

/// True when no 4 vertices induce K_{1,3}.
inline bool is_claw_free(const Graph &g) {
  const std::size_t n = g.order();
  for (std::size_t c = 0; c < n; ++c) {
    const auto &nb = g.neighbors(static_cast<Vertex>(c));
    for (std::size_t i = 0; i < nb.size(); ++i)
      for (std::size_t j = i + 1; j < nb.size(); ++j)
        for (std::size_t k = j + 1; k < nb.size(); ++k)
          if (!g.has_edge(nb[i], nb[j]) && !g.has_edge(nb[i], nb[k]) &&
              !g.has_edge(nb[j], nb[k]))
            return false;
  }
  return true;
}

} // namespace decycle
