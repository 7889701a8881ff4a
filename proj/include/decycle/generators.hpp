#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "decycle/graph.hpp"

namespace decycle {

namespace detail {

/// Uniform integer in [0, bound) by rejection; stable across standard libraries.
inline std::uint64_t uniform_below(std::mt19937_64 &rng, std::uint64_t bound) {
  if (bound == 0)
    throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

inline void require(bool ok, const std::string &msg) {
  if (!ok)
    throw std::invalid_argument(msg);
}

} // namespace detail

/// Path 0-1-...-(n-1).
inline Graph path_graph(std::size_t n) {
  detail::require(n >= 1, "path: n must be positive");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i + 1 < n; ++i)
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
  detail::require(n >= 3, "cycle: n must be at least 3");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>((i + 1) % n));
  return Graph(n, std::move(edges));
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
  return Graph(n, std::move(edges));
}

/// Star on n vertices: hub 0 joined to 1..n-1 (so star(4) is K_{1,3}).
inline Graph star_graph(std::size_t n) {
  detail::require(n >= 1, "star: n must be positive");
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < n; ++i)
    edges.emplace_back(0, static_cast<Vertex>(i));
  return Graph(n, std::move(edges));
}

/// Spider with center 0; legs are numbered consecutively, leg by leg,
/// from the center outwards.
inline Graph spider_graph(std::span<const std::size_t> legs) {
  std::vector<Edge> edges;
  Vertex next = 1;
  for (std::size_t len : legs) {
    detail::require(len >= 1, "spider: leg lengths must be positive");
    Vertex prev = 0;
    for (std::size_t i = 0; i < len; ++i) {
      edges.emplace_back(prev, next);
      prev = next++;
    }
  }
  return Graph(static_cast<std::size_t>(next), std::move(edges));
}

inline Graph spider_graph(std::initializer_list<std::size_t> legs) {
  std::vector<std::size_t> v(legs);
  return spider_graph(std::span<const std::size_t>(v));
}

/// k-ary tree grown from root 0: each id in `expand` (in order) must be a
/// current leaf and receives k new children with the next free ids.
inline Graph kary_tree(std::size_t k, std::span<const Vertex> expand) {
  detail::require(k >= 1, "kary: k must be positive");
  std::vector<Edge> edges;
  std::vector<char> expanded{0};
  Vertex next = 1;
  for (Vertex v : expand) {
    detail::require(v >= 0 && v < next, "kary: vertex " + std::to_string(v) + " does not exist yet");
    detail::require(!expanded[v], "kary: vertex " + std::to_string(v) + " already has children");
    expanded[v] = 1;
    for (std::size_t i = 0; i < k; ++i) {
      edges.emplace_back(v, next++);
      expanded.push_back(0);
    }
  }
  return Graph(static_cast<std::size_t>(next), std::move(edges));
}

/// Random k-ary tree with `internal` internal vertices: repeatedly expands a
/// uniformly chosen leaf. n = k * internal + 1.
inline Graph random_kary_tree(std::size_t k, std::size_t internal, std::uint64_t seed) {
  detail::require(k >= 1, "kary: k must be positive");
  std::mt19937_64 rng(seed);
  std::vector<Vertex> leaves{0};
  std::vector<Vertex> expand;
  Vertex next = 1;
  for (std::size_t i = 0; i < internal; ++i) {
    auto pick = detail::uniform_below(rng, leaves.size());
    Vertex v = leaves[pick];
    leaves[pick] = leaves.back();
    leaves.pop_back();
    expand.push_back(v);
    for (std::size_t c = 0; c < k; ++c)
      leaves.push_back(next++);
  }
  return kary_tree(k, expand);
}

/// Vertex count of a perfect k-ary tree of height h (a single vertex has height 1).
inline std::size_t perfect_kary_order(std::size_t k, std::size_t h) {
  detail::require(k >= 2, "perfect-kary: k must be at least 2");
  detail::require(h >= 1, "perfect-kary: height must be at least 1");
  std::size_t n = 0, level = 1;
  for (std::size_t i = 0; i < h; ++i) {
    n += level;
    if (n > (std::size_t{1} << 40))
      throw std::invalid_argument("perfect-kary: tree too large");
    level *= k;
  }
  return n;
}

/// Perfect k-ary tree in BFS numbering: children of v are k*v+1 .. k*v+k.
inline Graph perfect_kary_tree(std::size_t k, std::size_t h) {
  const std::size_t n = perfect_kary_order(k, h);
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  for (std::size_t c = 1; c < n; ++c)
    edges.emplace_back(static_cast<Vertex>((c - 1) / k), static_cast<Vertex>(c));
  return Graph(n, std::move(edges));
}

/// Standard linear-time Prüfer decoding; the tree has seq.size() + 2 vertices.
inline Graph prufer_decode(std::span<const Vertex> seq) {
  const std::size_t n = seq.size() + 2;
  std::vector<std::size_t> degree(n, 1);
  for (Vertex x : seq) {
    detail::require(x >= 0 && static_cast<std::size_t>(x) < n,
                    "prufer: entry " + std::to_string(x) + " out of range");
    ++degree[x];
  }
  std::vector<Edge> edges;
  edges.reserve(n - 1);
  std::size_t ptr = 0;
  while (degree[ptr] != 1)
    ++ptr;
  std::size_t leaf = ptr;
  for (Vertex x : seq) {
    edges.emplace_back(static_cast<Vertex>(leaf), x);
    if (--degree[x] == 1 && static_cast<std::size_t>(x) < ptr) {
      leaf = static_cast<std::size_t>(x);
    } else {
      ++ptr;
      while (degree[ptr] != 1)
        ++ptr;
      leaf = ptr;
    }
  }
  edges.emplace_back(static_cast<Vertex>(leaf), static_cast<Vertex>(n - 1));
  return Graph(n, std::move(edges));
}

inline Graph prufer_decode(std::initializer_list<Vertex> seq) {
  std::vector<Vertex> v(seq);
  return prufer_decode(std::span<const Vertex>(v));
}

/// Inverse of prufer_decode for trees with at least two vertices.
inline std::vector<Vertex> prufer_encode(const Graph &tree) {
  if (!is_tree(tree) || tree.order() < 2)
    throw GraphError("prufer: need a tree on at least two vertices");
  const std::size_t n = tree.order();
  std::vector<std::size_t> degree(n);
  for (std::size_t v = 0; v < n; ++v)
    degree[v] = tree.degree(static_cast<Vertex>(v));
  std::vector<char> removed(n, 0);

  auto remaining_neighbor = [&](std::size_t v) {
    for (Vertex w : tree.neighbors(static_cast<Vertex>(v)))
      if (!removed[w])
        return static_cast<std::size_t>(w);
    return n;
  };

  std::vector<Vertex> seq;
  seq.reserve(n - 2);
  std::size_t ptr = 0;
  while (degree[ptr] != 1)
    ++ptr;
  std::size_t leaf = ptr;
  for (std::size_t i = 0; i + 2 < n; ++i) {
    std::size_t next = remaining_neighbor(leaf);
    removed[leaf] = 1;
    seq.push_back(static_cast<Vertex>(next));
    if (--degree[next] == 1 && next < ptr) {
      leaf = next;
    } else {
      ++ptr;
      while (degree[ptr] != 1 || removed[ptr])
        ++ptr;
      leaf = ptr;
    }
  }
  return seq;
}

/// Uniform random labeled tree on n vertices via a random Prüfer sequence.
inline Graph random_tree(std::size_t n, std::uint64_t seed) {
  detail::require(n >= 1, "random: n must be positive");
  if (n == 1)
    return Graph(1, {});
  std::mt19937_64 rng(seed);
  std::vector<Vertex> seq(n - 2);
  for (auto &x : seq)
    x = static_cast<Vertex>(detail::uniform_below(rng, n));
  return prufer_decode(std::span<const Vertex>(seq));
}

} // namespace decycle
