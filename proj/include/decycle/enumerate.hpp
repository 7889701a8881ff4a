#pragma once

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "decycle/generators.hpp"
#include "decycle/graph.hpp"

namespace decycle {

inline constexpr std::size_t kDefaultTreeCap = 10;
inline constexpr std::size_t kHardTreeCap = 12;

/// n^(n-2), the number of labeled trees on n vertices (1 for n <= 2).
inline std::uint64_t labeled_tree_count(std::size_t n) {
  if (n == 0)
    return 0;
  std::uint64_t c = 1;
  for (std::size_t i = 2; i < n; ++i)
    c *= n;
  return c;
}

/// Prüfer sequence with lexicographic rank `index` among sequences of length n-2.
inline std::vector<Vertex> prufer_sequence_at(std::size_t n, std::uint64_t index) {
  std::vector<Vertex> seq(n >= 2 ? n - 2 : 0);
  for (std::size_t i = seq.size(); i-- > 0;) {
    seq[i] = static_cast<Vertex>(index % n);
    index /= n;
  }
  return seq;
}

/// Calls fn(index, tree) for every labeled tree on n vertices whose Prüfer
/// rank lies in [begin, end), in lexicographic sequence order. Ranges let
/// callers split the space across workers.
namespace detail {

inline void check_tree_cap(std::size_t n, std::size_t cap) {
  if (n < 1)
    throw std::invalid_argument("tree enumeration: n must be positive");
  if (n > cap || n > kHardTreeCap)
    throw std::invalid_argument("tree enumeration: n=" + std::to_string(n) +
                                " exceeds cap " + std::to_string(std::min(cap, kHardTreeCap)));
}

} // namespace detail

template <class Fn>
void for_each_labeled_tree(std::size_t n, Fn &&fn, std::uint64_t begin = 0,
                           std::uint64_t end = UINT64_MAX, std::size_t cap = kDefaultTreeCap) {
  detail::check_tree_cap(n, cap);
  const std::uint64_t total = labeled_tree_count(n);
  end = std::min(end, total);
  if (begin >= end)
    return;
  if (n == 1) {
    fn(std::uint64_t{0}, Graph(1, {}));
    return;
  }
  std::vector<Vertex> seq = prufer_sequence_at(n, begin);
  for (std::uint64_t idx = begin; idx < end; ++idx) {
    fn(idx, prufer_decode(std::span<const Vertex>(seq)));
    for (std::size_t i = seq.size(); i-- > 0;) {
      if (static_cast<std::size_t>(++seq[i]) < n)
        break;
      seq[i] = 0;
    }
  }
}

/// Materializes every labeled tree on n vertices.
inline std::vector<Graph> enumerate_trees(std::size_t n, std::size_t cap = kDefaultTreeCap) {
  detail::check_tree_cap(n, cap);
  std::vector<Graph> out;
  out.reserve(labeled_tree_count(n));
  for_each_labeled_tree(
      n, [&](std::uint64_t, Graph g) { out.push_back(std::move(g)); }, 0, UINT64_MAX, cap);
  return out;
}

} // namespace decycle
