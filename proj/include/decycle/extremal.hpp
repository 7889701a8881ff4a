#pragma once

// Trees that meet the l(T) bounds with equality, and the membership tests
// for the normalized tree families used when arguing about them.

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "decycle/bounds.hpp"
#include "decycle/graph.hpp"
#include "decycle/tree.hpp"

namespace decycle {

namespace detail {

class TreeBuilder {
public:
  Vertex add_child(Vertex parent) {
    edges_.emplace_back(parent, next_);
    return next_++;
  }
  /// Hangs a path of `len` new vertices below `from`; returns its far end.
  Vertex add_path(Vertex from, std::size_t len) {
    for (std::size_t i = 0; i < len; ++i)
      from = add_child(from);
    return from;
  }
  Graph build() const { return Graph(static_cast<std::size_t>(next_), edges_); }

private:
  std::vector<Edge> edges_;
  Vertex next_ = 1; // vertex 0 is the root
};

struct CriticalTree {
  TreeBuilder builder;
  Vertex leg_ends[2] = {0, 0};
  std::vector<std::pair<Vertex, Vertex>> branch_ends; // arm ends of full Y-branches
};

// Root with two legs of length r, q = floor((n-2r-1)/(2r-1)) Y-branches (a
// depth-1 vertex with two arms of length r-1) and the remainder
// m = (n-2r-1) mod (2r-1) placed as a third leg of length m when 1 <= m <= r,
// or as a Y-branch with one short arm of length m-r when r+1 <= m <= 2r-2.
inline CriticalTree build_t_star(std::size_t n, std::size_t r) {
  CriticalTree t;
  auto &b = t.builder;
  t.leg_ends[0] = b.add_path(0, r);
  t.leg_ends[1] = b.add_path(0, r);
  const std::size_t rest = n - 2 * r - 1;
  const std::size_t q = rest / (2 * r - 1);
  const std::size_t m = rest % (2 * r - 1);
  for (std::size_t i = 0; i < q; ++i) {
    Vertex y = b.add_child(0);
    Vertex e1 = b.add_path(y, r - 1);
    Vertex e2 = b.add_path(y, r - 1);
    t.branch_ends.emplace_back(e1, e2);
  }
  if (m >= 1 && m <= r) {
    b.add_path(0, m);
  } else if (m >= r + 1) {
    Vertex y = b.add_child(0);
    b.add_path(y, r - 1);
    b.add_path(y, m - r);
  }
  return t;
}

} // namespace detail

/// Path of length d with the remaining n-d-1 vertices as pendants on the
/// path's middle vertex (index floor(d/2)). l = d.
inline Graph lower_spider(std::size_t n, std::size_t d) {
  detail::require_bounds(d >= 2, "lower spider needs d >= 2");
  detail::require_bounds(n >= d + 1, "lower spider needs n >= d + 1");
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < d; ++i)
    edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(i + 1));
  const auto mid = static_cast<Vertex>(d / 2);
  for (std::size_t v = d + 1; v < n; ++v)
    edges.emplace_back(mid, static_cast<Vertex>(v));
  return Graph(n, std::move(edges));
}

/// Extremal tree for even diameter d = 2r; l = floor(((2r-2)n+2)/(2r-1)).
inline Graph t_star(std::size_t n, std::size_t d) {
  detail::require_bounds(d >= 4 && d % 2 == 0, "t_star needs an even d >= 4");
  detail::require_bounds(n >= d + 1, "t_star needs n >= d + 1");
  return detail::build_t_star(n, d / 2).builder.build();
}

/// Odd diameter d = 2r+1: t_star(n-1, 2r) with one critical leg extended by
/// a leaf. l = floor(((2r-2)n+3)/(2r-1)).
inline Graph t1_star(std::size_t n, std::size_t d) {
  detail::require_bounds(d >= 5 && d % 2 == 1, "t1_star needs an odd d >= 5");
  detail::require_bounds(n >= d + 1, "t1_star needs n >= d + 1");
  auto t = detail::build_t_star(n - 1, (d - 1) / 2);
  t.builder.add_child(t.leg_ends[0]);
  return t.builder.build();
}

/// Odd diameter d = 2r+1: t_star(n-2, 2r) with both arms of one Y-branch
/// extended by a leaf, so the two depth-(r+1) leaves share a depth-1
/// ancestor. Needs n >= 4r+2. l = floor(((2r-2)n+4)/(2r-1)).
inline Graph t2_star(std::size_t n, std::size_t d) {
  detail::require_bounds(d >= 5 && d % 2 == 1, "t2_star needs an odd d >= 5");
  const std::size_t r = (d - 1) / 2;
  detail::require_bounds(n >= 4 * r + 2, "t2_star needs n >= 4r + 2");
  auto t = detail::build_t_star(n - 2, r);
  t.builder.add_child(t.branch_ends.front().first);
  t.builder.add_child(t.branch_ends.front().second);
  return t.builder.build();
}

/// k-ary tree with one internal vertex per level: the spine 0, 1st child,
/// 1st child of that, ... each spine vertex carrying k children.
inline Graph kary_caterpillar(std::size_t n, std::size_t k) {
  detail::require_bounds(k >= 2, "kary caterpillar needs k >= 2");
  detail::require_bounds(n >= k + 1 && n % k == 1, "kary caterpillar needs n = 1 (mod k), n > k");
  const std::size_t internal = (n - 1) / k;
  detail::TreeBuilder b;
  Vertex spine = 0;
  for (std::size_t i = 0; i < internal; ++i) {
    Vertex first = b.add_child(spine);
    for (std::size_t c = 1; c < k; ++c)
      b.add_child(spine);
    spine = first;
  }
  return b.build();
}

/// l(T) that each construction is built to attain.
namespace extremal_l {

inline Count lower_spider(Count, Count d) { return d; }

inline Count t_star(Count n, Count d) {
  const Count r = d / 2;
  return floor_div((2 * r - 2) * n + 2, 2 * r - 1);
}

inline Count t1_star(Count n, Count d) {
  const Count r = (d - 1) / 2;
  return floor_div((2 * r - 2) * n + 3, 2 * r - 1);
}

inline Count t2_star(Count n, Count d) {
  const Count r = (d - 1) / 2;
  return floor_div((2 * r - 2) * n + 4, 2 * r - 1);
}

/// (2n-2)/k for k >= 3; for k = 2, 3(n-1)/4 when (n-1)/2 is even, else (3n-1)/4.
inline Count kary_caterpillar(Count n, Count k) {
  if (k >= 3)
    return (2 * n - 2) / k;
  return ((n - 1) / 2) % 2 == 0 ? 3 * (n - 1) / 4 : (3 * n - 1) / 4;
}

} // namespace extremal_l

struct FamilyFlags {
  bool in_t1 = false; // depth>=2 vertices have degree <= 2, depth-1 vertices degree <= 3
  bool in_t2 = false; // in_t1 and at most 3 degree-2 vertices at depth 1
  bool in_t3 = false; // in_t1 and 2 or 3 degree-2 vertices at depth 1
};

/// Membership of a center-rooted tree in the normalized families for
/// diameter at most `d` (d < 0 means the tree's own diameter).
inline FamilyFlags family_predicates(const RootedTree &t, int d = -1) {
  const TreeStats s = tree_stats(t);
  if (d < 0)
    d = s.diameter;
  const Graph &g = t.graph();
  bool ok = s.diameter <= d && t.height() <= (d + 1) / 2;
  for (std::size_t v = 0; v < g.order() && ok; ++v) {
    const auto vid = static_cast<Vertex>(v);
    if (t.depth(vid) >= 2 && g.degree(vid) > 2)
      ok = false;
    if (t.depth(vid) == 1 && g.degree(vid) > 3)
      ok = false;
  }
  FamilyFlags f;
  f.in_t1 = ok;
  f.in_t2 = ok && s.depth_one_degree_two <= 3;
  f.in_t3 = ok && s.depth_one_degree_two >= 2 && s.depth_one_degree_two <= 3;
  return f;
}

} // namespace decycle
