#pragma once

// Closed-form bounds on l(T) and on the decycling number of line graphs.
// Everything is exact integer arithmetic with explicit floor/ceil.

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace decycle {

using Count = std::int64_t;

struct Interval {
  Count lower = 0;
  Count upper = 0;

  bool contains(Count x) const { return lower <= x && x <= upper; }
  friend bool operator==(const Interval &, const Interval &) = default;
};

inline Count floor_div(Count a, Count b) {
  Count q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0)))
    --q;
  return q;
}

inline Count ceil_div(Count a, Count b) { return -floor_div(-a, b); }

namespace detail {

inline void require_bounds(bool ok, const std::string &msg) {
  if (!ok)
    throw std::invalid_argument(msg);
}

inline void require_diameter(Count n, Count d) {
  require_bounds(d >= 4, "diameter bounds need d >= 4, got " + std::to_string(d));
  require_bounds(n >= d + 1, "diameter bounds need n >= d + 1");
}

} // namespace detail

/// Bounds on l(T) for a tree with n vertices and diameter d >= 4:
/// [d, floor(((d-2)n+2)/(d-1))] for even d, [d, floor(((d-3)n+4)/(d-2))] for odd d.
inline Interval diam_bounds_l(Count n, Count d) {
  detail::require_diameter(n, d);
  if (d % 2 == 0)
    return {d, floor_div((d - 2) * n + 2, d - 1)};
  return {d, floor_div((d - 3) * n + 4, d - 2)};
}

/// Odd-diameter refinement: with d = 2r+1 and n <= 4r+1 the two deepest
/// leaves cannot both sit below the critical depth, and the upper bound
/// drops to floor(((2r-2)n+3)/(2r-1)). Even d is unchanged.
inline Interval diam_bounds_l_split(Count n, Count d) {
  Interval b = diam_bounds_l(n, d);
  if (d % 2 == 1) {
    const Count r = (d - 1) / 2;
    if (n <= 4 * r + 1)
      b.upper = floor_div((2 * r - 2) * n + 3, 2 * r - 1);
  }
  return b;
}

/// Bounds on the decycling number of L(T) for diameter d >= 4, i.e.
/// n - 1 - diam_bounds_l(n, d) reversed:
/// even d: [ceil((n-d-1)/(d-1)), n-d-1]; odd d: [ceil((n-d-2)/(d-2)), n-d-1].
inline Interval diam_bounds_decycling(Count n, Count d) {
  detail::require_diameter(n, d);
  if (d % 2 == 0)
    return {ceil_div(n - d - 1, d - 1), n - d - 1};
  return {ceil_div(n - d - 2, d - 2), n - d - 1};
}

/// The weaker odd-d lower bound ceil((n-d-2)/(d-2)) - 1 that also circulates
/// for this quantity; kept only so reports can show the gap.
inline Count diam_decycling_lower_weak(Count n, Count d) {
  detail::require_diameter(n, d);
  if (d % 2 == 0)
    return ceil_div(n - d - 1, d - 1);
  return ceil_div(n - d - 2, d - 2) - 1;
}

/// Decycling bounds of L(T) from the Hamiltonian-completion bounds:
/// [ceil((out + sum ex)/2) - 1, out - 2].
inline Interval hc_bounds_decycling(Count out, Count excess_sum) {
  return {ceil_div(out + excess_sum, 2) - 1, out - 2};
}

/// Bounds on l(T) for a k-ary tree on n vertices (n = 1 mod k, n >= k+1):
/// [(n+k-1)/k, (2n-2)/k], both integral under the precondition.
inline Interval kary_bounds_l(Count n, Count k) {
  detail::require_bounds(k >= 2, "k-ary bounds need k >= 2");
  detail::require_bounds(n >= k + 1 && n % k == 1 % k,
                         "k-ary bounds need n = 1 (mod k) and n >= k + 1");
  return {(n + k - 1) / k, (2 * n - 2) / k};
}

/// [((k-2)n-k+2)/k, ((k-1)n-2k+1)/k] for the decycling number of L(T).
inline Interval kary_bounds_decycling(Count n, Count k) {
  Interval l = kary_bounds_l(n, k);
  return {n - 1 - l.upper, n - 1 - l.lower};
}

/// Height h with n = (k^h - 1)/(k - 1), if n is the order of a perfect k-ary tree.
inline std::optional<Count> perfect_kary_height(Count n, Count k) {
  if (k < 2 || n < 1)
    return std::nullopt;
  Count total = 0, level = 1;
  for (Count h = 1; total < n; ++h) {
    total += level;
    if (total == n)
      return h;
    level *= k;
  }
  return std::nullopt;
}

namespace detail {

inline Count require_perfect(Count n, Count k) {
  auto h = perfect_kary_height(n, k);
  require_bounds(h.has_value(), "n=" + std::to_string(n) + " is not the order of a perfect " +
                                    std::to_string(k) + "-ary tree");
  return *h;
}

inline Count alternating_sign(Count h) { return h % 2 == 0 ? 1 : -1; }

} // namespace detail

/// l(T) = (2n - 1 + (-1)^h) / (k+1) for the perfect k-ary tree of height h.
inline Count perfect_kary_l(Count n, Count k) {
  const Count h = detail::require_perfect(n, k);
  return (2 * n - 1 + detail::alternating_sign(h)) / (k + 1);
}

/// f_1 = 0, f_2 = 2, f_h = (k-1) f_{h-1} + k f_{h-2} + 2.
inline Count perfect_kary_recurrence(Count k, Count h) {
  detail::require_bounds(k >= 2 && h >= 1, "recurrence needs k >= 2 and h >= 1");
  if (h == 1)
    return 0;
  Count prev = 0, cur = 2;
  for (Count i = 3; i <= h; ++i) {
    Count next = (k - 1) * cur + k * prev + 2;
    prev = cur;
    cur = next;
  }
  return cur;
}

/// Decycling number of L(T) for the perfect k-ary tree: ((k-1)n - k - (-1)^h)/(k+1).
inline Count perfect_kary_decycling(Count n, Count k) {
  const Count h = detail::require_perfect(n, k);
  return ((k - 1) * n - k - detail::alternating_sign(h)) / (k + 1);
}

/// Bounds on the decycling number of L(G) for a connected graph with n
/// vertices, m edges and longest path p >= 4: [m - U, m - p] where U is the
/// diameter upper bound with p in place of d.
inline Interval longest_path_bounds_decycling(Count n, Count m, Count p) {
  detail::require_bounds(p >= 4, "longest-path bounds need p >= 4");
  detail::require_bounds(n >= p + 1, "longest-path bounds need n >= p + 1");
  const Interval l = diam_bounds_l(n, p);
  return {m - l.upper, m - p};
}

} // namespace decycle
