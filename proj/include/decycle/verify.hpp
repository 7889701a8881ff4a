#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "decycle/bounds.hpp"
#include "decycle/enumerate.hpp"
#include "decycle/forest_dp.hpp"
#include "decycle/generators.hpp"
#include "decycle/hamiltonian.hpp"
#include "decycle/line_graph.hpp"
#include "decycle/oracle.hpp"
#include "decycle/report.hpp"
#include "decycle/tree.hpp"

namespace decycle {

namespace theorem {
inline constexpr const char *diameter = "diameter-bound";
inline constexpr const char *diameter_split = "diameter-bound-odd-split";
inline constexpr const char *decycling_diameter = "decycling-diameter-bound";
inline constexpr const char *hc = "hc-bounds";
inline constexpr const char *hc_decycling = "hc-decycling-bounds";
inline constexpr const char *leaf_exchange = "leaf-exchange";
inline constexpr const char *linegraph = "linegraph-decycling";
} // namespace theorem

/// Theorem names in report order.
inline const std::vector<std::string> &theorem_names() {
  static const std::vector<std::string> names{
      theorem::diameter, theorem::diameter_split, theorem::decycling_diameter, theorem::hc,
      theorem::hc_decycling, theorem::leaf_exchange, theorem::linegraph};
  return names;
}

struct VerifyOptions {
  std::size_t n_min = 2;
  std::size_t n_max = 8;
  std::size_t tree_cap = kDefaultTreeCap;
  unsigned threads = 1;
  bool mutate_bounds = false;          // lowers the diameter upper bound by one (self-test)
  std::size_t leaf_pair_samples = 6;   // ordered leaf pairs per tree; all pairs if fewer exist
  std::size_t linegraph_oracle_max_n = 9;
  std::uint64_t seed = 1;
  OracleCaps caps;
};

struct TheoremSummary {
  std::string theorem;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::uint64_t saturating = 0;
  std::uint64_t violations = 0;
};

struct VerifySummary {
  std::uint64_t trees = 0;
  std::vector<TheoremSummary> theorems;
  std::vector<std::string> notes;

  std::uint64_t violations() const {
    std::uint64_t v = 0;
    for (const auto &t : theorems)
      v += t.violations;
    return v;
  }
  bool ok() const { return violations() == 0; }
};

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

inline std::string prufer_label(std::size_t n, std::uint64_t index) {
  std::ostringstream os;
  os << "prufer:[";
  auto seq = prufer_sequence_at(n, index);
  for (std::size_t i = 0; i < seq.size(); ++i)
    os << (i ? " " : "") << seq[i];
  os << ']';
  return os.str();
}

} // namespace detail

/// Computes l, hc, decycling and every applicable bound check for one tree.
inline BoundReport analyze_tree(const Graph &tree, std::string label, const VerifyOptions &opt,
                                std::uint64_t sample_seed = 0) {
  BoundReport r;
  r.graph = std::move(label);
  r.n = static_cast<Count>(tree.order());
  r.m = static_cast<Count>(tree.size());

  const RootedTree rooted = root_at_center(tree);
  const TreeStats stats = tree_stats(rooted);
  const Count n = r.n;
  const Count l = static_cast<Count>(linear_forest_table(rooted).best[rooted.root()]);
  r.d = stats.diameter;
  r.l = l;
  if (n >= 2) {
    r.hc = n - l;
    r.decycling = n - 1 - l;
  }
  const Count d = stats.diameter;

  if (d >= 4) {
    Interval b = diam_bounds_l(n, d);
    if (opt.mutate_bounds)
      b.upper -= 1;
    r.checks.push_back({theorem::diameter, b.lower, l, b.upper});
    if (d % 2 == 1) {
      Interval s = diam_bounds_l_split(n, d);
      r.checks.push_back({theorem::diameter_split, s.lower, l, s.upper});
    }
    Interval dec = diam_bounds_decycling(n, d);
    r.checks.push_back({theorem::decycling_diameter, dec.lower, n - 1 - l, dec.upper});
  }

  if (n >= 2) {
    const auto out = static_cast<Count>(stats.out);
    const Count ex = stats.excess_sum();
    r.checks.push_back({theorem::hc, static_cast<Count>(hc_lower_bound(stats)), n - l,
                        static_cast<Count>(hc_upper_bound(stats))});
    Interval hd = hc_bounds_decycling(out, ex);
    r.checks.push_back({theorem::hc_decycling, hd.lower, n - 1 - l, hd.upper});
  }

  std::vector<Vertex> leaves = tree.leaves();
  if (leaves.size() >= 2 && n >= 3) {
    std::vector<std::pair<Vertex, Vertex>> pairs;
    const std::size_t total = leaves.size() * (leaves.size() - 1);
    if (total <= opt.leaf_pair_samples) {
      for (Vertex a : leaves)
        for (Vertex b : leaves)
          if (a != b)
            pairs.emplace_back(a, b);
    } else {
      std::mt19937_64 rng(sample_seed);
      for (std::size_t i = 0; i < opt.leaf_pair_samples; ++i) {
        auto a = detail::uniform_below(rng, leaves.size());
        auto b = detail::uniform_below(rng, leaves.size() - 1);
        if (b >= a)
          ++b;
        pairs.emplace_back(leaves[a], leaves[b]);
      }
    }
    Count worst = -1;
    for (auto [a, b] : pairs) {
      auto after = static_cast<Count>(l_of_tree(leaf_exchange(tree, a, b)));
      worst = worst < 0 ? after : std::min(worst, after);
    }
    r.checks.push_back({theorem::leaf_exchange, l, worst, std::nullopt});
  }

  if (n >= 2 && tree.order() <= opt.linegraph_oracle_max_n &&
      tree.size() <= std::min(opt.caps.vertices, kHardOracleVertexCap)) {
    auto lg = line_graph(tree);
    auto dec = static_cast<Count>(decycling_number(lg.graph, opt.caps).value);
    r.checks.push_back({theorem::linegraph, n - 1 - l, dec, n - 1 - l});
  }
  return r;
}

namespace detail {

struct ChunkResult {
  std::uint64_t trees = 0;
  std::vector<TheoremSummary> theorems;
  std::vector<BoundReport> violations;
  std::uint64_t odd_decycling_at_strong_lower = 0;
};

inline void tally(ChunkResult &acc, const BoundReport &r) {
  auto &names = theorem_names();
  std::vector<char> seen(names.size(), 0);
  for (const auto &c : r.checks) {
    auto idx = static_cast<std::size_t>(std::find(names.begin(), names.end(), c.theorem) -
                                        names.begin());
    seen[idx] = 1;
    auto &t = acc.theorems[idx];
    ++t.checked;
    if (c.saturated())
      ++t.saturating;
    if (!c.holds())
      ++t.violations;
    if (c.theorem == theorem::decycling_diameter && r.d && *r.d % 2 == 1 && c.saturated_lower())
      ++acc.odd_decycling_at_strong_lower;
  }
  for (std::size_t i = 0; i < names.size(); ++i)
    if (!seen[i])
      ++acc.theorems[i].skipped;
  if (!r.ok())
    acc.violations.push_back(r);
}

inline ChunkResult empty_chunk() {
  ChunkResult c;
  for (const auto &name : theorem_names())
    c.theorems.push_back({name});
  return c;
}

} // namespace detail

/// Checks every bound on every labeled tree with n_min <= n <= n_max.
/// Violating reports go to `on_violation` in Prüfer order (by n, then rank).
/// The Prüfer space is cut into fixed chunks shared by the worker threads, so
/// the output does not depend on the thread count.
inline VerifySummary verify_theorems(const VerifyOptions &opt,
                                     const std::function<void(const BoundReport &)> &on_violation = {}) {
  if (opt.n_max > std::min(opt.tree_cap, kHardTreeCap))
    throw std::invalid_argument("verify: n_max=" + std::to_string(opt.n_max) + " exceeds cap " +
                                std::to_string(std::min(opt.tree_cap, kHardTreeCap)));
  constexpr std::uint64_t kChunk = 4096;

  struct Job {
    std::size_t n;
    std::uint64_t begin, end;
  };
  std::vector<Job> jobs;
  for (std::size_t n = std::max<std::size_t>(opt.n_min, 1); n <= opt.n_max; ++n) {
    const std::uint64_t total = labeled_tree_count(n);
    for (std::uint64_t b = 0; b < total; b += kChunk)
      jobs.push_back({n, b, std::min(total, b + kChunk)});
  }

  std::vector<detail::ChunkResult> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j; (j = next.fetch_add(1)) < jobs.size();) {
      const Job &job = jobs[j];
      detail::ChunkResult acc = detail::empty_chunk();
      for_each_labeled_tree(
          job.n,
          [&](std::uint64_t idx, const Graph &g) {
            ++acc.trees;
            const std::uint64_t s = detail::splitmix64(opt.seed ^ detail::splitmix64(job.n * 1000003ull + idx));
            BoundReport r = analyze_tree(g, detail::prufer_label(job.n, idx), opt, s);
            detail::tally(acc, r);
          },
          job.begin, job.end, opt.tree_cap);
      results[j] = std::move(acc);
    }
  };
  const unsigned threads = std::max(1u, opt.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < threads; ++i)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();
  }

  VerifySummary summary;
  detail::ChunkResult total = detail::empty_chunk();
  for (auto &res : results) {
    total.trees += res.trees;
    total.odd_decycling_at_strong_lower += res.odd_decycling_at_strong_lower;
    for (std::size_t i = 0; i < total.theorems.size(); ++i) {
      total.theorems[i].checked += res.theorems[i].checked;
      total.theorems[i].skipped += res.theorems[i].skipped;
      total.theorems[i].saturating += res.theorems[i].saturating;
      total.theorems[i].violations += res.theorems[i].violations;
    }
    if (on_violation)
      for (const auto &r : res.violations)
        on_violation(r);
  }
  summary.trees = total.trees;
  summary.theorems = std::move(total.theorems);
  summary.notes.push_back(
      std::string(theorem::decycling_diameter) +
      ": odd-d lower bound checked as ceil((n-d-2)/(d-2)); " +
      std::to_string(total.odd_decycling_at_strong_lower) +
      " trees attain it, where the weaker ceil((n-d-2)/(d-2))-1 form would not be tight");
  return summary;
}

} // namespace decycle
