// Acceptance run: every criterion at exact tolerance, one PASS/FAIL line each.
// Exits nonzero if any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include "decycle/decycle.hpp"
#include "test_support.hpp"

using namespace decycle;

namespace {

struct Verdict {
  bool pass = true;
  std::ostringstream detail;
  std::string first_failure;

  void fail(const std::string &what) {
    if (pass)
      first_failure = what;
    pass = false;
  }
};

int failures = 0;

void report(const char *id, const char *title, const std::function<void(Verdict &)> &body) {
  const auto start = std::chrono::steady_clock::now();
  Verdict v;
  try {
    body(v);
  } catch (const std::exception &e) {
    v.fail(std::string("exception: ") + e.what());
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  std::printf("%s %s %s: %s (%.1fs)", v.pass ? "PASS" : "FAIL", id, title, v.detail.str().c_str(),
              secs);
  if (!v.pass)
    std::printf(" first failure: %s", v.first_failure.c_str());
  std::printf("\n");
  std::fflush(stdout);
  failures += !v.pass;
}

std::string describe(const Graph &g) {
  std::string s = to_edge_list(g);
  for (char &c : s)
    if (c == '\n')
      c = ';';
  return s;
}

Count as_count(std::size_t x) { return static_cast<Count>(x); }

// Results of the shared exhaustive pass over all labeled trees with n <= 9.
struct SmallTreePass {
  std::uint64_t trees = 0;
  std::uint64_t dp_mismatch = 0;
  std::uint64_t diameter_checked = 0, diameter_violations = 0;
  std::uint64_t hc_checked = 0, hc_violations = 0;
  std::string dp_example, diameter_example, hc_example;
};

SmallTreePass run_small_tree_pass() {
  SmallTreePass s;
  for (std::size_t n = 2; n <= 9; ++n) {
    for_each_labeled_tree(n, [&](std::uint64_t, const Graph &g) {
      ++s.trees;
      const RootedTree rooted = root_at_center(g);
      const std::size_t l = max_linear_forest(rooted).best.size();
      if (l != max_linear_forest_bf(g).value && s.dp_mismatch++ == 0)
        s.dp_example = describe(g);

      const TreeStats st = tree_stats(rooted);
      if (st.diameter >= 4) {
        ++s.diameter_checked;
        if (!diam_bounds_l(as_count(n), st.diameter).contains(as_count(l)) &&
            s.diameter_violations++ == 0)
          s.diameter_example = describe(g);
      }
      ++s.hc_checked;
      const std::size_t hc = n - l;
      if ((hc < hc_lower_bound(st) || hc > hc_upper_bound(st)) && s.hc_violations++ == 0)
        s.hc_example = describe(g);
    });
  }
  return s;
}

} // namespace

int main() {
  std::printf("acceptance: building the shared exhaustive pass over all trees n=2..9\n");
  std::fflush(stdout);
  const auto pass_start = std::chrono::steady_clock::now();
  const SmallTreePass small = run_small_tree_pass();
  std::printf("acceptance: shared pass done in %.1fs (AC1, AC4 and AC5 read from it)\n",
              std::chrono::duration<double>(std::chrono::steady_clock::now() - pass_start).count());

  report("AC1", "DP equals brute-force l(T) on every labeled tree n=2..9", [&](Verdict &v) {
    v.detail << small.trees << " trees, " << small.dp_mismatch << " mismatches";
    std::uint64_t cayley = 0; // sum of n^(n-2)
    for (std::uint64_t n = 2; n <= 9; ++n) {
      std::uint64_t c = 1;
      for (std::uint64_t i = 2; i < n; ++i)
        c *= n;
      cayley += c;
    }
    if (small.trees != cayley)
      v.fail("expected " + std::to_string(cayley) + " trees");
    if (small.dp_mismatch)
      v.fail(small.dp_example);
  });

  report("AC2", "l(G)=f(L(G)) and p(G)=t(L(G)) on connected graphs n<=7", [&](Verdict &v) {
    const std::size_t instances = 12'000;
    OracleCaps caps{kHardOracleVertexCap, kHardOracleEdgeCap, 9};
    std::size_t lf_bad = 0, path_bad = 0, max_m = 0;
    for (std::size_t i = 0; i < instances; ++i) {
      const std::size_t n = 2 + i % 6;
      const std::size_t extra = (i / 6) % 9;
      Graph g = decycle::testing::random_connected_graph(n, extra, 0xAC2000 + i);
      max_m = std::max(max_m, g.size());
      Graph lg = line_graph(g).graph;
      if (max_linear_forest_bf(g, caps).value != max_induced_forest(lg, caps).value) {
        ++lf_bad;
        v.fail("l vs f(L): " + describe(g));
      }
      if (longest_path_bf(g, caps).value != max_induced_tree(lg, caps).value) {
        ++path_bad;
        v.fail("p vs t(L): " + describe(g));
      }
    }
    v.detail << instances << " graphs (m<=" << max_m << "), " << lf_bad << " l/f mismatches, "
             << path_bad << " p/t mismatches";
  });

  report("AC3", "perfect k-ary closed form = recurrence = DP (oracle where m<=24)", [&](Verdict &v) {
    std::size_t instances = 0, oracle_checked = 0;
    for (Count k = 2; k <= 5; ++k) {
      for (Count h = 1; as_count(perfect_kary_order(k, h)) <= 10'000; ++h) {
        ++instances;
        const Graph t = perfect_kary_tree(k, h);
        const Count n = as_count(t.order());
        const Count closed = perfect_kary_l(n, k);
        const Count rec = perfect_kary_recurrence(k, h);
        const Count dp = as_count(l_of_tree(t));
        std::ostringstream where;
        where << "k=" << k << " h=" << h << " closed=" << closed << " rec=" << rec << " dp=" << dp;
        if (closed != rec || closed != dp)
          v.fail(where.str());
        if (t.size() <= 24) {
          ++oracle_checked;
          if (as_count(max_linear_forest_bf(t).value) != closed)
            v.fail("oracle " + where.str());
        }
      }
    }
    const Count l23 = as_count(l_of_tree(perfect_kary_tree(2, 3)));
    const Count l33 = as_count(l_of_tree(perfect_kary_tree(3, 3)));
    if (l23 != 4 || l33 != 6)
      v.fail("published values");
    v.detail << instances << " (k,h) pairs, " << oracle_checked
             << " oracle-confirmed; l=" << l23 << " for k=2 h=3, l=" << l33 << " for k=3 h=3";
  });

  report("AC4", "diameter bounds hold on all trees n<=9 and are attained for n<=60", [&](Verdict &v) {
    if (small.diameter_violations)
      v.fail(small.diameter_example);
    std::size_t constructions = 0;
    for (std::size_t d = 4; d <= 9; ++d) {
      for (std::size_t n = d + 1; n <= 60; ++n) {
        auto check = [&](const char *name, const Graph &g, Count expected) {
          ++constructions;
          const Count l = as_count(l_of_tree(g));
          if (g.order() != n || tree_diameter(g) != static_cast<int>(d) || l != expected) {
            std::ostringstream os;
            os << name << "(" << n << "," << d << ") l=" << l << " expected " << expected;
            v.fail(os.str());
          }
        };
        const Interval b = diam_bounds_l(as_count(n), as_count(d));
        check("lower_spider", lower_spider(n, d), b.lower);
        if (d % 2 == 0) {
          check("t_star", t_star(n, d), b.upper);
        } else {
          const std::size_t r = (d - 1) / 2;
          check("t1_star", t1_star(n, d), extremal_l::t1_star(as_count(n), as_count(d)));
          if (n >= 4 * r + 2)
            check("t2_star", t2_star(n, d), b.upper);
        }
      }
    }
    v.detail << small.diameter_checked << " trees with d>=4, " << small.diameter_violations
             << " violations; " << constructions << " constructions at their stated values";
  });

  report("AC5", "hc bounds on all trees n<=9; hc_construct valid for n<=12", [&](Verdict &v) {
    if (small.hc_violations)
      v.fail(small.hc_example);
    std::size_t built = 0;
    auto check = [&](const Graph &g) {
      ++built;
      const Completion c = hc_construct(g);
      const TreeStats st = tree_stats(root_at_center(g));
      const Graph closed = with_edges(g, c.added_edges);
      if (c.added_edges.size() != st.out - 1 || !is_hamiltonian(closed) ||
          !is_hamiltonian_cycle(closed, c.cycle))
        v.fail(describe(g));
    };
    for (std::size_t n = 3; n <= 8; ++n)
      for_each_labeled_tree(n, [&](std::uint64_t, const Graph &g) { check(g); });
    const std::size_t exhaustive = built;
    for (std::uint64_t i = 0; i < 12'000; ++i)
      check(random_tree(3 + i % 10, 0xAC5000 + i));
    v.detail << small.hc_checked << " trees bounded, " << small.hc_violations << " violations; "
             << exhaustive << " exhaustive + " << built - exhaustive << " random completions";
  });

  report("AC6", "leaf exchange never lowers l on trees n<=8, all ordered leaf pairs", [&](Verdict &v) {
    std::uint64_t pairs = 0, bad = 0;
    for (std::size_t n = 3; n <= 8; ++n) {
      for_each_labeled_tree(n, [&](std::uint64_t, const Graph &g) {
        const std::size_t l = l_of_tree(g);
        const std::vector<Vertex> leaves = g.leaves();
        for (Vertex a : leaves)
          for (Vertex b : leaves) {
            if (a == b)
              continue;
            ++pairs;
            if (l_of_tree(leaf_exchange(g, a, b)) < l) {
              ++bad;
              v.fail(describe(g) + " moving " + std::to_string(a) + " to " + std::to_string(b));
            }
          }
      });
    }
    v.detail << pairs << " exchanges, " << bad << " decreases";
  });

  report("AC7", "k-ary bounds on random trees; caterpillar extremes", [&](Verdict &v) {
    std::size_t trees = 0, caterpillars = 0;
    for (std::size_t k = 2; k <= 4; ++k) {
      const std::size_t max_internal = (400 - 1) / k;
      for (std::uint64_t i = 0; i < 250; ++i) {
        const std::size_t internal = 1 + (i * 7919) % max_internal;
        const Graph t = random_kary_tree(k, internal, 0xAC7000 + k * 1000 + i);
        ++trees;
        const Count n = as_count(t.order());
        if (n > 400 || !kary_bounds_l(n, as_count(k)).contains(as_count(l_of_tree(t))))
          v.fail("k=" + std::to_string(k) + " " + describe(t));
      }
      for (std::size_t n = k + 1; n <= 400; n += k) {
        ++caterpillars;
        const Count l = as_count(l_of_tree(kary_caterpillar(n, k)));
        const Count expected = k >= 3 ? kary_bounds_l(as_count(n), as_count(k)).upper
                                      : extremal_l::kary_caterpillar(as_count(n), 2);
        if (l != expected)
          v.fail("caterpillar n=" + std::to_string(n) + " k=" + std::to_string(k));
      }
    }
    v.detail << trees << " random k-ary trees within bounds, " << caterpillars
             << " caterpillars at the stated values";
  });

  report("AC8", "oracle decycling of L(T) = n-1-l(T) on trees n<=8; diameter decycling bounds", [&](Verdict &v) {
    std::uint64_t trees = 0, bounded = 0;
    for (std::size_t n = 2; n <= 8; ++n) {
      for_each_labeled_tree(n, [&](std::uint64_t, const Graph &g) {
        ++trees;
        const Count l = as_count(l_of_tree(g));
        const Count dec = as_count(decycling_number(line_graph(g).graph).value);
        const Count nn = as_count(n);
        if (dec != nn - 1 - l)
          v.fail("oracle " + describe(g));
        const int d = tree_diameter(g);
        if (d >= 4) {
          ++bounded;
          if (!diam_bounds_decycling(nn, d).contains(dec))
            v.fail("bounds " + describe(g));
        }
      });
    }
    std::size_t perfect = 0;
    for (auto [k, h] : {std::pair<Count, Count>{2, 2}, {2, 3}, {3, 2}}) {
      ++perfect;
      const Graph t = perfect_kary_tree(k, h);
      if (perfect_kary_decycling(as_count(t.order()), k) !=
          as_count(decycling_number(line_graph(t).graph).value))
        v.fail("perfect k=" + std::to_string(k) + " h=" + std::to_string(h));
    }
    v.detail << trees << " trees matched, " << bounded << " inside the diameter bounds, "
             << perfect << " perfect k-ary trees matched";
  });

  std::printf("acceptance: %d of 8 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
