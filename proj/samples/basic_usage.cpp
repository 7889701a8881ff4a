// Computes l(T), the Hamiltonian completion and the decycling number of L(T)
// for a tree read from an edge-list file (default: a built-in spider).

#include <fstream>
#include <iostream>

#include "decycle/decycle.hpp"

int main(int argc, char **argv) {
  using namespace decycle;
  Graph tree = spider_graph({2, 2, 2});
  if (argc > 1) {
    std::ifstream in(argv[1]);
    if (!in) {
      std::cerr << "cannot open " << argv[1] << '\n';
      return 2;
    }
    tree = parse_graph(in);
  }

  RootedTree rooted = root_at_center(tree);
  DpRecord dp = max_linear_forest(rooted);
  TreeStats stats = tree_stats(rooted);
  std::cout << "n=" << tree.order() << " d=" << stats.diameter << " l=" << dp.best.size() << '\n';
  std::cout << "forest:";
  for (const Edge &e : dp.best.edges)
    std::cout << ' ' << e;
  std::cout << '\n';

  if (tree.order() >= 3) {
    Completion c = hc_construct(tree);
    std::cout << "hc=" << tree.order() - dp.best.size() << ", construction adds "
              << c.added_edges.size() << " edges (out-1=" << stats.out - 1 << ")\n";
  }

  Graph lg = line_graph(tree).graph;
  std::cout << "decycling of L(T): " << tree.order() - 1 - dp.best.size() << " from l";
  if (lg.order() <= OracleCaps{}.vertices)
    std::cout << ", " << decycling_number(lg).value << " by exhaustive search";
  std::cout << '\n';
  return 0;
}
