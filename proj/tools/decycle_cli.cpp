// decycle: generate trees, compute linear-forest and decycling quantities,
// and check the bound formulas against exhaustive enumeration.
//
// Exit status: 0 ok, 1 a bound was violated, 2 usage or input error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

#include "decycle/decycle.hpp"

namespace {

using namespace decycle;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string out;
  std::string format = "text";
  unsigned threads = 0;
  std::uint64_t seed = 1;
  std::size_t cap_n = kDefaultTreeCap;
  std::size_t cap_oracle = OracleCaps{}.vertices;
  bool of_linegraph = false;
  bool mutate_bounds = false;
  bool forest = false;
  std::string gen_spec;
  std::vector<std::string> args;
};

OracleCaps oracle_caps(const Options &o) {
  OracleCaps caps;
  caps.vertices = o.cap_oracle;
  caps.edges = std::max(o.cap_oracle, caps.edges);
  return caps;
}

std::size_t to_size(const std::string &s, const char *what) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    if (!s.empty() && s[0] == '-')
      throw std::invalid_argument(s);
    v = std::stoull(s, &pos);
  } catch (const std::exception &) {
    pos = 0;
  }
  if (pos == 0 || pos != s.size())
    throw UsageError(std::string(what) + ": expected a non-negative integer, got '" + s + "'");
  return static_cast<std::size_t>(v);
}

Graph generate(const std::vector<std::string> &spec, std::uint64_t seed) {
  if (spec.empty())
    throw UsageError("gen: missing family");
  const std::string &family = spec[0];
  std::vector<std::size_t> a;
  for (std::size_t i = 1; i < spec.size(); ++i)
    a.push_back(to_size(spec[i], family.c_str()));
  auto want = [&](std::size_t count, const char *usage) {
    if (a.size() != count)
      throw UsageError("gen " + family + ": usage: " + usage);
  };
  if (family == "path") {
    want(1, "path N");
    return path_graph(a[0]);
  }
  if (family == "star") {
    want(1, "star N");
    return star_graph(a[0]);
  }
  if (family == "spider") {
    if (a.empty())
      throw UsageError("gen spider: usage: spider LEG...");
    return spider_graph(std::span<const std::size_t>(a));
  }
  if (family == "kary") {
    want(2, "kary K INTERNAL (random, uses --seed)");
    return random_kary_tree(a[0], a[1], seed);
  }
  if (family == "perfect-kary") {
    want(2, "perfect-kary K H");
    return perfect_kary_tree(a[0], a[1]);
  }
  if (family == "prufer") {
    std::vector<Vertex> seq(a.begin(), a.end());
    return prufer_decode(std::span<const Vertex>(seq));
  }
  if (family == "random") {
    want(1, "random N (uses --seed)");
    return random_tree(a[0], seed);
  }
  if (family == "lower-spider") {
    want(2, "lower-spider N D");
    return lower_spider(a[0], a[1]);
  }
  if (family == "tstar") {
    want(2, "tstar N D");
    return t_star(a[0], a[1]);
  }
  if (family == "t1star") {
    want(2, "t1star N D");
    return t1_star(a[0], a[1]);
  }
  if (family == "t2star") {
    want(2, "t2star N D");
    return t2_star(a[0], a[1]);
  }
  if (family == "kary-caterpillar") {
    want(2, "kary-caterpillar N K");
    return kary_caterpillar(a[0], a[1]);
  }
  throw UsageError("gen: unknown family '" + family + "'");
}

std::vector<std::string> split_words(const std::string &s) {
  std::istringstream is(s);
  std::vector<std::string> out;
  for (std::string w; is >> w;)
    out.push_back(w);
  return out;
}

// The graph comes from --gen "family args" or from a file path ("-" for stdin).
Graph load_input(const Options &o, const std::string *path) {
  if (!o.gen_spec.empty()) {
    if (path)
      throw UsageError("give either an input file or --gen, not both");
    return generate(split_words(o.gen_spec), o.seed);
  }
  if (!path)
    throw UsageError("missing input file (or --gen SPEC)");
  if (*path == "-")
    return parse_graph(std::cin);
  std::ifstream in(*path);
  if (!in)
    throw UsageError("cannot open '" + *path + "'");
  try {
    return parse_graph(in);
  } catch (const ParseError &e) {
    throw UsageError(*path + ": " + e.what());
  }
}

// Writes to --out if given, else stdout.
class Sink {
public:
  explicit Sink(const std::string &path) {
    if (!path.empty()) {
      file_.open(path);
      if (!file_)
        throw UsageError("cannot write '" + path + "'");
    }
  }
  std::ostream &stream() { return file_.is_open() ? static_cast<std::ostream &>(file_) : std::cout; }
  bool to_file() const { return file_.is_open(); }

private:
  std::ofstream file_;
};

std::string join_edges(const std::vector<Edge> &edges) {
  std::ostringstream os;
  for (std::size_t i = 0; i < edges.size(); ++i)
    os << (i ? " " : "") << edges[i];
  return os.str();
}

std::string join_vertices(const std::vector<Vertex> &vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i)
    os << (i ? " " : "") << vs[i];
  return os.str();
}

void require_format(const Options &o, std::initializer_list<const char *> allowed, const char *cmd) {
  for (const char *f : allowed)
    if (o.format == f)
      return;
  throw UsageError(std::string(cmd) + ": --format " + o.format + " is not supported here");
}

int cmd_gen(const Options &o) {
  require_format(o, {"text", "dot"}, "gen");
  Graph g = generate(o.args, o.seed);
  Sink sink(o.out);
  if (o.format == "dot")
    sink.stream() << to_dot(g);
  else
    write_edge_list(sink.stream(), g);
  std::ostringstream stats;
  stats << "n=" << g.order() << " m=" << g.size() << " d=" << tree_diameter(g) << '\n';
  (sink.to_file() ? std::cout : std::cerr) << stats.str();
  return kExitOk;
}

struct Value {
  std::string name;
  std::size_t value;
  std::string method;
  std::string witness;
};

void print_values(const Options &o, const std::vector<Value> &vals) {
  Sink sink(o.out);
  std::ostream &os = sink.stream();
  if (o.format == "csv") {
    os << "# decycle compute schema=" << kReportSchemaVersion << '\n'
       << "quantity,value,method,witness\n";
    for (const auto &v : vals)
      os << v.name << ',' << v.value << ',' << v.method << ',' << v.witness << '\n';
    return;
  }
  for (const auto &v : vals) {
    os << v.name << '=' << v.value;
    if (!v.method.empty())
      os << " (" << v.method << ')';
    os << '\n';
    if (!v.witness.empty())
      os << "  witness: " << v.witness << '\n';
  }
}

int cmd_compute(const Options &o) {
  require_format(o, {"text", "csv"}, "compute");
  if (o.args.empty())
    throw UsageError("compute: missing quantity");
  const std::string &q = o.args[0];
  if (o.args.size() > 2)
    throw UsageError("compute: too many arguments");
  Graph g = load_input(o, o.args.size() == 2 ? &o.args[1] : nullptr);
  const OracleCaps caps = oracle_caps(o);
  const bool tree = is_tree(g);
  auto need_tree = [&] {
    if (!tree)
      throw UsageError("compute " + q + ": input is not a tree (n=" + std::to_string(g.order()) +
                       " m=" + std::to_string(g.size()) + ")");
  };
  if (o.of_linegraph && q != "decycling" && q != "induced-forest")
    throw UsageError("--of-linegraph applies to decycling and induced-forest only");

  std::vector<Value> vals;
  if (q == "l") {
    if (tree && g.order() >= 1) {
      LinearForest f = max_linear_forest(root_at_center(g)).best;
      vals.push_back({"l", f.size(), "", join_edges(f.edges)});
    } else {
      EdgeResult r = max_linear_forest_bf(g, caps);
      vals.push_back({"l", r.value, "oracle", join_edges(r.witness)});
    }
  } else if (q == "hc") {
    if (tree) {
      vals.push_back({"hc", hc_of_tree(g), "", ""});
    } else {
      EdgeResult r = hc_bf(g, caps);
      vals.push_back({"hc", r.value, "oracle", join_edges(r.witness)});
    }
  } else if (q == "hc-construct") {
    need_tree();
    Completion c = hc_construct(g);
    vals.push_back({"hc", hc_of_tree(g), "", ""});
    vals.push_back({"added", c.added_edges.size(), "", join_edges(c.added_edges)});
    vals.push_back({"cycle", c.cycle.size(), "", join_vertices(c.cycle)});
  } else if (q == "linegraph") {
    LineGraph lg = line_graph(g);
    vals.push_back({"L.n", lg.graph.order(), "", ""});
    vals.push_back({"L.m", lg.graph.size(), "", join_edges(lg.graph.edges())});
  } else if (q == "decycling") {
    if (o.of_linegraph) {
      Graph lg = line_graph(g).graph;
      if (tree && g.order() >= 2) {
        const std::size_t dp = g.order() - 1 - l_of_tree(g);
        if (lg.order() <= std::min(caps.vertices, kHardOracleVertexCap)) {
          VertexResult r = decycling_number(lg, caps);
          if (o.format == "text") {
            Sink sink(o.out);
            sink.stream() << "∇(L)=" << dp << " (dp) =" << r.value << " (oracle)\n"
                          << "  witness: " << join_vertices(r.witness) << '\n';
            return dp == r.value ? kExitOk : kExitViolation;
          }
          vals.push_back({"decycling_L", dp, "dp", ""});
          vals.push_back({"decycling_L", r.value, "oracle", join_vertices(r.witness)});
        } else {
          vals.push_back({"∇(L)", dp, "dp; oracle over cap", ""});
        }
      } else {
        VertexResult r = decycling_number(lg, caps);
        vals.push_back({"∇(L)", r.value, "oracle", join_vertices(r.witness)});
      }
    } else {
      VertexResult r = decycling_number(g, caps);
      vals.push_back({"∇", r.value, "oracle", join_vertices(r.witness)});
    }
  } else if (q == "longest-path") {
    EdgeResult r = longest_path_bf(g, caps);
    vals.push_back({"p", r.value, tree ? "" : "oracle", join_edges(r.witness)});
  } else if (q == "induced-forest") {
    Graph target = o.of_linegraph ? line_graph(g).graph : g;
    VertexResult r = max_induced_forest(target, caps);
    vals.push_back({o.of_linegraph ? "f(L)" : "f", r.value, "oracle", join_vertices(r.witness)});
  } else {
    throw UsageError("compute: unknown quantity '" + q +
                     "' (l, hc, hc-construct, linegraph, decycling, longest-path, induced-forest)");
  }
  print_values(o, vals);
  return kExitOk;
}

int cmd_verify(const Options &o) {
  require_format(o, {"text", "csv"}, "verify");
  if (o.args.size() != 1)
    throw UsageError("verify: usage: verify N_MAX");
  if (o.cap_n > kHardTreeCap)
    throw UsageError("--cap-n " + std::to_string(o.cap_n) + " exceeds the compiled limit " +
                     std::to_string(kHardTreeCap));
  VerifyOptions v;
  v.n_max = to_size(o.args[0], "verify");
  if (v.n_max > o.cap_n)
    throw UsageError("verify: n_max=" + std::to_string(v.n_max) + " exceeds cap " +
                     std::to_string(o.cap_n) + " (raise with --cap-n, at most " +
                     std::to_string(kHardTreeCap) + ")");
  v.tree_cap = o.cap_n;
  v.threads = o.threads ? o.threads : std::max(1u, std::thread::hardware_concurrency());
  v.seed = o.seed;
  v.mutate_bounds = o.mutate_bounds;
  v.caps = oracle_caps(o);

  std::unique_ptr<Sink> report;
  if (!o.out.empty()) {
    report = std::make_unique<Sink>(o.out);
    write_csv_header(report->stream());
  }
  std::size_t shown = 0;
  VerifySummary s = verify_theorems(v, [&](const BoundReport &r) {
    if (report)
      write_csv(report->stream(), r);
    if (o.format == "text" && shown++ < 5)
      write_text(std::cerr, r);
  });

  if (o.format == "csv") {
    std::cout << "# decycle verify schema=" << kReportSchemaVersion << '\n'
              << "theorem,trees,checked,skipped,saturating,violations\n";
    for (const auto &t : s.theorems)
      std::cout << t.theorem << ',' << s.trees << ',' << t.checked << ',' << t.skipped << ','
                << t.saturating << ',' << t.violations << '\n';
  } else {
    const std::size_t lo = std::max<std::size_t>(v.n_min, 1);
    for (const auto &t : s.theorems)
      std::cout << "theorem " << t.theorem << ": " << t.checked << " trees checked via Prüfer n="
                << lo << ".." << v.n_max << ", " << t.skipped << " skipped, " << t.saturating
                << " saturating, " << t.violations << " violations\n";
    for (const auto &note : s.notes)
      std::cout << "note: " << note << '\n';
    std::cout << (s.ok() ? "verified " : "FAILED ") << s.trees << " trees, " << s.violations()
              << " violations\n";
  }
  return s.ok() ? kExitOk : kExitViolation;
}

int cmd_linegraph(const Options &o) {
  require_format(o, {"text", "dot"}, "linegraph");
  if (o.args.size() > 1)
    throw UsageError("linegraph: too many arguments");
  Graph g = load_input(o, o.args.empty() ? nullptr : &o.args[0]);
  LineGraph lg = line_graph(g);
  Sink sink(o.out);
  if (o.format == "dot")
    sink.stream() << to_dot(lg.graph);
  else
    write_edge_list(sink.stream(), lg.graph);
  std::ostringstream stats;
  stats << "L: n=" << lg.graph.order() << " m=" << lg.graph.size() << '\n';
  for (std::size_t i = 0; i < lg.source_edges.size(); ++i)
    stats << "  " << i << " = " << lg.source_edges[i] << '\n';
  (sink.to_file() ? std::cout : std::cerr) << stats.str();
  return kExitOk;
}

int cmd_dot(const Options &o) {
  require_format(o, {"text", "dot"}, "dot");
  if (o.args.size() > 1)
    throw UsageError("dot: too many arguments");
  Graph g = load_input(o, o.args.empty() ? nullptr : &o.args[0]);
  std::vector<Edge> highlight;
  if (o.forest) {
    if (is_tree(g) && g.order() >= 1)
      highlight = max_linear_forest(root_at_center(g)).best.edges;
    else
      highlight = max_linear_forest_bf(g, oracle_caps(o)).witness;
  }
  Sink sink(o.out);
  sink.stream() << to_dot(g, highlight);
  return kExitOk;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Maximum linear forests of trees and decycling numbers of their line graphs"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App *sub) {
    sub->add_option("--out,-o", o.out, "Output file (default: stdout)");
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"text", "csv", "dot"}));
    sub->add_option("--seed", o.seed, "Seed for random generators and sampling");
    sub->add_option("--cap-oracle", o.cap_oracle, "Vertex cap for brute-force oracles")
        ->check(CLI::Range(std::size_t{1}, kHardOracleVertexCap));
  };

  auto *gen = app.add_subcommand("gen", "Generate a tree: FAMILY ARGS...");
  gen->add_option("spec", o.args, "Family and integer arguments")->required();
  common(gen);

  auto *compute = app.add_subcommand("compute", "Compute a quantity: QUANTITY [INPUT]");
  compute->add_option("args", o.args, "Quantity, then an edge-list file ('-' for stdin)")->required();
  compute->add_option("--gen", o.gen_spec, "Use a generated tree instead of a file, e.g. \"tstar 8 4\"");
  compute->add_flag("--of-linegraph", o.of_linegraph, "Apply to the line graph of the input");
  common(compute);

  auto *verify = app.add_subcommand("verify", "Check all bounds on every tree up to N_MAX vertices");
  verify->add_option("n_max", o.args, "Largest tree order")->required()->expected(1);
  verify->add_option("--threads", o.threads, "Worker threads (default: hardware concurrency)");
  verify->add_option("--cap-n", o.cap_n, "Cap on n_max for exhaustive enumeration");
  verify->add_flag("--mutate-bounds", o.mutate_bounds, "Self-test: tighten one bound by 1");
  common(verify);

  auto *lgc = app.add_subcommand("linegraph", "Write the line graph of INPUT");
  lgc->add_option("input", o.args, "Edge-list file ('-' for stdin)");
  lgc->add_option("--gen", o.gen_spec, "Use a generated tree instead of a file");
  common(lgc);

  auto *dot = app.add_subcommand("dot", "Write INPUT as Graphviz DOT");
  dot->add_option("input", o.args, "Edge-list file ('-' for stdin)");
  dot->add_option("--gen", o.gen_spec, "Use a generated tree instead of a file");
  dot->add_flag("--forest", o.forest, "Highlight a maximum linear forest");
  common(dot);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*gen)
      return cmd_gen(o);
    if (*compute)
      return cmd_compute(o);
    if (*verify)
      return cmd_verify(o);
    if (*lgc)
      return cmd_linegraph(o);
    return cmd_dot(o);
  } catch (const std::exception &e) {
    std::cerr << "decycle: " << e.what() << '\n';
  }
  return kExitUsage;
}
