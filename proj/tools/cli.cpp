#include "cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <optional>
#include <sstream>

#include "vpg/bd_solver.hpp"
#include "vpg/brute_force.hpp"
#include "vpg/caterpillar.hpp"
#include "vpg/errors.hpp"
#include "vpg/generators.hpp"
#include "vpg/normalize.hpp"
#include "vpg/ptas.hpp"
#include "vpg/representation_io.hpp"
#include "vpg/splitting.hpp"
#include "vpg/width.hpp"

namespace vpg {

namespace {

struct InputError : Error {
  using Error::Error;
};

struct Flags {
  std::string input;
  std::string output;
  std::string epsilon = "1/2";
  std::uint64_t seed = 1;
  std::size_t budget_classes = kDefaultClassBudget;
  std::size_t jobs = 1;
};

struct Limits {
  std::size_t max_bends = 0;
  int max_load = 0;
  std::int64_t max_horizontal = 0;
  CLI::Option* bends_opt = nullptr;
  CLI::Option* load_opt = nullptr;
  CLI::Option* horizontal_opt = nullptr;

  std::optional<std::size_t> bends() const { return bends_opt->count() ? std::optional(max_bends) : std::nullopt; }
  std::optional<int> load() const { return load_opt->count() ? std::optional(max_load) : std::nullopt; }
  std::optional<std::int64_t> horizontal() const {
    return horizontal_opt->count() ? std::optional(max_horizontal) : std::nullopt;
  }
};

GridRep load(const Flags& f) {
  try {
    return parse_representation(read_text_file(f.input));
  } catch (const ParseError& e) {
    throw InputError(e.what());
  } catch (const InvariantError& e) {
    throw InputError(e.what());
  } catch (const Error& e) {
    throw InputError(e.what());
  }
}

void emit(const Flags& f, std::ostream& out, const std::string& text) {
  if (f.output.empty()) {
    out << text;
  } else {
    write_text_file(f.output, text);
  }
}

Rational epsilon_of(const Flags& f) {
  try {
    return Rational::parse(f.epsilon);
  } catch (const Error& e) {
    throw InputError(std::string("bad --epsilon: ") + e.what());
  }
}

PtasOptions ptas_options(const Flags& f, const Limits& l) {
  PtasOptions o;
  o.c = l.horizontal();
  o.t = l.load();
  o.jobs = f.jobs;
  o.solve.class_budget = f.budget_classes;
  return o;
}

void add_input(CLI::App* sub, Flags& f, bool required = true) {
  auto* opt = sub->add_option("--input,-i", f.input, "representation document");
  if (required) opt->required();
  sub->add_option("--output,-o", f.output, "write data here instead of standard output");
}

void add_limits(CLI::App* sub, Limits& l) {
  l.bends_opt = sub->add_option("--max-bends", l.max_bends, "bends per path (k)");
  l.load_opt = sub->add_option("--max-load", l.max_load, "paths per grid-edge (t)");
  l.horizontal_opt = sub->add_option("--max-horizontal", l.max_horizontal, "horizontal part length (c)");
}

int cmd_validate(const Flags& f, const Limits& l, std::ostream& out, std::ostream& err) {
  const GridRep r = load(f);
  Constraints c;
  c.max_bends = l.bends();
  c.max_edge_load = l.load();
  c.max_horizontal = l.horizontal();
  const auto report = validate(r, c);
  std::ostringstream os;
  for (const auto& v : report.violations) os << v.subject << ": " << v.message << '\n';
  for (const auto& n : report.notes) err << "note: " << n.subject << ": " << n.message << '\n';
  if (report.ok()) os << "ok " << r.size() << " paths\n";
  emit(f, out, os.str());
  return report.ok() ? 0 : 1;
}

int cmd_graph(const Flags& f, std::ostream& out) {
  emit(f, out, export_edge_list(intersection_graph(load(f))));
  return 0;
}

int cmd_width(const Flags& f, bool no_mim, std::size_t induced_budget, std::ostream& out, std::ostream& err) {
  const GridRep r = load(f);
  const Decomposition dec = decompose(r);
  WidthOptions o;
  o.induced = !no_mim;
  o.induced_budget = induced_budget;
  o.jobs = f.jobs;
  const WidthReport report = evaluate_widths(dec.graph, dec.bd, o);
  const auto t = std::max(1, grid_edge_load(r).max_load);
  const auto columns = column_count(r);
  err << "mm_width " << report.mm_width;
  if (report.mim_width) err << " mim_width " << *report.mim_width;
  err << " bound " << 3 * t * (columns + 1) << " (t=" << t << ", columns=" << columns << ")\n";
  emit(f, out, width_csv(dec.bd, report));
  return 0;
}

int cmd_solve(const Flags& f, bool oracle, const std::string& problem, std::ostream& out, std::ostream& err) {
  const GridRep r = load(f);
  const Problem kind = problem == "ds" ? Problem::DS : Problem::IS;
  Solution s;
  Graph g;
  if (oracle) {
    g = intersection_graph(r);
    s = kind == Problem::IS ? brute_force_is(g) : brute_force_ds(g);
  } else {
    const Decomposition dec = decompose(r);
    g = dec.graph;
    SolveOptions o;
    o.class_budget = f.budget_classes;
    SolveStats stats;
    s = kind == Problem::IS ? solve_is_bd(g, dec.bd, o, &stats) : solve_ds_bd(g, dec.bd, o, &stats);
    err << "max_classes " << stats.max_classes << '\n';
  }
  if (!verify_solution(g, s)) throw InvariantError("solver output failed verification");
  emit(f, out, format_solution(g, s));
  return 0;
}

int cmd_ptas(const Flags& f, const Limits& l, Problem kind, const std::string& diagnostics, std::ostream& out, std::ostream& err) {
  const GridRep r = load(f);
  const auto eps = epsilon_of(f);
  const PtasResult res = kind == Problem::IS ? baker_is(r, eps, ptas_options(f, l)) : baker_ds(r, eps, ptas_options(f, l));
  err << "k " << res.k << " c " << res.c << " t " << res.t << " width_budget " << res.width_budget << '\n';
  if (!diagnostics.empty()) write_text_file(diagnostics, diagnostics_csv(res.diagnostics));
  emit(f, out, format_solution(res.graph, res.solution));
  return 0;
}

int cmd_reduce(const Flags& f, bool ds, const std::string& splits, std::ostream& out, std::ostream& err) {
  const GridRep r = load(f);
  const Problem kind = ds ? Problem::DS : Problem::IS;
  const GridRep normalized = normalize_b0cpg(r, ds ? 4 : 5);
  const Reduction red = reduce_full(normalized, kind);
  err << "splits " << red.splits.size() << " offset " << red.offset << " paths " << red.rep.size() << '\n';
  if (!splits.empty()) write_text_file(splits, splits_csv(red.splits));
  emit(f, out, serialize_representation(red.rep));
  return 0;
}

struct GenerateFlags {
  std::string family = "random";
  std::size_t n = 10;
  std::int64_t columns = 8;
  std::int64_t rows = 0;
};

int cmd_generate(const Flags& f, const Limits& l, const GenerateFlags& g, std::ostream& out) {
  GridRep r;
  if (g.family == "random") {
    RandomVpgParams p;
    p.n = g.n;
    p.seed = f.seed;
    p.columns = g.columns;
    p.rows = g.rows;
    p.max_bends = l.bends().value_or(p.max_bends);
    p.max_load = l.load().value_or(p.max_load);
    p.max_horizontal = l.horizontal().value_or(p.max_horizontal);
    r = gen_random_vpg(p);
  } else if (g.family == "b0cpg") {
    r = gen_b0cpg_subcubic(g.n, f.seed);
  } else {
    r = gen_split_graph_rep(random_split_graph(g.n, f.seed));
  }
  emit(f, out, serialize_representation(r));
  return 0;
}

struct BenchFlags {
  std::vector<std::size_t> sizes{100, 200, 400};
  std::int64_t columns_per_100 = 5;
  std::int64_t rows = 60;
};

int cmd_bench(const Flags& f, const Limits& l, const BenchFlags& b, std::ostream& out, std::ostream& err) {
  const auto eps = epsilon_of(f);
  std::ostringstream os;
  os << "n,edges,columns,mm_width,is_value,is_seconds,ds_value,ds_seconds\n";
  for (const auto n : b.sizes) {
    RandomVpgParams p;
    p.n = n;
    p.seed = f.seed;
    p.max_bends = l.bends().value_or(1);
    p.max_load = l.load().value_or(2);
    p.max_horizontal = l.horizontal().value_or(3);
    p.columns = std::max<std::int64_t>(4, static_cast<std::int64_t>(n) * b.columns_per_100 / 100);
    p.rows = b.rows;
    const GridRep r = gen_random_vpg(p);
    const Decomposition dec = decompose(r);
    const std::size_t mm = decomposition_mm_width(dec.graph, dec.bd);
    auto timed = [&](Problem kind) {
      const auto t0 = std::chrono::steady_clock::now();
      const auto res = kind == Problem::IS ? baker_is(r, eps, ptas_options(f, l)) : baker_ds(r, eps, ptas_options(f, l));
      const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
      return std::pair{res.solution.value, dt.count()};
    };
    const auto [is_value, is_seconds] = timed(Problem::IS);
    const auto [ds_value, ds_seconds] = timed(Problem::DS);
    os << n << ',' << dec.graph.edge_count() << ',' << column_count(r) << ',' << mm << ',' << is_value << ','
       << is_seconds << ',' << ds_value << ',' << ds_seconds << '\n';
    err << "n " << n << " done\n";
  }
  emit(f, out, os.str());
  return 0;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Grid-path representations: widths, exact solvers, approximation schemes, gadgets"};
  app.require_subcommand(1);
  Flags f;
  Limits validate_limits, ptas_limits[2], generate_limits, bench_limits;

  auto* validate_cmd = app.add_subcommand("validate", "check constraints (k, t, c) and the model invariants");
  add_input(validate_cmd, f);
  add_limits(validate_cmd, validate_limits);

  auto* graph_cmd = app.add_subcommand("graph", "export the intersection graph as an edge list");
  add_input(graph_cmd, f);

  bool no_mim = false;
  std::size_t induced_budget = kDefaultInducedMatchingBudget;
  auto* width_cmd = app.add_subcommand("width", "build the caterpillar decomposition and report per-cut widths");
  add_input(width_cmd, f);
  width_cmd->add_flag("--no-mim", no_mim, "skip maximum induced matchings");
  width_cmd->add_option("--induced-budget", induced_budget, "edges left after twin merging");
  width_cmd->add_option("--jobs", f.jobs);

  bool exact = false, oracle = false;
  std::string problem = "is";
  auto* solve_cmd = app.add_subcommand("solve", "solve independent set or dominating set exactly");
  add_input(solve_cmd, f);
  auto* exact_opt = solve_cmd->add_flag("--exact", exact, "dynamic programming over the decomposition");
  solve_cmd->add_flag("--oracle", oracle, "brute force")->excludes(exact_opt);
  solve_cmd->add_option("--problem", problem)->check(CLI::IsMember({"is", "ds"}));
  solve_cmd->add_option("--budget-classes", f.budget_classes);

  std::string diagnostics;
  CLI::App* ptas_cmd[2];
  const char* ptas_names[2] = {"ptas-is", "ptas-ds"};
  for (int i = 0; i < 2; ++i) {
    ptas_cmd[i] = app.add_subcommand(ptas_names[i], i == 0 ? "shifting scheme for independent set"
                                                           : "shifting scheme for dominating set");
    add_input(ptas_cmd[i], f);
    add_limits(ptas_cmd[i], ptas_limits[i]);
    ptas_cmd[i]->add_option("--epsilon,-e", f.epsilon, "rational in (0,1), e.g. 1/3");
    ptas_cmd[i]->add_option("--budget-classes", f.budget_classes);
    ptas_cmd[i]->add_option("--jobs", f.jobs);
    ptas_cmd[i]->add_option("--diagnostics", diagnostics, "per-shift CSV");
  }

  bool reduce_is = false, reduce_ds = false;
  std::string splits;
  auto* reduce_cmd = app.add_subcommand("reduce", "normalize a 0-bend contact representation and split long paths");
  add_input(reduce_cmd, f);
  auto* is_flag = reduce_cmd->add_flag("--is", reduce_is);
  reduce_cmd->add_flag("--ds", reduce_ds)->excludes(is_flag);
  reduce_cmd->add_option("--splits", splits, "CSV of applied splits");

  GenerateFlags gen;
  auto* generate_cmd = app.add_subcommand("generate", "write a generated representation");
  generate_cmd->add_option("--output,-o", f.output);
  generate_cmd->add_option("--family", gen.family)->check(CLI::IsMember({"random", "b0cpg", "split"}));
  generate_cmd->add_option("--n", gen.n);
  generate_cmd->add_option("--seed", f.seed);
  generate_cmd->add_option("--columns", gen.columns);
  generate_cmd->add_option("--rows", gen.rows);
  add_limits(generate_cmd, generate_limits);

  BenchFlags bench;
  auto* bench_cmd = app.add_subcommand("bench", "time both schemes on random instances of growing size");
  bench_cmd->add_option("--output,-o", f.output);
  bench_cmd->add_option("--sizes", bench.sizes)->delimiter(',');
  bench_cmd->add_option("--seed", f.seed);
  bench_cmd->add_option("--epsilon,-e", f.epsilon);
  bench_cmd->add_option("--columns-per-100", bench.columns_per_100);
  bench_cmd->add_option("--rows", bench.rows);
  bench_cmd->add_option("--jobs", f.jobs);
  add_limits(bench_cmd, bench_limits);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << '\n';
    return 1;
  }

  try {
    if (validate_cmd->parsed()) return cmd_validate(f, validate_limits, out, err);
    if (graph_cmd->parsed()) return cmd_graph(f, out);
    if (width_cmd->parsed()) return cmd_width(f, no_mim, induced_budget, out, err);
    if (solve_cmd->parsed()) return cmd_solve(f, oracle, problem, out, err);
    if (ptas_cmd[0]->parsed()) return cmd_ptas(f, ptas_limits[0], Problem::IS, diagnostics, out, err);
    if (ptas_cmd[1]->parsed()) return cmd_ptas(f, ptas_limits[1], Problem::DS, diagnostics, out, err);
    if (reduce_cmd->parsed()) {
      if (!reduce_is && !reduce_ds) throw PreconditionError("reduce needs --is or --ds");
      return cmd_reduce(f, reduce_ds, splits, out, err);
    }
    if (generate_cmd->parsed()) return cmd_generate(f, generate_limits, gen, out);
    if (bench_cmd->parsed()) return cmd_bench(f, bench_limits, bench, out, err);
  } catch (const InputError& e) {
    err << "malformed input: " << e.what() << '\n';
    return 3;
  } catch (const BudgetError& e) {
    err << "budget exhausted: " << e.what() << '\n';
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}

}  // namespace vpg
