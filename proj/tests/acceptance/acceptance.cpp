// One PASS/FAIL line per acceptance criterion. Every criterion also yields a
// CSV; criterion 9 recomputes 1-8 and compares those CSVs byte for byte.
// Usage: acceptance [output-dir]   (CSVs are written there when given)

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "support.hpp"
#include "vpg/bd_solver.hpp"
#include "vpg/brute_force.hpp"
#include "vpg/caterpillar.hpp"
#include "vpg/errors.hpp"
#include "vpg/generators.hpp"
#include "vpg/normalize.hpp"
#include "vpg/ptas.hpp"
#include "vpg/splitting.hpp"
#include "vpg/width.hpp"

using namespace vpg;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
  std::string csv;
};

struct Criterion {
  int number;
  const char* title;
  double limit_seconds;
  std::function<Outcome()> run;
};

std::int64_t load_of(const GridRep& r) { return std::max(1, grid_edge_load(r).max_load); }

GridRep random_instance(std::uint64_t seed, std::size_t n, std::size_t bends, std::int64_t c, int t,
                        std::int64_t columns, std::int64_t rows = 0, std::int64_t max_vertical = 3) {
  RandomVpgParams p{.n = n, .max_bends = bends, .max_horizontal = c, .max_load = t, .columns = columns,
                    .rows = rows, .max_vertical = max_vertical, .seed = seed};
  return translate_to_origin_column(gen_random_vpg(p));
}


// Treewidth by the subset recurrence TW(S) = min_v max(TW(S - v), |Q(S - v, v)|),
// where Q(S, v) are the vertices outside S + v reachable from v through S.
int slow_treewidth(const Graph& g) {
  const std::size_t n = g.size();
  if (n == 0) return -1;
  std::vector<std::uint32_t> adj(n, 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= 1U << v;
    adj[v] |= 1U << u;
  }
  auto q_size = [&](std::uint32_t s, std::size_t v) {
    std::uint32_t seen = 1U << v, frontier = 1U << v, outside = 0;
    while (frontier) {
      const auto u = static_cast<std::size_t>(__builtin_ctz(frontier));
      frontier &= frontier - 1;
      const std::uint32_t nb = adj[u] & ~seen;
      seen |= nb;
      frontier |= nb & s;
      outside |= nb & ~s;
    }
    return __builtin_popcount(outside);
  };
  const std::uint32_t full = (1U << n) - 1;
  std::vector<int> tw(std::size_t{1} << n, 0);
  tw[0] = -1;
  for (std::uint32_t s = 1; s <= full; ++s) {
    int best = static_cast<int>(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (!(s >> v & 1U)) continue;
      const std::uint32_t rest = s & ~(1U << v);
      best = std::min(best, std::max(tw[rest], q_size(rest, v)));
    }
    tw[s] = best;
  }
  return tw[full];
}

Outcome width_bound() {
  Outcome o;
  std::ostringstream csv;
  csv << "instance,n,t,columns,mm,mim,bound\n";
  std::size_t count = 0, violations = 0;
  for (std::uint64_t i = 0; i < 510; ++i) {
    const int t = 1 + static_cast<int>(i % 3);
    const std::int64_t ell = 3 + static_cast<std::int64_t>((i / 3) % 10);
    const std::size_t n = 4 + (i * 7) % 57;
    const auto r = random_instance(1000 + i, n, i % 4, ell, t, ell);
    const auto dec = decompose(r);
    const auto report = evaluate_widths(dec.graph, dec.bd, {.induced = true, .induced_budget = 2000});
    const std::int64_t bound = 3 * load_of(r) * (column_count(r) + 1);
    const bool ok = report.mim_width && *report.mim_width <= report.mm_width &&
                    static_cast<std::int64_t>(report.mm_width) <= bound;
    violations += !ok;
    ++count;
    csv << i << ',' << n << ',' << load_of(r) << ',' << column_count(r) << ',' << report.mm_width << ','
        << report.mim_width.value_or(0) << ',' << bound << '\n';
  }
  o.pass = violations == 0 && count >= 500;
  o.detail = std::to_string(count) + " instances, " + std::to_string(violations) + " violations";
  o.csv = csv.str();
  return o;
}

Outcome exact_solvers() {
  Outcome o;
  std::ostringstream csv;
  csv << "instance,n,alpha_oracle,alpha_bd,gamma_oracle,gamma_bd\n";
  std::size_t count = 0, mismatches = 0;
  for (std::uint64_t i = 0; i < 500; ++i) {
    const std::size_t n = 1 + i % 18;
    const auto r = random_instance(2000 + i, n, i % 3, 1 + static_cast<std::int64_t>(i % 4), 1 + static_cast<int>(i % 3),
                                   4 + static_cast<std::int64_t>(i % 7));
    const auto dec = decompose(r);
    const auto is = solve_is_bd(dec.graph, dec.bd);
    const auto ds = solve_ds_bd(dec.graph, dec.bd);
    const auto ois = brute_force_is(dec.graph);
    const auto ods = brute_force_ds(dec.graph);
    mismatches += is.value != ois.value || ds.value != ods.value || !is.verified || !ds.verified;
    ++count;
    csv << i << ',' << n << ',' << ois.value << ',' << is.value << ',' << ods.value << ',' << ds.value << '\n';
  }
  o.pass = mismatches == 0;
  o.detail = std::to_string(count) + " instances, " + std::to_string(mismatches) + " mismatches (tolerance 0)";
  o.csv = csv.str();
  return o;
}

Outcome ptas_is() {
  Outcome o;
  std::ostringstream csv;
  csv << "instance,epsilon,n,c,alpha,value,max_width,budget\n";
  std::size_t count = 0, violations = 0;
  for (std::uint64_t i = 0; i < 100; ++i) {
    for (const Rational eps : {Rational(1, 2), Rational(1, 3), Rational(1, 5)}) {
      const std::int64_t c = 1 + static_cast<std::int64_t>(i % 2);
      const std::size_t n = 6 + i % 13;
      const auto r = random_instance(3000 + i, n, 2, c, 2, 12, 4, 1);
      const auto res = baker_is(r, eps, {.c = c});
      const auto alpha = brute_force_is(res.graph).value;
      std::size_t width = 0;
      for (const auto& d : res.diagnostics) width = std::max(width, d.max_width);
      Solution check = res.solution;
      const bool ok = verify_solution(res.graph, check) && check.kind == Problem::IS &&
                      Rational(static_cast<std::int64_t>(check.value)) >=
                          (Rational(1) - eps) * Rational(static_cast<std::int64_t>(alpha)) &&
                      width <= res.width_budget;
      violations += !ok;
      ++count;
      csv << i << ',' << eps.str() << ',' << n << ',' << c << ',' << alpha << ',' << check.value << ','
          << width << ',' << res.width_budget << '\n';
    }
  }
  o.pass = violations == 0 && count >= 300;
  o.detail = std::to_string(count) + " runs, " + std::to_string(violations) + " violations";
  o.csv = csv.str();
  return o;
}

Outcome ptas_ds() {
  Outcome o;
  std::ostringstream csv;
  csv << "instance,epsilon,n,c,gamma,value,windowed_shifts,max_width,budget\n";
  std::size_t count = 0, violations = 0, windowed_runs = 0, window_checks = 0;
  for (std::uint64_t i = 0; i < 150; ++i) {
    for (const Rational eps : {Rational(1, 2), Rational(1, 3)}) {
      const std::int64_t c = 1 + static_cast<std::int64_t>(i % 2);
      const std::size_t n = 6 + i % 11;
      const auto r = random_instance(4000 + i, n, 2, c, 2, 4 + static_cast<std::int64_t>(i % 11), 2, 1);
      bool ok = true;
      PtasResult res;
      try {
        res = baker_ds(r, eps, {.c = c});
      } catch (const InvariantError&) {
        ok = false;
      }
      // Independent replay of the window layer on the whole instance: every
      // vertex interior to some window, windows two apart disjoint, and each
      // window's pick dominating its interior.
      const auto cfg = make_ds_config(eps, c);
      const auto x = compute_x_sets(r);
      const auto v = compute_v_sets(r);
      const Graph g = intersection_graph(r);
      if (cfg.needs_windows(static_cast<std::int64_t>(v.size()))) {
        for (std::int64_t s = 0; s < cfg.shifts(); ++s) {
          const auto windows = build_windows(x, v, cfg, s);
          VertexSet covered = g.empty_set();
          for (std::size_t a = 0; a < windows.size(); ++a) {
            covered |= windows[a].interior;
            for (std::size_t b = a + 2; b < windows.size(); ++b) {
              ok = ok && !windows[a].vertices.intersects(windows[b].vertices);
            }
            const auto ws = solve_window(r, g, windows[a]);
            ok = ok && windows[a].interior.is_subset_of(g.neighborhood(ws.chosen) | ws.chosen);
            ++window_checks;
          }
          ok = ok && covered == VertexSet::full(g.size());
        }
      }
      std::size_t windowed = 0, width = 0;
      for (const auto& d : res.diagnostics) {
        windowed += d.parts > 1;
        width = std::max(width, d.max_width);
      }
      windowed_runs += windowed > 0;
      const auto gamma = brute_force_ds(res.graph).value;
      Solution check = res.solution;
      ok = ok && verify_solution(res.graph, check) && check.kind == Problem::DS &&
           Rational(static_cast<std::int64_t>(check.value)) <=
               (Rational(1) + eps) * Rational(static_cast<std::int64_t>(gamma)) &&
           width <= res.width_budget;
      violations += !ok;
      ++count;
      csv << i << ',' << eps.str() << ',' << n << ',' << c << ',' << gamma << ',' << check.value << ','
          << windowed << ',' << width << ',' << res.width_budget << '\n';
    }
  }
  o.pass = violations == 0 && count >= 300 && windowed_runs > 0;
  o.detail = std::to_string(count) + " runs (" + std::to_string(windowed_runs) + " used windows, " +
             std::to_string(window_checks) + " window checks), " + std::to_string(violations) + " violations";
  o.csv = csv.str();
  return o;
}

Outcome gadgets() {
  Outcome o;
  std::ostringstream csv;
  csv << "instance,problem,vertex,degree,q,q_prime,predicted,measured\n";
  std::size_t splits = 0, mismatches = 0;
  for (std::uint64_t seed = 1; splits < 200 && seed <= 2000; ++seed) {
    for (const Problem problem : {Problem::IS, Problem::DS}) {
      const std::size_t n = 3 + seed % 10;
      const auto r = normalize_b0cpg(gen_b0cpg_subcubic(n, 5000 + seed), problem == Problem::IS ? 5 : 4);
      const Graph g = intersection_graph(r);
      auto opt = [&](const Graph& h) { return problem == Problem::IS ? brute_force_is(h).value : brute_force_ds(h).value; };
      const auto before = static_cast<std::int64_t>(opt(g));
      for (std::size_t v = 0; v < r.size(); ++v) {
        if (!r.path(v).is_horizontal() || g.degree(v) < 2) continue;
        const auto [h, rep] =
            problem == Problem::IS ? split_vertex_is(r, r.path(v).id()) : split_vertex_ds(r, r.path(v).id());
        const auto measured = static_cast<std::int64_t>(opt(intersection_graph(h))) - before;
        mismatches += measured != rep.predicted_delta;
        ++splits;
        csv << seed << ',' << (problem == Problem::IS ? "is" : "ds") << ',' << rep.vertex << ',' << rep.degree << ','
            << rep.q << ',' << rep.q_prime << ',' << rep.predicted_delta << ',' << measured << '\n';
      }
    }
  }
  o.pass = mismatches == 0 && splits >= 200;
  o.detail = std::to_string(splits) + " splits, " + std::to_string(mismatches) + " mismatches";
  o.csv = csv.str();
  return o;
}

Outcome clique_augmentation() {
  Outcome o;
  std::ostringstream csv;
  csv << "instance,n,set_size,mim,mim_augmented\n";
  std::size_t count = 0, violations = 0;
  SeededRng rng(6000);
  for (std::uint64_t i = 0; i < 220; ++i) {
    const std::size_t n = 4 + i % 13;
    const auto r = random_instance(6000 + i, n, i % 3, 3, 2, 6);
    const auto dec = decompose(r);
    VertexSet s(n);
    for (std::size_t v = 0; v < n; ++v) {
      if (rng.coin()) s.set(v);
    }
    const auto before = decomposition_mim_width(dec.graph, dec.bd, 2000);
    const auto after = decomposition_mim_width(clique_augment(dec.graph, s), dec.bd, 2000);
    violations += after > before + 1;
    ++count;
    csv << i << ',' << n << ',' << s.count() << ',' << before << ',' << after << '\n';
  }
  o.pass = violations == 0 && count >= 200;
  o.detail = std::to_string(count) + " triples, " + std::to_string(violations) + " violations";
  o.csv = csv.str();
  return o;
}

Outcome treewidth() {
  Outcome o;
  // The oracle itself on graphs of known treewidth.
  auto named = [](std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    std::vector<std::string> ids;
    for (std::size_t i = 0; i < n; ++i) ids.push_back(testkit::vid(i));
    Graph g(ids);
    for (const auto& [u, v] : edges) g.add_edge(u, v);
    return g;
  };
  const bool oracle_ok = slow_treewidth(named(5, {})) == 0 &&
                         slow_treewidth(named(5, {{0, 1}, {1, 2}, {1, 3}, {3, 4}})) == 1 &&
                         slow_treewidth(named(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}})) == 2 &&
                         slow_treewidth(named(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}})) == 3 &&
                         slow_treewidth(named(9, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {6, 7}, {7, 8}, {0, 3}, {3, 6},
                                                  {1, 4}, {4, 7}, {2, 5}, {5, 8}})) == 3;
  std::ostringstream csv;
  csv << "instance,n,t,columns,treewidth,bound\n";
  std::size_t count = 0, violations = 0;
  for (std::uint64_t i = 0; i < 60; ++i) {
    const std::size_t n = 2 + i % 9;
    const auto r = random_instance(7000 + i, n, 1 + i % 3, 3, 1 + static_cast<int>(i % 3), 3 + static_cast<std::int64_t>(i % 5));
    const Graph g = intersection_graph(r);
    const int tw = slow_treewidth(g);
    const std::int64_t bound = 9 * load_of(r) * (column_count(r) + 1) - 1;
    violations += tw > bound;
    ++count;
    csv << i << ',' << n << ',' << load_of(r) << ',' << column_count(r) << ',' << tw << ',' << bound << '\n';
  }
  o.pass = oracle_ok && violations == 0 && count >= 50;
  o.detail = std::to_string(count) + " instances, " + std::to_string(violations) + " violations" +
             (oracle_ok ? "" : ", treewidth oracle failed its self-check");
  o.csv = csv.str();
  return o;
}

Outcome scaling() {
  Outcome o;
  // 100 columns by 60 rows keeps the largest component near 700 vertices, so
  // the DS scheme works through genuine window sequences.
  const RandomVpgParams p{.n = 2000, .max_bends = 1, .max_horizontal = 3, .max_load = 2, .columns = 100,
                          .rows = 60, .seed = 1};
  const GridRep r = gen_random_vpg(p);
  std::ostringstream csv;
  bool ok = true;
  std::string detail;
  for (const Problem problem : {Problem::IS, Problem::DS}) {
    const auto t0 = std::chrono::steady_clock::now();
    const PtasResult res = problem == Problem::IS ? baker_is(r, Rational(1, 2), {.c = 3, .t = 2})
                                                  : baker_ds(r, Rational(1, 2), {.c = 3, .t = 2});
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    std::size_t width = 0, windowed = 0;
    for (const auto& d : res.diagnostics) {
      width = std::max(width, d.max_width);
      windowed += d.parts > 1;
    }
    Solution check = res.solution;
    ok = ok && verify_solution(res.graph, check) && width <= res.width_budget;
    char buf[160];
    std::snprintf(buf, sizeof buf, "%s%s value %zu, max width %zu <= budget %zu, %.1fs", detail.empty() ? "" : "; ",
                  problem == Problem::IS ? "IS" : "DS", check.value, width, res.width_budget, dt.count());
    detail += buf;
    csv << (problem == Problem::IS ? "is" : "ds") << " value " << check.value << " budget " << res.width_budget
        << " partitioned_shifts " << windowed << '\n'
        << diagnostics_csv(res.diagnostics);
  }
  o.pass = ok;
  o.detail = detail;
  o.csv = csv.str();
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::filesystem::path out_dir = argc > 1 ? argv[1] : "";
  if (!out_dir.empty()) std::filesystem::create_directories(out_dir);

  const std::vector<Criterion> criteria{
      {1, "width bound mim <= mm <= 3t(l+1)", 120, width_bound},
      {2, "exact solvers equal the oracles", 600, exact_solvers},
      {3, "IS scheme ratio (1-eps)", 900, ptas_is},
      {4, "DS scheme ratio (1+eps) with window checks", 1200, ptas_ds},
      {5, "split gadgets shift the optimum exactly", 600, gadgets},
      {6, "clique augmentation adds at most one to mim", 120, clique_augmentation},
      {7, "treewidth <= 9t(l+1)-1", 300, treewidth},
      {8, "n=2000 scaling run within budget", 600, scaling},
  };

  auto run = [](const Criterion& c, double& seconds) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return o;
  };

  bool all = true;
  std::vector<std::string> first_csv;
  for (const auto& c : criteria) {
    double seconds = 0;
    const Outcome o = run(c, seconds);
    const bool pass = o.pass && seconds < c.limit_seconds;
    all = all && pass;
    first_csv.push_back(o.csv);
    std::printf("criterion %d: %s  %s: %s [%.1fs, limit %.0fs]\n", c.number, pass ? "PASS" : "FAIL", c.title,
                o.detail.c_str(), seconds, c.limit_seconds);
    std::fflush(stdout);
    if (!out_dir.empty()) {
      std::ofstream(out_dir / ("criterion" + std::to_string(c.number) + ".csv"), std::ios::binary) << o.csv;
    }
  }

  std::size_t differing = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    double seconds = 0;
    const Outcome again = run(criteria[i], seconds);
    if (again.csv != first_csv[i] || again.csv.empty()) {
      ++differing;
      std::printf("  rerun of criterion %d produced different CSV output\n", criteria[i].number);
    }
  }
  const bool deterministic = differing == 0;
  all = all && deterministic;
  std::printf("criterion 9: %s  repeated runs give byte-identical CSVs: %zu of %zu differ\n",
              deterministic ? "PASS" : "FAIL", differing, criteria.size());
  return all ? 0 : 1;
}
