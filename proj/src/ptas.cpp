#include "vpg/ptas.hpp"

#include <algorithm>
#include <sstream>

#include "vpg/caterpillar.hpp"
#include "vpg/errors.hpp"
#include "vpg/parallel.hpp"
#include "vpg/width.hpp"

namespace vpg {

namespace {

void require_origin(const GridRep& r) {
  std::int64_t lo = 0;
  bool first = true;
  for (const auto& p : r.paths()) {
    const auto h = horizontal_part(p);
    lo = first ? h.x_min : std::min(lo, h.x_min);
    first = false;
  }
  if (!first && lo != 0) throw PreconditionError("representation must start at column 0");
}

template <typename Member>
std::vector<VertexSet> column_sets(const GridRep& r, Member member) {
  require_origin(r);
  const auto m = column_count(r);
  std::vector<VertexSet> out(static_cast<std::size_t>(m), VertexSet(r.size()));
  for (std::size_t v = 0; v < r.size(); ++v) {
    const auto h = horizontal_part(r.path(v));
    for (std::int64_t i = h.x_min; i <= h.x_max; ++i) {
      if (member(h, i)) out[static_cast<std::size_t>(i)].set(v);
    }
  }
  return out;
}

const VertexSet& at_or_empty(const std::vector<VertexSet>& sets, std::int64_t i, const VertexSet& empty) {
  if (i < 0 || i >= static_cast<std::int64_t>(sets.size())) return empty;
  return sets[static_cast<std::size_t>(i)];
}

std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

struct Component {
  std::vector<std::size_t> members;  // indices into the full graph
  GridRep rep;                       // translated to column 0
  Graph graph;
};

std::vector<Component> split_components(const GridRep& r, const Graph& g) {
  std::vector<Component> out;
  for (auto& members : connected_components(g)) {
    GridRep sub = translate_to_origin_column(induced_subrepresentation(r, std::span<const std::size_t>(members)));
    Graph gs = g.induced(members);
    out.push_back({std::move(members), std::move(sub), std::move(gs)});
  }
  return out;
}

struct Limits {
  std::int64_t c = 1;
  int t = 1;
};

Limits resolve_limits(const GridRep& r, const PtasOptions& options) {
  std::int64_t measured_c = 0;
  for (const auto& p : r.paths()) measured_c = std::max(measured_c, horizontal_part(p).length());
  const int measured_t = grid_edge_load(r).max_load;
  Limits out{std::max<std::int64_t>(1, measured_c), std::max(1, measured_t)};
  if (options.c) {
    if (*options.c < 1) throw PreconditionError("c must be at least 1");
    if (measured_c > *options.c) {
      throw PreconditionError("horizontal part " + std::to_string(measured_c) + " > " + std::to_string(*options.c));
    }
    out.c = *options.c;
  }
  if (options.t) {
    if (measured_t > *options.t) {
      throw PreconditionError("grid-edge load " + std::to_string(measured_t) + " > " + std::to_string(*options.t));
    }
    out.t = std::max(1, *options.t);
  }
  return out;
}

std::size_t cliques_added(const Window& w) {
  return (w.exterior_left.count() > 1 ? 1 : 0) + (w.exterior_right.count() > 1 ? 1 : 0);
}

Solution finish(const Graph& g, Problem kind, VertexSet chosen) {
  Solution s = make_solution(g, kind, std::move(chosen));
  if (!s.verified) throw InvariantError("approximate " + to_string(kind) + " solution failed verification");
  return s;
}

}  // namespace

std::vector<VertexSet> compute_x_sets(const GridRep& r) {
  return column_sets(r, [](const HorizontalPart& h, std::int64_t i) { return i + 1 <= h.x_max; });
}

std::vector<VertexSet> compute_v_sets(const GridRep& r) {
  auto v = column_sets(r, [](const HorizontalPart&, std::int64_t) { return true; });
  const auto x = compute_x_sets(r);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!x[i].is_subset_of(v[i]) || (i + 1 < v.size() && !x[i].is_subset_of(v[i + 1]))) {
      throw InvariantError("X_" + std::to_string(i) + " not inside V_i and V_i+1");
    }
  }
  return v;
}

ShiftConfigIS make_is_config(const Rational& epsilon, std::int64_t c) {
  if (epsilon <= Rational(0) || epsilon >= Rational(1)) throw PreconditionError("epsilon must lie in (0,1)");
  if (c < 1) throw PreconditionError("c must be at least 1");
  return {epsilon, c, ceil(Rational(1) / epsilon)};
}

ShiftConfigDS make_ds_config(const Rational& epsilon, std::int64_t c) {
  if (epsilon <= Rational(0) || epsilon >= Rational(1)) throw PreconditionError("epsilon must lie in (0,1)");
  if (c < 1) throw PreconditionError("c must be at least 1");
  ShiftConfigDS cfg{epsilon, c, ceil(Rational(c) * (Rational(2) / epsilon - Rational(1)))};
  if (cfg.k <= c) throw InvariantError("k must exceed c");
  return cfg;
}

std::int64_t ShiftConfigDS::last_window(std::int64_t m, std::int64_t s) const {
  return ceil_div(m - s - c, k + c);
}

std::vector<Window> build_windows(const std::vector<VertexSet>& x, const std::vector<VertexSet>& v,
                                  const ShiftConfigDS& cfg, std::int64_t s) {
  const auto m = static_cast<std::int64_t>(v.size());
  if (!cfg.needs_windows(m)) throw PreconditionError("too few columns for windows; solve exactly");
  if (s < 0 || s >= cfg.shifts()) throw PreconditionError("shift out of range");
  const std::size_t n = v.front().universe();
  const VertexSet none(n);
  const std::int64_t k = cfg.k, c = cfg.c, r = cfg.last_window(m, s);
  auto columns = [&](std::int64_t from, std::int64_t to) {
    VertexSet out(n);
    for (std::int64_t j = std::max<std::int64_t>(0, from); j <= std::min(to, m - 1); ++j) out |= v[j];
    return out;
  };
  std::vector<Window> out;
  for (std::int64_t i = 0; i <= r; ++i) {
    Window w;
    w.index = i;
    w.boundary = i == 0 || i == r;
    if (i == 0) {
      w.vertices = columns(0, s + c - 1);
      w.exterior_left = none;
      w.exterior_right = at_or_empty(x, s + c - 1, none);
    } else {
      const std::int64_t base = (i - 1) * (k + c) + s;
      w.vertices = i == r ? columns(base, m - 1) : columns(base, base + k + 2 * c - 1);
      w.exterior_left = at_or_empty(x, base - 1, none);
      w.exterior_right = i == r ? none : at_or_empty(x, i * (k + c) + s + c - 1, none);
    }
    // X_{m-1} is empty by definition.
    if (i == 0 && s + c - 1 >= m - 1) w.exterior_right = none;
    w.interior = w.vertices - w.exterior_left - w.exterior_right;
    out.push_back(std::move(w));
  }
  return out;
}

void check_windows(const std::vector<Window>& windows, const std::vector<VertexSet>& v, const ShiftConfigDS& cfg,
                   std::int64_t s) {
  if (windows.empty()) return;
  const std::size_t n = windows.front().vertices.universe();
  VertexSet covered(n);
  for (const auto& w : windows) covered |= w.interior;
  if (covered.count() != n) {
    throw InvariantError("shift " + std::to_string(s) + ": vertex " + std::to_string(covered.complement().first()) +
                         " is interior to no window");
  }
  for (std::size_t i = 0; i < windows.size(); ++i) {
    for (std::size_t j = i + 2; j < windows.size(); ++j) {
      if (windows[i].vertices.intersects(windows[j].vertices)) {
        throw InvariantError("shift " + std::to_string(s) + ": windows " + std::to_string(i) + " and " +
                             std::to_string(j) + " overlap");
      }
    }
    if (i + 1 < windows.size()) {
      VertexSet shared(n);
      const std::int64_t from = static_cast<std::int64_t>(i) * (cfg.k + cfg.c) + s;
      for (std::int64_t l = 0; l < cfg.c; ++l) {
        if (from + l < static_cast<std::int64_t>(v.size())) shared |= v[static_cast<std::size_t>(from + l)];
      }
      if ((windows[i].vertices & windows[i + 1].vertices) != shared) {
        throw InvariantError("shift " + std::to_string(s) + ": windows " + std::to_string(i) + " and " +
                             std::to_string(i + 1) + " do not meet in their shared columns");
      }
    }
  }
}

std::vector<WindowVariant> window_variants(const Graph& g, const Window& w) {
  auto make = [&](std::string name, const VertexSet& keep, std::initializer_list<const VertexSet*> cliques) {
    WindowVariant out{std::move(name), keep.members(), {}};
    out.graph = g.induced(out.vertices);
    for (const VertexSet* clique : cliques) {
      VertexSet local(out.vertices.size());
      for (std::size_t i = 0; i < out.vertices.size(); ++i) {
        if (clique->test(out.vertices[i])) local.set(i);
      }
      out.graph = clique_augment(out.graph, local);
    }
    return out;
  };
  std::vector<WindowVariant> out;
  out.push_back(make("I", w.interior, {}));
  if (!w.boundary) {
    out.push_back(make("L", w.interior | w.exterior_left, {&w.exterior_left}));
    out.push_back(make("R", w.interior | w.exterior_right, {&w.exterior_right}));
  }
  out.push_back(make("LR", w.vertices, {&w.exterior_left, &w.exterior_right}));
  return out;
}

WindowSolve solve_window(const GridRep& r, const Graph& g, const Window& w, const SolveOptions& options) {
  const auto members = w.vertices.members();
  const Decomposition dec =
      decompose(translate_to_origin_column(induced_subrepresentation(r, std::span<const std::size_t>(members))));
  const auto& order = *dec.bd.linear_order();
  WindowSolve best;
  best.width = decomposition_mm_width(dec.graph, dec.bd) + cliques_added(w);

  const auto variants = window_variants(g, w);
  for (std::size_t vi = 0; vi < variants.size(); ++vi) {
    const auto& var = variants[vi];
    std::vector<std::size_t> local(g.size(), g.size());
    for (std::size_t i = 0; i < var.vertices.size(); ++i) local[var.vertices[i]] = i;
    std::vector<std::size_t> restricted;
    for (auto o : order) {
      if (local[members[o]] < g.size()) restricted.push_back(local[members[o]]);
    }
    const Solution sol = solve_ds_bd(var.graph, BranchDecomposition::caterpillar(std::move(restricted)), options);
    if (vi == 0 || sol.value < best.chosen.count()) {
      VertexSet chosen(g.size());
      sol.vertices.for_each([&](std::size_t i) { chosen.set(var.vertices[i]); });
      best.chosen = std::move(chosen);
      best.variant = vi;
    }
  }
  return best;
}

PtasResult baker_is(const GridRep& r, const Rational& epsilon, const PtasOptions& options) {
  const Limits lim = resolve_limits(r, options);
  const ShiftConfigIS cfg = make_is_config(epsilon, lim.c);
  PtasResult result;
  result.graph = intersection_graph(r);
  result.k = cfg.k;
  result.c = cfg.c;
  result.t = lim.t;
  result.width_budget = static_cast<std::size_t>(3 * lim.t * (cfg.period() + 1));

  VertexSet chosen = result.graph.empty_set();
  const auto components = split_components(r, result.graph);
  for (std::size_t ci = 0; ci < components.size(); ++ci) {
    const Component& comp = components[ci];
    const auto x = compute_x_sets(comp.rep);
    const auto period = static_cast<std::size_t>(cfg.period());
    std::vector<VertexSet> picks(period);
    std::vector<ShiftDiagnostic> rows(period);

    parallel_for(period, options.jobs, [&](std::size_t d) {
      VertexSet removed(comp.rep.size());
      for (std::size_t i = d; i < x.size(); i += period) removed |= x[i];
      const auto keep = removed.complement().members();
      VertexSet pick(comp.rep.size());
      ShiftDiagnostic row{ci, d, 0, 0, 0};
      for (const auto& part : connected_components(comp.graph.induced(keep))) {
        std::vector<std::size_t> slice;
        for (auto p : part) slice.push_back(keep[p]);
        const GridRep rep =
            translate_to_origin_column(induced_subrepresentation(comp.rep, std::span<const std::size_t>(slice)));
        if (column_count(rep) > cfg.period()) throw InvariantError("slice wider than kc columns");
        const Decomposition dec = decompose(rep);
        const std::size_t width = decomposition_mm_width(dec.graph, dec.bd);
        if (width > result.width_budget) {
          throw BudgetError("slice width " + std::to_string(width) + " exceeds budget " +
                            std::to_string(result.width_budget));
        }
        const Solution sol = solve_is_bd(dec.graph, dec.bd, options.solve);
        sol.vertices.for_each([&](std::size_t i) { pick.set(slice[i]); });
        ++row.parts;
        row.max_width = std::max(row.max_width, width);
      }
      row.value = pick.count();
      picks[d] = std::move(pick);
      rows[d] = row;
    });

    std::size_t best = 0;
    for (std::size_t d = 1; d < period; ++d) {
      if (rows[d].value > rows[best].value) best = d;
    }
    picks[best].for_each([&](std::size_t i) { chosen.set(comp.members[i]); });
    result.diagnostics.insert(result.diagnostics.end(), rows.begin(), rows.end());
  }
  result.solution = finish(result.graph, Problem::IS, std::move(chosen));
  return result;
}

PtasResult baker_ds(const GridRep& r, const Rational& epsilon, const PtasOptions& options) {
  const Limits lim = resolve_limits(r, options);
  const ShiftConfigDS cfg = make_ds_config(epsilon, lim.c);
  PtasResult result;
  result.graph = intersection_graph(r);
  result.k = cfg.k;
  result.c = cfg.c;
  result.t = lim.t;
  result.width_budget = static_cast<std::size_t>(3 * lim.t * (cfg.k + 4 * cfg.c + 1) + 2);

  VertexSet chosen = result.graph.empty_set();
  const auto components = split_components(r, result.graph);
  for (std::size_t ci = 0; ci < components.size(); ++ci) {
    const Component& comp = components[ci];
    const auto m = column_count(comp.rep);
    if (!cfg.needs_windows(m)) {
      const Decomposition dec = decompose(comp.rep);
      const std::size_t width = decomposition_mm_width(dec.graph, dec.bd);
      if (width > result.width_budget) {
        throw BudgetError("component width " + std::to_string(width) + " exceeds budget " +
                          std::to_string(result.width_budget));
      }
      const Solution sol = solve_ds_bd(dec.graph, dec.bd, options.solve);
      sol.vertices.for_each([&](std::size_t i) { chosen.set(comp.members[i]); });
      result.diagnostics.push_back({ci, 0, 1, width, sol.value});
      continue;
    }

    const auto x = compute_x_sets(comp.rep);
    const auto v = compute_v_sets(comp.rep);
    const auto shifts = static_cast<std::size_t>(cfg.shifts());
    std::vector<VertexSet> picks(shifts);
    std::vector<ShiftDiagnostic> rows(shifts);
    parallel_for(shifts, options.jobs, [&](std::size_t s) {
      const auto windows = build_windows(x, v, cfg, static_cast<std::int64_t>(s));
      check_windows(windows, v, cfg, static_cast<std::int64_t>(s));
      VertexSet pick(comp.rep.size());
      ShiftDiagnostic row{ci, s, windows.size(), 0, 0};
      for (const auto& w : windows) {
        const WindowSolve ws = solve_window(comp.rep, comp.graph, w, options.solve);
        if (ws.width > result.width_budget) {
          throw BudgetError("window width " + std::to_string(ws.width) + " exceeds budget " +
                            std::to_string(result.width_budget));
        }
        if (!w.interior.is_subset_of(comp.graph.neighborhood(ws.chosen) | ws.chosen)) {
          throw InvariantError("window " + std::to_string(w.index) + " leaves an interior vertex undominated");
        }
        pick |= ws.chosen;
        row.max_width = std::max(row.max_width, ws.width);
      }
      row.value = pick.count();
      picks[s] = std::move(pick);
      rows[s] = row;
    });

    std::size_t best = 0;
    for (std::size_t s = 1; s < shifts; ++s) {
      if (rows[s].value < rows[best].value) best = s;
    }
    picks[best].for_each([&](std::size_t i) { chosen.set(comp.members[i]); });
    result.diagnostics.insert(result.diagnostics.end(), rows.begin(), rows.end());
  }
  result.solution = finish(result.graph, Problem::DS, std::move(chosen));
  return result;
}

std::string diagnostics_csv(const std::vector<ShiftDiagnostic>& rows) {
  std::ostringstream os;
  os << "component,shift,parts,max_width,value\n";
  for (const auto& d : rows) {
    os << d.component << ',' << d.shift << ',' << d.parts << ',' << d.max_width << ',' << d.value << '\n';
  }
  return os.str();
}

}  // namespace vpg
