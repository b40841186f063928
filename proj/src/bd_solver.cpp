#include "vpg/bd_solver.hpp"

#include <algorithm>
#include <limits>
#include <optional>
#include <unordered_map>
#include <vector>

#include "vpg/errors.hpp"

namespace vpg {

namespace {

struct Rooted {
  std::vector<std::size_t> post_order;
  std::vector<std::vector<std::size_t>> children;
};

Rooted root_tree(const BranchDecomposition& bd) {
  const std::size_t n = bd.node_count();
  std::size_t root = 0;
  while (!bd.leaf_vertex(root)) ++root;
  Rooted r;
  r.children.resize(n);
  std::vector<std::size_t> parent(n, n);
  std::vector<std::size_t> stack{root};
  parent[root] = root;
  std::vector<std::size_t> pre;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    pre.push_back(u);
    for (auto w : bd.neighbors(u)) {
      if (parent[w] == n) {
        parent[w] = u;
        r.children[u].push_back(w);
        stack.push_back(w);
      }
    }
  }
  r.post_order.assign(pre.rbegin(), pre.rend());
  return r;
}

// Walks the rooted tree bottom-up. Each node's table is the fold of its
// children's tables and, for leaves, the table of the leaf's vertex.
template <typename Table, typename Leaf, typename Merge>
Table fold_tree(const BranchDecomposition& bd, Leaf&& leaf, Merge&& merge) {
  const Rooted rooted = root_tree(bd);
  std::vector<std::optional<Table>> tables(bd.node_count());
  for (auto t : rooted.post_order) {
    std::optional<Table> acc;
    for (auto c : rooted.children[t]) {
      acc = acc ? merge(*acc, *tables[c]) : std::move(*tables[c]);
      tables[c].reset();
    }
    if (bd.leaf_vertex(t)) {
      Table own = leaf(*bd.leaf_vertex(t));
      acc = acc ? merge(*acc, own) : std::move(own);
    }
    tables[t] = std::move(acc);
  }
  return std::move(*tables[rooted.post_order.back()]);
}

struct Candidate {
  std::size_t size = 0;
  VertexSet set;
};

// ---- independent set ----

struct IsTable {
  VertexSet inside;
  std::unordered_map<VertexSet, Candidate, VertexSetHash> rows;
};

void offer_max(std::unordered_map<VertexSet, Candidate, VertexSetHash>& rows, VertexSet key,
               std::size_t size, const VertexSet& a, const VertexSet& b) {
  auto it = rows.find(key);
  if (it != rows.end()) {
    if (size < it->second.size) return;
    VertexSet u = a | b;
    if (size == it->second.size && !lex_less(u, it->second.set)) return;
    it->second = {size, std::move(u)};
    return;
  }
  rows.emplace(std::move(key), Candidate{size, a | b});
}

// ---- dominating set ----

constexpr std::size_t kUnset = std::numeric_limits<std::size_t>::max();

struct DsTable {
  VertexSet inside;
  std::vector<VertexSet> help;  // signatures inside `inside` of outside subsets
  std::unordered_map<VertexSet, std::size_t, VertexSetHash> help_id;
  std::vector<VertexSet> sigs;  // signatures outside `inside` of chosen subsets
  std::vector<Candidate> cells;  // sig-major, help-minor; size kUnset = infeasible

  Candidate& cell(std::size_t sig, std::size_t h) { return cells[sig * help.size() + h]; }
  const Candidate& cell(std::size_t sig, std::size_t h) const { return cells[sig * help.size() + h]; }
};

void index_help(DsTable& t) {
  for (std::size_t i = 0; i < t.help.size(); ++i) t.help_id.emplace(t.help[i], i);
}

void offer_min(Candidate& cell, std::size_t size, const VertexSet& a, const VertexSet& b) {
  if (size > cell.size) return;
  VertexSet u = a | b;
  if (size == cell.size && !lex_less(u, cell.set)) return;
  cell.size = size;
  cell.set = std::move(u);
}

std::size_t lookup(const std::unordered_map<VertexSet, std::size_t, VertexSetHash>& ids,
                   const VertexSet& key) {
  auto it = ids.find(key);
  if (it == ids.end()) throw InvariantError("help signature missing from child table");
  return it->second;
}

}  // namespace

Solution solve_is_bd(const Graph& g, const BranchDecomposition& bd, const SolveOptions& options,
                     SolveStats* stats) {
  if (bd.vertex_count() != g.size()) throw PreconditionError("decomposition does not match graph");
  if (g.size() == 0) return make_solution(g, Problem::IS, VertexSet(0));
  std::size_t widest = 0;
  auto note = [&](const IsTable& t) {
    widest = std::max(widest, t.rows.size());
    if (t.rows.size() > options.class_budget) {
      throw BudgetError("independent set table has " + std::to_string(t.rows.size()) +
                        " classes, budget " + std::to_string(options.class_budget));
    }
  };

  auto leaf = [&](std::size_t v) {
    IsTable t{g.empty_set(), {}};
    t.inside.set(v);
    VertexSet none = g.empty_set();
    VertexSet self = g.empty_set();
    self.set(v);
    offer_max(t.rows, g.empty_set(), 0, none, none);
    offer_max(t.rows, g.neighbors(v), 1, self, none);
    return t;
  };
  auto merge = [&](const IsTable& a, const IsTable& b) {
    IsTable t{a.inside | b.inside, {}};
    const VertexSet outside = t.inside.complement();
    for (const auto& [sig_a, ca] : a.rows) {
      for (const auto& [sig_b, cb] : b.rows) {
        if (sig_a.intersects(cb.set)) continue;
        offer_max(t.rows, (sig_a | sig_b) & outside, ca.size + cb.size, ca.set, cb.set);
      }
    }
    note(t);
    return t;
  };

  IsTable root = fold_tree<IsTable>(bd, leaf, merge);
  if (stats) stats->max_classes = widest;
  const Candidate& best = root.rows.at(g.empty_set());
  return make_solution(g, Problem::IS, best.set);
}

Solution solve_ds_bd(const Graph& g, const BranchDecomposition& bd, const SolveOptions& options,
                     SolveStats* stats) {
  if (bd.vertex_count() != g.size()) throw PreconditionError("decomposition does not match graph");
  if (g.size() == 0) return make_solution(g, Problem::DS, VertexSet(0));
  std::size_t widest = 0;
  std::size_t widest_help = 0;
  auto note = [&](const DsTable& t) {
    widest = std::max(widest, t.sigs.size());
    widest_help = std::max(widest_help, t.help.size());
    if (t.sigs.size() > options.class_budget) {
      throw BudgetError("dominating set table has " + std::to_string(t.sigs.size()) +
                        " classes, budget " + std::to_string(options.class_budget));
    }
  };

  auto leaf = [&](std::size_t v) {
    DsTable t;
    t.inside = g.empty_set();
    t.inside.set(v);
    t.help.push_back(g.empty_set());
    if (g.degree(v) > 0) t.help.push_back(t.inside);
    index_help(t);
    VertexSet none = g.empty_set();
    const Candidate unset{kUnset, {}};
    t.sigs.push_back(g.empty_set());
    if (g.degree(v) > 0) t.sigs.push_back(g.neighbors(v));
    t.cells.assign(t.sigs.size() * t.help.size(), unset);
    if (g.degree(v) > 0) offer_min(t.cell(0, 1), 0, none, none);
    for (std::size_t h = 0; h < t.help.size(); ++h) offer_min(t.cell(t.sigs.size() - 1, h), 1, t.inside, none);
    return t;
  };

  auto merge = [&](const DsTable& a, const DsTable& b) {
    DsTable t;
    t.inside = a.inside | b.inside;
    const VertexSet outside = t.inside.complement();
    t.help = neighbor_signatures(g, outside, t.inside, options.class_budget);
    index_help(t);
    widest_help = std::max(widest_help, t.help.size());

    std::unordered_map<VertexSet, std::size_t, VertexSetHash> sig_id;
    std::vector<std::vector<std::size_t>> pair_sig(a.sigs.size(),
                                                   std::vector<std::size_t>(b.sigs.size()));
    for (std::size_t i = 0; i < a.sigs.size(); ++i) {
      for (std::size_t j = 0; j < b.sigs.size(); ++j) {
        VertexSet key = (a.sigs[i] | b.sigs[j]) & outside;
        auto [it, fresh] = sig_id.try_emplace(std::move(key), t.sigs.size());
        if (fresh) t.sigs.push_back(it->first);
        pair_sig[i][j] = it->second;
      }
    }
    const std::size_t cells = t.sigs.size() * t.help.size();
    if (cells > options.cell_budget) {
      throw BudgetError("dominating set table needs " + std::to_string(cells) + " cells, budget " +
                        std::to_string(options.cell_budget));
    }
    t.cells.assign(cells, Candidate{kUnset, {}});

    // Help arriving at a single-vertex side is decided by one bit.
    auto single_help = [&](const DsTable& side, const std::vector<VertexSet>& other_sigs) {
      std::vector<std::size_t> ids;
      if (side.inside.count() != 1) return ids;
      const std::size_t v = side.inside.first();
      const std::size_t none = lookup(side.help_id, g.empty_set());
      auto it = side.help_id.find(side.inside);
      for (const auto& sig : other_sigs) ids.push_back(sig.test(v) && it != side.help_id.end() ? it->second : none);
      ids.push_back(none);
      ids.push_back(it == side.help_id.end() ? none : it->second);
      return ids;  // per other sig when h misses v, then the two bare answers
    };
    const auto single_a = single_help(a, b.sigs);
    const auto single_b = single_help(b, a.sigs);

    std::vector<std::size_t> help_a(b.sigs.size()), help_b(a.sigs.size());
    for (std::size_t k = 0; k < t.help.size(); ++k) {
      const VertexSet& h = t.help[k];
      if (!single_a.empty()) {
        const bool hit = h.test(a.inside.first());
        for (std::size_t j = 0; j < b.sigs.size(); ++j) help_a[j] = hit ? single_a.back() : single_a[j];
      } else {
        for (std::size_t j = 0; j < b.sigs.size(); ++j) {
          help_a[j] = lookup(a.help_id, (b.sigs[j] | h) & a.inside);
        }
      }
      if (!single_b.empty()) {
        const bool hit = h.test(b.inside.first());
        for (std::size_t i = 0; i < a.sigs.size(); ++i) help_b[i] = hit ? single_b.back() : single_b[i];
      } else {
        for (std::size_t i = 0; i < a.sigs.size(); ++i) {
          help_b[i] = lookup(b.help_id, (a.sigs[i] | h) & b.inside);
        }
      }
      for (std::size_t i = 0; i < a.sigs.size(); ++i) {
        const Candidate* row_a = &a.cell(i, 0);
        for (std::size_t j = 0; j < b.sigs.size(); ++j) {
          const Candidate& ca = row_a[help_a[j]];
          if (ca.size == kUnset) continue;
          const Candidate& cb = b.cell(j, help_b[i]);
          if (cb.size == kUnset) continue;
          offer_min(t.cell(pair_sig[i][j], k), ca.size + cb.size, ca.set, cb.set);
        }
      }
    }

    // Drop signatures that no help makes feasible.
    std::size_t kept = 0;
    for (std::size_t s = 0; s < t.sigs.size(); ++s) {
      const std::size_t width = t.help.size();
      const auto row = t.cells.begin() + static_cast<std::ptrdiff_t>(s * width);
      const bool live = std::any_of(row, row + static_cast<std::ptrdiff_t>(width),
                                    [](const Candidate& c) { return c.size != kUnset; });
      if (!live) continue;
      if (kept != s) {
        t.sigs[kept] = std::move(t.sigs[s]);
        std::move(row, row + static_cast<std::ptrdiff_t>(width),
                  t.cells.begin() + static_cast<std::ptrdiff_t>(kept * width));
      }
      ++kept;
    }
    t.sigs.resize(kept);
    t.cells.resize(kept * t.help.size());
    note(t);
    return t;
  };

  DsTable root = fold_tree<DsTable>(bd, leaf, merge);
  if (stats) {
    stats->max_classes = widest;
    stats->max_help_classes = widest_help;
  }
  if (root.sigs.size() != 1 || root.cell(0, 0).size == kUnset) {
    throw InvariantError("dominating set table has no feasible root entry");
  }
  return make_solution(g, Problem::DS, root.cell(0, 0).set);
}

}  // namespace vpg
