#include "vpg/width.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "vpg/errors.hpp"
#include "vpg/parallel.hpp"

namespace vpg {

namespace {

std::vector<std::vector<CrossEdge>> caterpillar_crossings(const Graph& g,
                                                           const std::vector<std::size_t>& order) {
  const std::size_t n = order.size();
  std::vector<std::vector<CrossEdge>> out;
  out.reserve(2 * n);
  std::set<CrossEdge> live;
  VertexSet prefix(g.size());
  for (std::size_t i = 0; i + 1 < n; ++i) {
    const std::size_t v = order[i];
    (g.neighbors(v) & prefix).for_each([&](std::size_t u) { live.erase({u, v}); });
    prefix.set(v);
    (g.neighbors(v) - prefix).for_each([&](std::size_t w) { live.insert({v, w}); });
    out.emplace_back(live.begin(), live.end());
  }
  for (std::size_t i = 1; i + 1 < n; ++i) {
    const std::size_t v = order[i];
    std::vector<CrossEdge> star;
    g.neighbors(v).for_each([&](std::size_t u) { star.emplace_back(u, v); });
    out.push_back(std::move(star));
  }
  return out;
}

}  // namespace

WidthReport evaluate_widths(const Graph& g, const BranchDecomposition& bd, const WidthOptions& options) {
  if (bd.vertex_count() != g.size()) throw PreconditionError("decomposition does not match graph");
  std::vector<std::vector<CrossEdge>> crossings;
  std::vector<std::size_t> side_sizes;
  if (bd.linear_order()) {
    crossings = caterpillar_crossings(g, *bd.linear_order());
    const std::size_t n = g.size();
    for (std::size_t i = 0; i + 1 < n; ++i) side_sizes.push_back(i + 1);
    for (std::size_t i = 1; i + 1 < n; ++i) side_sizes.push_back(n - 1);
  } else {
    for (const auto& side : bd.edge_sides()) {
      crossings.push_back(crossing_edges(g, Cut(side)));
      side_sizes.push_back(side.count());
    }
  }

  WidthReport report;
  report.cuts.resize(crossings.size());
  parallel_for(crossings.size(), options.jobs, [&](std::size_t e) {
    CutWidth& c = report.cuts[e];
    c.edge = e;
    c.side_size = side_sizes[e];
    c.mm = max_matching_of(crossings[e]);
    if (options.induced) {
      c.mim = max_induced_matching_of(g, crossings[e], options.induced_budget);
      if (*c.mim > c.mm) throw InvariantError("induced matching exceeds matching");
    }
  });
  if (options.induced) report.mim_width = 0;
  for (const auto& c : report.cuts) {
    report.mm_width = std::max(report.mm_width, c.mm);
    if (c.mim) report.mim_width = std::max(*report.mim_width, *c.mim);
  }
  return report;
}

std::size_t decomposition_mm_width(const Graph& g, const BranchDecomposition& bd) {
  return evaluate_widths(g, bd, {.induced = false}).mm_width;
}

std::size_t decomposition_mim_width(const Graph& g, const BranchDecomposition& bd, std::size_t budget) {
  return *evaluate_widths(g, bd, {.induced = true, .induced_budget = budget}).mim_width;
}

Graph clique_augment(const Graph& g, const VertexSet& s) {
  Graph h = g;
  const auto members = s.members();
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = i + 1; j < members.size(); ++j) h.add_edge(members[i], members[j]);
  }
  return h;
}

Graph clique_augment(const Graph& g, const std::vector<std::string>& ids) {
  VertexSet s = g.empty_set();
  for (const auto& id : ids) {
    auto v = g.index_of(id);
    if (!v) throw UnknownVertexError(id);
    s.set(*v);
  }
  return clique_augment(g, s);
}

std::string width_csv(const BranchDecomposition& bd, const WidthReport& report) {
  std::ostringstream out;
  out << "edge,a,b,side_size,mm,mim\n";
  for (const auto& c : report.cuts) {
    const auto& [a, b] = bd.edges()[c.edge];
    out << c.edge << ',' << a << ',' << b << ',' << c.side_size << ',' << c.mm << ',';
    if (c.mim) out << *c.mim;
    out << '\n';
  }
  return out.str();
}

}  // namespace vpg
