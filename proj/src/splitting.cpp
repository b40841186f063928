#include "vpg/splitting.hpp"

#include <algorithm>
#include <sstream>

#include "vpg/errors.hpp"
#include "vpg/graph.hpp"

namespace vpg {

namespace {

struct Target {
  std::size_t index;
  std::int64_t lo, hi, y;
  int degree;
  std::int64_t contact = 0;  // interior contact x for degree 3
};

Target locate(const GridRep& r, const std::string& v) {
  const auto idx = r.index_of(v);
  if (!idx) throw UnknownVertexError(v);
  const auto& p = r.path(*idx);
  if (!p.is_horizontal()) throw PreconditionError("path " + v + " is not horizontal");
  const Graph g = intersection_graph(r);
  const auto degree = static_cast<int>(g.degree(*idx));
  if (degree < 2 || degree > 3) {
    throw PreconditionError("vertex " + v + " has degree " + std::to_string(degree) + ", expected 2 or 3");
  }
  Target t{*idx, std::min(p.front().x, p.back().x), std::max(p.front().x, p.back().x), p.front().y, degree};
  if (degree == 3) {
    const auto index = build_intersection_index(r);
    bool found = false;
    g.neighbors(*idx).for_each([&](std::size_t u) {
      const auto* e = index.find(*idx, u);
      if (e->first.x > t.lo && e->first.x < t.hi) {
        t.contact = e->first.x;
        found = true;
      }
    });
    if (!found) throw PreconditionError("vertex " + v + " has no interior contact");
  }
  return t;
}

// Consecutive pieces starting at x; lengths in left-to-right order.
void lay(std::vector<std::int64_t>& cuts, const std::vector<std::int64_t>& lengths) {
  for (auto l : lengths) cuts.push_back(cuts.back() + l);
}

std::vector<std::int64_t> units(std::int64_t count) { return std::vector<std::int64_t>(count, 1); }

std::vector<std::int64_t> concat(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

GridRep replace(const GridRep& r, const Target& t, const std::vector<std::int64_t>& lengths) {
  std::vector<std::int64_t> cuts{t.lo};
  lay(cuts, lengths);
  if (cuts.back() != t.hi) throw InvariantError("split pieces do not cover the path");
  const std::string& id = r.path(t.index).id();
  const std::size_t width = std::max<std::size_t>(2, std::to_string(lengths.size()).size());
  std::vector<GridPath> paths;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (i != t.index) paths.push_back(r.path(i));
  }
  for (std::size_t i = 0; i < lengths.size(); ++i) {
    std::string n = std::to_string(i + 1);
    paths.emplace_back(id + ".s" + std::string(width - n.size(), '0') + n,
                       std::vector<GridPoint>{{cuts[i], t.y}, {cuts[i + 1], t.y}});
  }
  return GridRep(r.grid_step(), r.flavor(), std::move(paths));
}

std::int64_t checked_length(std::int64_t l, std::int64_t least, const std::string& v) {
  if (l < least) {
    throw PreconditionError("path " + v + " too short to split (" + std::to_string(l) + " < " +
                            std::to_string(least) + ")");
  }
  return l;
}

}  // namespace

std::pair<GridRep, SplitReport> split_vertex_is(const GridRep& r, const std::string& v) {
  const Target t = locate(r, v);
  SplitReport rep{v, Problem::IS, 0, 0, t.degree, 0, 0};
  std::vector<std::int64_t> lengths;
  if (t.degree == 2) {
    const auto l = checked_length(t.hi - t.lo, 5, v);
    rep.q = (l - 5) / 2;
    lengths = concat(units(2 * rep.q + 4), {(l - 5) % 2 + 1});
  } else {
    const auto l1 = checked_length(t.contact - 1 - t.lo, 4, v);
    const auto l3 = checked_length(t.hi - t.contact - 1, 4, v);
    rep.q = (l1 - 4) / 2;
    rep.q_prime = (l3 - 4) / 2;
    lengths = concat(units(2 * rep.q + 3), {(l1 - 4) % 2 + 1, 2});
    lengths = concat(lengths, units(2 * rep.q_prime + 3));
    lengths.push_back((l3 - 4) % 2 + 1);
  }
  rep.new_vertex_count = 2 * rep.q + 2 * rep.q_prime + 4 * t.degree - 3;
  rep.predicted_delta = rep.q + rep.q_prime + 2 * (t.degree - 1);
  if (static_cast<std::int64_t>(lengths.size()) != rep.new_vertex_count) {
    throw InvariantError("split produced an unexpected number of paths");
  }
  return {replace(r, t, lengths), rep};
}

std::pair<GridRep, SplitReport> split_vertex_ds(const GridRep& r, const std::string& v) {
  const Target t = locate(r, v);
  SplitReport rep{v, Problem::DS, 0, 0, t.degree, 0, 0};
  auto arm = [](std::int64_t q, std::int64_t rest, std::int64_t singles) {
    return concat(units(3 * q + singles), {1 + rest / 2, 1 + (rest + 1) / 2});
  };
  std::vector<std::int64_t> lengths;
  if (t.degree == 2) {
    const auto l = checked_length(t.hi - t.lo, 4, v);
    rep.q = (l - 4) / 3;
    lengths = arm(rep.q, (l - 4) % 3, 2);
  } else {
    const auto l1 = checked_length(t.contact - 1 - t.lo, 3, v);
    const auto l3 = checked_length(t.hi - t.contact - 1, 3, v);
    rep.q = (l1 - 3) / 3;
    rep.q_prime = (l3 - 3) / 3;
    lengths = concat(arm(rep.q, (l1 - 3) % 3, 1), {2});
    lengths = concat(lengths, arm(rep.q_prime, (l3 - 3) % 3, 1));
  }
  rep.new_vertex_count = 3 * (rep.q + rep.q_prime + t.degree) - 2;
  rep.predicted_delta = rep.q + rep.q_prime + t.degree - 1;
  if (static_cast<std::int64_t>(lengths.size()) != rep.new_vertex_count) {
    throw InvariantError("split produced an unexpected number of paths");
  }
  return {replace(r, t, lengths), rep};
}

Reduction reduce_full(const GridRep& r, Problem problem) {
  const Graph g = intersection_graph(r);
  std::vector<std::string> targets;
  for (std::size_t i = 0; i < r.size(); ++i) {
    if (r.path(i).is_horizontal() && g.degree(i) >= 2) targets.push_back(r.path(i).id());
  }
  Reduction out{r, 0, {}};
  for (const auto& v : targets) {
    auto [next, report] = problem == Problem::IS ? split_vertex_is(out.rep, v) : split_vertex_ds(out.rep, v);
    out.rep = std::move(next);
    out.offset += report.predicted_delta;
    out.splits.push_back(std::move(report));
  }
  return out;
}

std::string splits_csv(const std::vector<SplitReport>& splits) {
  std::ostringstream os;
  os << "vertex,q,q_prime,degree,delta\n";
  for (const auto& s : splits) {
    os << s.vertex << ',' << s.q << ',' << s.q_prime << ',' << s.degree << ',' << s.predicted_delta << '\n';
  }
  return os.str();
}

}  // namespace vpg
