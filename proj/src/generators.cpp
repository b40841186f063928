#include "vpg/generators.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "vpg/errors.hpp"
#include "vpg/graph.hpp"

namespace vpg {

SeededRng::SeededRng(std::uint64_t seed) : engine_(seed) {}

std::int64_t SeededRng::between(std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Rejection keeps the draw exactly uniform.
  const std::uint64_t limit = span == 0 ? 0 : (~std::uint64_t{0} / span) * span;
  std::uint64_t x = next();
  while (limit && x >= limit) x = next();
  return lo + static_cast<std::int64_t>(span == 0 ? x : x % span);
}

bool SeededRng::coin() { return next() >> 63; }

std::string vertex_id(std::size_t i, std::size_t n) {
  const std::size_t width = std::max<std::size_t>(3, std::to_string(n == 0 ? 0 : n - 1).size());
  std::string digits = std::to_string(i);
  return "v" + std::string(width > digits.size() ? width - digits.size() : 0, '0') + digits;
}

namespace {

struct EdgeKey {
  GridPoint a;
  bool horizontal;
  friend bool operator==(const EdgeKey&, const EdgeKey&) = default;
};

struct EdgeKeyHash {
  std::size_t operator()(const EdgeKey& e) const noexcept {
    return GridPointHash{}(e.a) * 2 + (e.horizontal ? 1 : 0);
  }
};

std::vector<EdgeKey> unit_edges(const std::vector<GridPoint>& trace) {
  std::vector<EdgeKey> out;
  for (std::size_t i = 0; i + 1 < trace.size(); ++i) {
    const GridPoint a = std::min(trace[i], trace[i + 1]);
    out.push_back({a, trace[i].y == trace[i + 1].y});
  }
  std::sort(out.begin(), out.end(), [](const EdgeKey& x, const EdgeKey& y) {
    return std::tie(x.a, x.horizontal) < std::tie(y.a, y.horizontal);
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

}  // namespace

GridRep gen_random_vpg(const RandomVpgParams& p) {
  if (p.n == 0) return GridRep(Rational(1), Flavor::VPG, {});
  if (p.columns < 1 || p.max_horizontal < 0 || p.max_load < 1) {
    throw PreconditionError("random generator needs columns >= 1, c >= 0, t >= 1");
  }
  const std::int64_t columns = p.columns;
  const std::int64_t rows =
      p.rows > 0 ? p.rows
                 : std::max<std::int64_t>(2, (2 * static_cast<std::int64_t>(p.n) + columns - 1) / columns);
  const std::int64_t reach = std::min(p.max_horizontal, columns - 1);
  SeededRng rng(p.seed);
  std::unordered_map<EdgeKey, int, EdgeKeyHash> load;
  std::vector<GridPath> paths;

  for (std::size_t i = 0; i < p.n; ++i) {
    bool placed = false;
    for (std::size_t attempt = 0; attempt < p.attempts_per_path && !placed; ++attempt) {
      const std::int64_t x_lo = rng.between(0, columns - 1 - reach);
      const std::int64_t x_hi = x_lo + reach;
      GridPoint cur{rng.between(x_lo, x_hi), rng.between(0, rows - 1)};
      std::vector<GridPoint> pts{cur};
      const auto bends = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(p.max_bends)));
      bool horizontal = reach > 0 && rng.coin();
      for (std::size_t s = 0; s <= bends; ++s) {
        GridPoint next = cur;
        if (horizontal) {
          if (reach == 0) break;
          next.x = rng.between(x_lo, x_hi - 1);
          if (next.x >= cur.x) ++next.x;
        } else {
          const std::int64_t lo = std::max<std::int64_t>(0, cur.y - p.max_vertical);
          const std::int64_t hi = std::min<std::int64_t>(rows - 1, cur.y + p.max_vertical);
          if (lo == hi) break;
          next.y = rng.between(lo, hi - 1);
          if (next.y >= cur.y) ++next.y;
        }
        pts.push_back(next);
        cur = next;
        horizontal = !horizontal;
      }
      if (pts.size() < 2) continue;
      GridPath candidate(vertex_id(i, p.n), pts);
      const auto trace = path_points(candidate);
      std::unordered_set<GridPoint, GridPointHash> seen(trace.begin(), trace.end());
      if (seen.size() != trace.size()) continue;
      const auto edges = unit_edges(trace);
      bool fits = true;
      for (const auto& e : edges) {
        auto it = load.find(e);
        if (it != load.end() && it->second >= p.max_load) {
          fits = false;
          break;
        }
      }
      if (!fits) continue;
      for (const auto& e : edges) ++load[e];
      paths.push_back(std::move(candidate));
      placed = true;
    }
    if (!placed) {
      throw BudgetError("could not place path " + std::to_string(i) + " within " +
                        std::to_string(p.attempts_per_path) + " attempts");
    }
  }
  return GridRep(Rational(1), Flavor::VPG, std::move(paths));
}

GridRep gen_b0cpg_subcubic(std::size_t n, std::uint64_t seed, std::size_t attempts) {
  if (n == 0) return GridRep(Rational(1), Flavor::CPG, {});
  if (attempts == 0) attempts = 2000 * n;
  SeededRng rng(seed);

  struct Seg {
    GridPoint a, b;  // a < b, axis-parallel
  };
  std::vector<Seg> segs;
  std::map<GridPoint, std::vector<std::size_t>> at;  // grid-point -> segments through it
  std::set<std::pair<GridPoint, bool>> used_edges;
  std::vector<std::set<std::size_t>> adj;

  auto points_of = [](const Seg& s) {
    std::vector<GridPoint> out;
    const bool horizontal = s.a.y == s.b.y;
    for (GridPoint q = s.a;; horizontal ? ++q.x : ++q.y) {
      out.push_back(q);
      if (q == s.b) break;
    }
    return out;
  };
  auto add = [&](const Seg& s, const std::set<std::size_t>& touching) {
    const std::size_t id = segs.size();
    segs.push_back(s);
    adj.emplace_back(touching);
    for (auto o : touching) adj[o].insert(id);
    const auto pts = points_of(s);
    for (const auto& q : pts) at[q].push_back(id);
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) used_edges.insert({pts[i], s.a.y == s.b.y});
  };

  {
    const bool horizontal = rng.coin();
    const std::int64_t len = rng.between(1, 4);
    add(horizontal ? Seg{{0, 0}, {len, 0}} : Seg{{0, 0}, {0, len}}, {});
  }
  std::size_t tries = 0;
  while (segs.size() < n) {
    if (++tries > attempts) throw BudgetError("subcubic generator stalled");
    const auto host = static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(segs.size()) - 1));
    if (adj[host].size() >= 3) continue;
    const auto host_pts = points_of(segs[host]);
    const GridPoint start = host_pts[static_cast<std::size_t>(rng.between(0, static_cast<std::int64_t>(host_pts.size()) - 1))];
    static constexpr int kDx[4] = {-1, 0, 1, 0};
    static constexpr int kDy[4] = {0, 1, 0, -1};
    const auto dir = static_cast<std::size_t>(rng.between(0, 3));
    const std::int64_t len = rng.between(1, 4);
    const GridPoint end{start.x + kDx[dir] * len, start.y + kDy[dir] * len};
    const Seg s{std::min(start, end), std::max(start, end)};
    const bool horizontal = s.a.y == s.b.y;
    const auto pts = points_of(s);

    bool ok = true;
    for (std::size_t i = 0; i + 1 < pts.size() && ok; ++i) ok = !used_edges.count({pts[i], horizontal});
    if (!ok) continue;
    std::set<std::size_t> touching;
    for (const auto& q : pts) {
      auto it = at.find(q);
      if (it == at.end()) continue;
      const bool my_end = q == s.a || q == s.b;
      for (auto o : it->second) {
        const bool their_end = q == segs[o].a || q == segs[o].b;
        // Contact only: the shared point ends at least one of the two.
        if (!my_end && !their_end) ok = false;
        if (touching.count(o)) ok = false;  // would touch twice
        touching.insert(o);
      }
      if (it->second.size() > 1) ok = false;  // three paths at one point form a triangle
    }
    if (!ok || touching.size() > 3) continue;
    for (auto o : touching) {
      if (adj[o].size() >= 3) ok = false;
      for (auto w : touching) {
        if (w != o && adj[o].count(w)) ok = false;  // triangle
      }
    }
    if (!ok) continue;
    add(s, touching);
  }

  std::vector<GridPath> paths;
  for (std::size_t i = 0; i < segs.size(); ++i) {
    paths.emplace_back(vertex_id(i, n), std::vector<GridPoint>{segs[i].a, segs[i].b});
  }
  return GridRep(Rational(1), Flavor::CPG, std::move(paths));
}

GridRep gen_split_graph_rep(const SplitGraphSpec& spec) {
  std::set<std::string> clique(spec.clique.begin(), spec.clique.end());
  std::set<std::string> independent(spec.independent.begin(), spec.independent.end());
  if (clique.size() != spec.clique.size() || independent.size() != spec.independent.size()) {
    throw PreconditionError("split graph: duplicate vertex id");
  }
  for (const auto& id : clique) {
    if (independent.count(id)) throw PreconditionError("split graph: '" + id + "' is on both sides");
  }
  std::map<std::string, std::int64_t> row;  // independent id -> row
  {
    std::int64_t j = 0;
    for (const auto& id : independent) row[id] = 4 * j++ + 2;
  }
  std::map<std::string, std::set<std::int64_t>> touched;  // clique id -> rows of its neighbours
  for (const auto& [i, c] : spec.edges) {
    if (!independent.count(i)) throw PreconditionError("split graph: '" + i + "' is not independent");
    if (!clique.count(c)) throw PreconditionError("split graph: '" + c + "' is not in the clique");
    touched[c].insert(row[i]);
  }
  const std::int64_t top = independent.empty() ? 4 : 4 * static_cast<std::int64_t>(independent.size() - 1) + 6;

  std::vector<GridPath> paths;
  for (const auto& [id, y] : row) paths.emplace_back(id, std::vector<GridPoint>{{0, y}, {1, y}});
  for (const auto& id : clique) {
    std::vector<GridPoint> pts{{3, top}, {3, top - 1}};
    auto it = touched.find(id);
    if (it != touched.end()) {
      pts.push_back({2, top - 1});
      for (auto r = it->second.rbegin(); r != it->second.rend(); ++r) {
        const std::int64_t y = *r;
        pts.push_back({2, y + 1});
        pts.push_back({1, y + 1});
        pts.push_back({1, y - 1});
        pts.push_back({2, y - 1});
      }
    }
    paths.emplace_back(id, std::move(pts));
  }
  return GridRep(Rational(1), Flavor::VPG, std::move(paths));
}

SplitGraphSpec random_split_graph(std::size_t n, std::uint64_t seed) {
  SeededRng rng(seed);
  SplitGraphSpec spec;
  for (std::size_t i = 0; i < n; ++i) {
    (rng.coin() ? spec.clique : spec.independent).push_back(vertex_id(i, n));
  }
  for (const auto& i : spec.independent) {
    for (const auto& c : spec.clique) {
      if (rng.coin()) spec.edges.emplace_back(i, c);
    }
  }
  return spec;
}

}  // namespace vpg
