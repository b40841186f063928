#include "vpg/representation.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "vpg/errors.hpp"

namespace vpg {

namespace {

std::string point_str(const GridPoint& p) {
  return "(" + std::to_string(p.x) + "," + std::to_string(p.y) + ")";
}

std::string edge_str(const GridEdge& e) {
  return "[" + point_str(e.origin) + "-" + point_str(e.other()) + "]";
}

std::int64_t sign(std::int64_t v) { return (v > 0) - (v < 0); }

template <typename F>
void for_each_edge(const GridPath& p, F&& f) {
  const auto pts = p.points();
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const GridPoint a = pts[i];
    const GridPoint b = pts[i + 1];
    if (a.y == b.y) {
      for (auto x = std::min(a.x, b.x); x < std::max(a.x, b.x); ++x) f(GridEdge{{x, a.y}, true});
    } else {
      for (auto y = std::min(a.y, b.y); y < std::max(a.y, b.y); ++y) f(GridEdge{{a.x, y}, false});
    }
  }
}

}  // namespace

std::string to_string(Flavor f) { return f == Flavor::VPG ? "VPG" : "CPG"; }

GridPath::GridPath(std::string id, std::vector<GridPoint> points)
    : id_(std::move(id)), points_(std::move(points)) {
  if (points_.size() < 2) {
    throw InvariantError("path '" + id_ + "' has fewer than two points");
  }
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    const GridPoint a = points_[i];
    const GridPoint b = points_[i + 1];
    const bool same_x = a.x == b.x;
    const bool same_y = a.y == b.y;
    if (same_x == same_y) {
      throw InvariantError("path '" + id_ + "': segment " + point_str(a) + "-" + point_str(b) +
                           (same_x ? " is degenerate" : " is not axis-parallel"));
    }
    if (i > 0) {
      const GridPoint prev = points_[i - 1];
      const bool prev_horizontal = prev.y == a.y;
      const bool horizontal = same_y;
      if (prev_horizontal == horizontal) {
        throw InvariantError("path '" + id_ + "': point " + point_str(a) + " is not a bend");
      }
    }
  }
}

std::int64_t GridPath::length() const {
  std::int64_t total = 0;
  for (std::size_t i = 0; i + 1 < points_.size(); ++i) {
    total += std::abs(points_[i + 1].x - points_[i].x) + std::abs(points_[i + 1].y - points_[i].y);
  }
  return total;
}

std::vector<GridPoint> compress_trace(std::span<const GridPoint> trace) {
  std::vector<GridPoint> out;
  out.push_back(trace.front());
  for (std::size_t i = 1; i + 1 < trace.size(); ++i) {
    const GridPoint a = trace[i - 1];
    const GridPoint b = trace[i];
    const GridPoint c = trace[i + 1];
    const bool straight = (b.x - a.x == c.x - b.x) && (b.y - a.y == c.y - b.y);
    if (!straight) out.push_back(b);
  }
  out.push_back(trace.back());
  return out;
}

GridRep::GridRep(Rational grid_step, Flavor flavor, std::vector<GridPath> paths)
    : grid_step_(grid_step), flavor_(flavor), paths_(std::move(paths)) {
  if (grid_step_ <= Rational(0)) throw InvariantError("grid step must be positive");
  std::sort(paths_.begin(), paths_.end(),
            [](const GridPath& a, const GridPath& b) { return a.id() < b.id(); });
  for (std::size_t i = 1; i < paths_.size(); ++i) {
    if (paths_[i].id() == paths_[i - 1].id()) {
      throw InvariantError("duplicate path id '" + paths_[i].id() + "'");
    }
  }
  if (flavor_ == Flavor::CPG) {
    std::unordered_map<GridPoint, std::size_t, GridPointHash> horizontal_owner;
    std::unordered_map<GridPoint, std::size_t, GridPointHash> vertical_owner;
    for (std::size_t i = 0; i < paths_.size(); ++i) {
      for_each_edge(paths_[i], [&](const GridEdge& e) {
        auto& owners = e.horizontal ? horizontal_owner : vertical_owner;
        auto [it, inserted] = owners.emplace(e.origin, i);
        if (!inserted && it->second != i) {
          throw InvariantError("shared grid-edge under CPG flavor: " + edge_str(e) + " in '" +
                               paths_[it->second].id() + "' and '" + paths_[i].id() + "'");
        }
      });
    }
  }
}

std::optional<std::size_t> GridRep::index_of(const std::string& id) const {
  auto it = std::lower_bound(paths_.begin(), paths_.end(), id,
                             [](const GridPath& p, const std::string& key) { return p.id() < key; });
  if (it == paths_.end() || it->id() != id) return std::nullopt;
  return static_cast<std::size_t>(it - paths_.begin());
}

std::vector<GridPoint> path_points(const GridPath& p) {
  const auto pts = p.points();
  std::vector<GridPoint> trace;
  trace.reserve(static_cast<std::size_t>(p.length()) + 1);
  trace.push_back(pts[0]);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    const std::int64_t dx = sign(pts[i + 1].x - pts[i].x);
    const std::int64_t dy = sign(pts[i + 1].y - pts[i].y);
    GridPoint cur = pts[i];
    while (cur != pts[i + 1]) {
      cur.x += dx;
      cur.y += dy;
      trace.push_back(cur);
    }
  }
  return trace;
}

HorizontalPart horizontal_part(const GridPath& p) {
  HorizontalPart h{p.front().x, p.front().x};
  for (const auto& q : p.points()) {
    h.x_min = std::min(h.x_min, q.x);
    h.x_max = std::max(h.x_max, q.x);
  }
  return h;
}

IntersectionIndex build_intersection_index(const GridRep& r) {
  struct Visit {
    std::size_t path;
    std::size_t first;
    std::size_t last;
  };
  std::unordered_map<GridPoint, std::vector<Visit>, GridPointHash> at;
  for (std::size_t i = 0; i < r.size(); ++i) {
    const auto trace = path_points(r.path(i));
    for (std::size_t pos = 0; pos < trace.size(); ++pos) {
      auto& visits = at[trace[pos]];
      if (!visits.empty() && visits.back().path == i) {
        visits.back().last = pos;
      } else {
        visits.push_back({i, pos, pos});
      }
    }
  }

  IntersectionIndex index;
  index.first_point.resize(r.size());
  index.last_point.resize(r.size());
  index.first_position.resize(r.size());
  index.last_position.resize(r.size());

  // Iterate points in a fixed order so that ties resolve identically each run.
  std::vector<GridPoint> shared;
  for (const auto& [pt, visits] : at) {
    if (visits.size() > 1) shared.push_back(pt);
  }
  std::sort(shared.begin(), shared.end());

  for (const auto& pt : shared) {
    const auto& visits = at[pt];
    for (const auto& a : visits) {
      for (const auto& b : visits) {
        if (a.path == b.path) continue;
        auto [it, inserted] = index.pairs.try_emplace({a.path, b.path});
        auto& e = it->second;
        if (inserted || a.first < e.first_position) {
          e.first_position = a.first;
          e.first = pt;
        }
        if (inserted || a.last > e.last_position) {
          e.last_position = a.last;
          e.last = pt;
        }
      }
      auto& fp = index.first_position[a.path];
      if (!fp || a.first < *fp) {
        fp = a.first;
        index.first_point[a.path] = pt;
      }
      auto& lp = index.last_position[a.path];
      if (!lp || a.last > *lp) {
        lp = a.last;
        index.last_point[a.path] = pt;
      }
    }
  }
  return index;
}

GridRep refine_grid(const GridRep& r) {
  std::vector<GridPath> paths;
  paths.reserve(r.size());
  for (const auto& p : r.paths()) {
    std::vector<GridPoint> pts(p.points().begin(), p.points().end());
    for (auto& q : pts) {
      q.x *= 2;
      q.y *= 2;
    }
    paths.emplace_back(p.id(), std::move(pts));
  }
  return GridRep(r.grid_step() / Rational(2), r.flavor(), std::move(paths));
}

GridRep induced_subrepresentation(const GridRep& r, std::span<const std::string> keep) {
  std::vector<std::size_t> idx;
  idx.reserve(keep.size());
  for (const auto& id : keep) {
    auto i = r.index_of(id);
    if (!i) throw UnknownVertexError(id);
    idx.push_back(*i);
  }
  return induced_subrepresentation(r, std::span<const std::size_t>(idx));
}

GridRep induced_subrepresentation(const GridRep& r, std::span<const std::size_t> keep) {
  std::vector<std::size_t> idx(keep.begin(), keep.end());
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  std::vector<GridPath> paths;
  paths.reserve(idx.size());
  for (auto i : idx) {
    if (i >= r.size()) throw PreconditionError("path index out of range");
    paths.push_back(r.path(i));
  }
  return GridRep(r.grid_step(), r.flavor(), std::move(paths));
}

GridRep translate(const GridRep& r, std::int64_t dx, std::int64_t dy) {
  std::vector<GridPath> paths;
  paths.reserve(r.size());
  for (const auto& p : r.paths()) {
    std::vector<GridPoint> pts(p.points().begin(), p.points().end());
    for (auto& q : pts) {
      q.x += dx;
      q.y += dy;
    }
    paths.emplace_back(p.id(), std::move(pts));
  }
  return GridRep(r.grid_step(), r.flavor(), std::move(paths));
}

GridRep translate_to_origin_column(const GridRep& r) {
  if (r.empty()) return r;
  std::int64_t x_min = r.path(0).front().x;
  for (const auto& p : r.paths()) x_min = std::min(x_min, horizontal_part(p).x_min);
  return x_min == 0 ? r : translate(r, -x_min, 0);
}

std::int64_t column_count(const GridRep& r) {
  if (r.empty()) return 0;
  auto h = horizontal_part(r.path(0));
  std::int64_t lo = h.x_min;
  std::int64_t hi = h.x_max;
  for (const auto& p : r.paths()) {
    h = horizontal_part(p);
    lo = std::min(lo, h.x_min);
    hi = std::max(hi, h.x_max);
  }
  return hi - lo + 1;
}

EdgeLoad grid_edge_load(const GridRep& r) {
  EdgeLoad out;
  for (const auto& p : r.paths()) {
    std::set<GridEdge> mine;
    for_each_edge(p, [&](const GridEdge& e) { mine.insert(e); });
    for (const auto& e : mine) {
      const int v = ++out.load[e];
      out.max_load = std::max(out.max_load, v);
    }
  }
  return out;
}

ValidationReport validate(const GridRep& r, const Constraints& constraints) {
  using Kind = ValidationIssue::Kind;
  ValidationReport report;
  for (const auto& p : r.paths()) {
    if (constraints.max_bends && p.bends() > *constraints.max_bends) {
      report.violations.push_back({Kind::Bends, p.id(),
                                   "path has " + std::to_string(p.bends()) + " bend" +
                                       (p.bends() == 1 ? "" : "s") + " > " +
                                       std::to_string(*constraints.max_bends)});
    }
    const auto h = horizontal_part(p).length();
    if (constraints.max_horizontal && h > *constraints.max_horizontal) {
      report.violations.push_back({Kind::Horizontal, p.id(),
                                   "horizontal part " + std::to_string(h) + " > " +
                                       std::to_string(*constraints.max_horizontal)});
    }
    const auto trace = path_points(p);
    std::unordered_set<GridPoint, GridPointHash> seen(trace.begin(), trace.end());
    if (seen.size() != trace.size()) {
      report.notes.push_back({Kind::SelfIntersection, p.id(), "path intersects itself"});
    }
  }

  const auto loads = grid_edge_load(r);
  const bool want_cpg = constraints.flavor.value_or(r.flavor()) == Flavor::CPG;
  for (const auto& [edge, count] : loads.load) {
    if (constraints.max_edge_load && count > *constraints.max_edge_load) {
      report.violations.push_back({Kind::EdgeLoad, edge_str(edge),
                                   "grid-edge load " + std::to_string(count) + " > " +
                                       std::to_string(*constraints.max_edge_load)});
    }
    if (want_cpg && count > 1) {
      report.violations.push_back(
          {Kind::Flavor, edge_str(edge), "shared grid-edge under CPG flavor"});
    }
  }
  return report;
}

}  // namespace vpg
