#include "vpg/caterpillar.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <unordered_map>

#include "vpg/errors.hpp"

namespace vpg {

GridRep endpoint_normalize(const GridRep& r) {
  const IntersectionIndex index = build_intersection_index(r);
  std::vector<GridPath> out;
  out.reserve(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const GridPath& p = r.path(i);
    if (!index.first_position[i]) {
      throw PreconditionError("path '" + p.id() + "' meets no other path");
    }
    const std::size_t first = *index.first_position[i];
    const std::size_t last = *index.last_position[i];
    auto trace = path_points(p);
    std::vector<GridPoint> kept;
    if (first != last) {
      kept.assign(trace.begin() + static_cast<std::ptrdiff_t>(first),
                  trace.begin() + static_cast<std::ptrdiff_t>(last) + 1);
    } else if (first + 1 == trace.size()) {
      kept.assign(trace.rbegin(), trace.rend());
    } else {
      kept.assign(trace.begin() + static_cast<std::ptrdiff_t>(first), trace.end());
    }
    if (kept == trace) {
      out.push_back(p);
    } else {
      out.emplace_back(p.id(), compress_trace(kept));
    }
  }
  return GridRep(r.grid_step(), r.flavor(), std::move(out));
}

std::vector<GridPoint> intersection_point_order(const GridRep& r) {
  std::unordered_map<GridPoint, std::size_t, GridPointHash> owner;
  std::vector<GridPoint> shared;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (const auto& pt : path_points(r.path(i))) {
      auto [it, fresh] = owner.try_emplace(pt, i);
      if (!fresh && it->second != i && it->second != r.size()) {
        shared.push_back(pt);
        it->second = r.size();  // already recorded
      }
    }
  }
  std::sort(shared.begin(), shared.end(), [](const GridPoint& a, const GridPoint& b) {
    if (a.y != b.y) return a.y > b.y;
    return a.x < b.x;
  });
  return shared;
}

namespace {

int direction_rank(GridPoint from, GridPoint to) {
  if (to.x < from.x) return 0;
  if (to.y > from.y) return 1;
  if (to.x > from.x) return 2;
  return 3;
}

}  // namespace

std::vector<PathOrderKey> path_order_keys(const GridRep& r, const std::vector<GridPoint>& order) {
  std::unordered_map<GridPoint, std::size_t, GridPointHash> rank;
  for (std::size_t i = 0; i < order.size(); ++i) rank.emplace(order[i], i);

  std::vector<PathOrderKey> keys(r.size());
  for (std::size_t i = 0; i < r.size(); ++i) {
    const GridPath& p = r.path(i);
    std::optional<std::size_t> anchor;
    for (const auto& end : {p.front(), p.back()}) {
      auto it = rank.find(end);
      if (it != rank.end() && (!anchor || it->second < *anchor)) anchor = it->second;
    }
    if (!anchor) {
      throw PreconditionError("path '" + p.id() + "' has no endpoint on another path");
    }
    const GridPoint at = order[*anchor];
    const auto trace = path_points(p);
    int dir = 0;
    for (std::size_t k = 0; k + 1 < trace.size(); ++k) {
      if (trace[k] == at) {
        dir = direction_rank(at, trace[k + 1]);
        break;
      }
      if (trace[k + 1] == at) {
        dir = direction_rank(at, trace[k]);
        break;
      }
    }
    keys[i] = {*anchor, dir};
  }
  return keys;
}

BranchDecomposition build_caterpillar_decomposition(const GridRep& r) {
  const auto keys = path_order_keys(r, intersection_point_order(r));
  std::vector<std::size_t> order(r.size());
  std::iota(order.begin(), order.end(), 0);
  // Paths are stored sorted by id, so the index is the id tie-break.
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return keys[a] < keys[b]; });
  return BranchDecomposition::caterpillar(std::move(order));
}

Decomposition decompose(const GridRep& r) {
  Graph g = intersection_graph(r);
  std::vector<std::size_t> linked, isolated;
  for (std::size_t v = 0; v < g.size(); ++v) {
    (g.degree(v) == 0 ? isolated : linked).push_back(v);
  }
  std::vector<std::size_t> order;
  order.reserve(g.size());
  if (!linked.empty()) {
    const GridRep core = endpoint_normalize(induced_subrepresentation(r, std::span<const std::size_t>(linked)));
    const BranchDecomposition inner = build_caterpillar_decomposition(core);
    for (auto local : *inner.linear_order()) order.push_back(linked[local]);
  }
  order.insert(order.end(), isolated.begin(), isolated.end());
  BranchDecomposition bd = BranchDecomposition::caterpillar(std::move(order));
  return {std::move(g), std::move(bd)};
}

}  // namespace vpg
