#pragma once

// Seeded generators and slow reference implementations shared by the tests.

#include <algorithm>
#include <cstdint>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "vpg/graph.hpp"
#include "vpg/representation.hpp"

namespace testkit {

using vpg::Graph;
using vpg::GridPath;
using vpg::GridPoint;
using vpg::GridRep;

inline std::string vid(std::size_t i) {
  std::string s = std::to_string(i);
  return "v" + std::string(s.size() < 3 ? 3 - s.size() : 0, '0') + s;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return lo + static_cast<std::size_t>(rng() % (hi - lo + 1));
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < n; ++i) ids.push_back(vid(i));
  Graph g(ids);
  std::uniform_real_distribution<double> coin(0, 1);
  for (std::size_t u = 0; u < n; ++u) {
    for (std::size_t v = u + 1; v < n; ++v) {
      if (coin(rng) < p) g.add_edge(u, v);
    }
  }
  return g;
}

/// Random staircase-ish path with up to `bends` bends inside a box.
inline GridPath random_path(std::mt19937_64& rng, const std::string& id, int width, int height,
                            int bends) {
  std::vector<GridPoint> pts;
  GridPoint cur{static_cast<std::int64_t>(uniform(rng, 0, width - 1)),
                static_cast<std::int64_t>(uniform(rng, 0, height - 1))};
  pts.push_back(cur);
  bool horizontal = rng() % 2;
  const int segments = 1 + static_cast<int>(uniform(rng, 0, bends));
  for (int s = 0; s < segments; ++s) {
    GridPoint next = cur;
    for (int tries = 0; tries < 20 && next == cur; ++tries) {
      if (horizontal) {
        next.x = static_cast<std::int64_t>(uniform(rng, 0, width - 1));
      } else {
        next.y = static_cast<std::int64_t>(uniform(rng, 0, height - 1));
      }
    }
    if (next == cur) break;
    pts.push_back(next);
    cur = next;
    horizontal = !horizontal;
  }
  if (pts.size() < 2) {
    GridPoint p = pts[0];
    pts.push_back(p.x + 1 < width ? GridPoint{p.x + 1, p.y} : GridPoint{p.x - 1, p.y});
  }
  return GridPath(id, pts);
}

inline GridRep random_rep(std::mt19937_64& rng, std::size_t n, int width, int height, int bends) {
  std::vector<GridPath> paths;
  for (std::size_t i = 0; i < n; ++i) paths.push_back(random_path(rng, vid(i), width, height, bends));
  return GridRep(vpg::Rational(1), vpg::Flavor::VPG, std::move(paths));
}

/// Expanded trace written independently of the library: walk unit steps.
inline std::vector<GridPoint> walk(const GridPath& p) {
  std::vector<GridPoint> out{p.points()[0]};
  for (std::size_t i = 1; i < p.points().size(); ++i) {
    GridPoint cur = out.back();
    const GridPoint to = p.points()[i];
    while (cur != to) {
      if (cur.x < to.x) ++cur.x;
      else if (cur.x > to.x) --cur.x;
      else if (cur.y < to.y) ++cur.y;
      else --cur.y;
      out.push_back(cur);
    }
  }
  return out;
}

/// Adjacency by pairwise trace comparison.
inline std::vector<std::vector<bool>> slow_adjacency(const GridRep& r) {
  const std::size_t n = r.size();
  std::vector<std::set<GridPoint>> pts(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto w = walk(r.path(i));
    pts[i] = std::set<GridPoint>(w.begin(), w.end());
  }
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (const auto& p : pts[i]) {
        if (pts[j].count(p)) {
          adj[i][j] = adj[j][i] = true;
          break;
        }
      }
    }
  }
  return adj;
}

inline bool same_graph(const Graph& g, const std::vector<std::vector<bool>>& adj) {
  if (g.size() != adj.size()) return false;
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i != j && g.adjacent(i, j) != adj[i][j]) return false;
    }
  }
  return true;
}

/// Independent set values by exhaustive enumeration (n <= 20).
inline std::size_t slow_alpha(const Graph& g) {
  const std::size_t n = g.size();
  std::size_t best = 0;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    bool ok = true;
    for (const auto& [u, v] : g.edges()) {
      if ((m >> u & 1U) && (m >> v & 1U)) {
        ok = false;
        break;
      }
    }
    if (ok) best = std::max<std::size_t>(best, static_cast<std::size_t>(__builtin_popcount(m)));
  }
  return best;
}

inline std::size_t slow_gamma(const Graph& g) {
  const std::size_t n = g.size();
  if (n == 0) return 0;
  std::size_t best = n;
  for (std::uint32_t m = 0; m < (1U << n); ++m) {
    const auto size = static_cast<std::size_t>(__builtin_popcount(m));
    if (size >= best) continue;
    bool ok = true;
    for (std::size_t v = 0; v < n && ok; ++v) {
      if (m >> v & 1U) continue;
      bool hit = false;
      for (std::size_t u = 0; u < n && !hit; ++u) hit = (m >> u & 1U) && g.adjacent(u, v);
      ok = hit;
    }
    if (ok) best = size;
  }
  return best;
}

}  // namespace testkit
