#include "vpg/matching.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <queue>

#include "vpg/errors.hpp"

namespace vpg {

std::size_t max_bipartite_matching(std::size_t left, std::size_t right,
                                   const std::vector<std::vector<std::size_t>>& adj) {
  constexpr std::size_t kFree = std::numeric_limits<std::size_t>::max();
  constexpr std::size_t kInf = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> match_l(left, kFree), match_r(right, kFree), dist(left);

  auto bfs = [&] {
    std::queue<std::size_t> q;
    bool reachable_free = false;
    for (std::size_t u = 0; u < left; ++u) {
      if (match_l[u] == kFree) {
        dist[u] = 0;
        q.push(u);
      } else {
        dist[u] = kInf;
      }
    }
    while (!q.empty()) {
      const std::size_t u = q.front();
      q.pop();
      for (auto v : adj[u]) {
        const std::size_t w = match_r[v];
        if (w == kFree) {
          reachable_free = true;
        } else if (dist[w] == kInf) {
          dist[w] = dist[u] + 1;
          q.push(w);
        }
      }
    }
    return reachable_free;
  };

  std::vector<std::size_t> it(left);
  auto dfs = [&](auto&& self, std::size_t u) -> bool {
    for (; it[u] < adj[u].size(); ++it[u]) {
      const std::size_t v = adj[u][it[u]];
      const std::size_t w = match_r[v];
      if (w == kFree || (dist[w] == dist[u] + 1 && self(self, w))) {
        match_l[u] = v;
        match_r[v] = u;
        return true;
      }
    }
    dist[u] = kInf;
    return false;
  };

  std::size_t size = 0;
  while (bfs()) {
    std::fill(it.begin(), it.end(), 0);
    for (std::size_t u = 0; u < left; ++u) {
      if (match_l[u] == kFree && dfs(dfs, u)) ++size;
    }
  }
  return size;
}

std::vector<CrossEdge> crossing_edges(const Graph& g, const Cut& cut) {
  std::vector<CrossEdge> out;
  cut.side_a.for_each([&](std::size_t a) {
    (g.neighbors(a) & cut.side_b).for_each([&](std::size_t b) { out.emplace_back(a, b); });
  });
  return out;
}

namespace {

struct Compact {
  std::vector<std::size_t> left_ids, right_ids;
  std::vector<std::vector<std::size_t>> adj;
};

Compact compact(const std::vector<CrossEdge>& edges) {
  Compact c;
  std::map<std::size_t, std::size_t> l, r;
  for (const auto& [a, b] : edges) {
    l.try_emplace(a, l.size());
    r.try_emplace(b, r.size());
  }
  c.adj.resize(l.size());
  for (const auto& [a, b] : edges) c.adj[l[a]].push_back(r[b]);
  return c;
}

}  // namespace

std::size_t max_matching_of(const std::vector<CrossEdge>& edges) {
  Compact c = compact(edges);
  std::size_t right = 0;
  for (const auto& row : c.adj) {
    for (auto v : row) right = std::max(right, v + 1);
  }
  return max_bipartite_matching(c.adj.size(), right, c.adj);
}

std::size_t max_clique_size(const std::vector<VertexSet>& adj) {
  const std::size_t n = adj.size();
  if (n == 0) return 0;
  std::size_t best = 0;

  // Greedy colouring bound: vertices of `cand` are assigned colour classes in
  // order; a branch is pruned once size + colour cannot beat best.
  auto expand = [&](auto&& self, VertexSet cand, std::size_t size) -> void {
    std::vector<std::size_t> order;
    std::vector<std::size_t> colour;
    {
      VertexSet uncoloured = cand;
      std::size_t k = 0;
      while (uncoloured.any()) {
        ++k;
        VertexSet avail = uncoloured;
        while (avail.any()) {
          const std::size_t v = avail.first();
          avail.reset(v);
          avail -= adj[v];
          uncoloured.reset(v);
          order.push_back(v);
          colour.push_back(k);
        }
      }
    }
    for (std::size_t i = order.size(); i-- > 0;) {
      if (size + colour[i] <= best) return;
      const std::size_t v = order[i];
      VertexSet next = cand & adj[v];
      if (next.none()) {
        best = std::max(best, size + 1);
      } else {
        self(self, next, size + 1);
      }
      cand.reset(v);
    }
  };
  expand(expand, VertexSet::full(n), 0);
  return best;
}

std::size_t max_induced_matching_of(const Graph& g, const std::vector<CrossEdge>& edges,
                                    std::size_t budget) {
  if (edges.empty()) return 0;

  // Twins (same crossing neighborhood on the same side) are interchangeable
  // and mutually exclusive in an induced matching, so keep one of each.
  std::vector<CrossEdge> live = edges;
  while (true) {
    bool changed = false;
    for (int side = 0; side < 2; ++side) {
      std::map<std::size_t, std::vector<std::size_t>> nbrs;
      for (const auto& e : live) {
        const auto [x, y] = side == 0 ? e : CrossEdge{e.second, e.first};
        nbrs[x].push_back(y);
      }
      std::map<std::vector<std::size_t>, std::size_t> keeper;
      std::vector<std::size_t> drop;
      for (auto& [x, ys] : nbrs) {
        std::sort(ys.begin(), ys.end());
        auto [it, fresh] = keeper.try_emplace(ys, x);
        if (!fresh) drop.push_back(x);
      }
      if (drop.empty()) continue;
      changed = true;
      std::sort(drop.begin(), drop.end());
      std::erase_if(live, [&](const CrossEdge& e) {
        return std::binary_search(drop.begin(), drop.end(), side == 0 ? e.first : e.second);
      });
    }
    if (!changed) break;
  }
  if (live.size() > budget) {
    throw BudgetError("induced matching: " + std::to_string(live.size()) +
                      " crossing edges exceed budget " + std::to_string(budget));
  }

  // Edges in different components of the cut graph never conflict.
  const std::size_t m = live.size();
  std::vector<std::size_t> parent(m);
  for (std::size_t i = 0; i < m; ++i) parent[i] = i;
  auto find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::map<std::size_t, std::size_t> by_a, by_b;
  for (std::size_t i = 0; i < m; ++i) {
    auto [ia, fa] = by_a.try_emplace(live[i].first, i);
    if (!fa) parent[find(i)] = find(ia->second);
    auto [ib, fb] = by_b.try_emplace(live[i].second, i);
    if (!fb) parent[find(i)] = find(ib->second);
  }
  std::map<std::size_t, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < m; ++i) groups[find(i)].push_back(i);

  std::size_t total = 0;
  for (const auto& [root, members] : groups) {
    const std::size_t k = members.size();
    std::vector<VertexSet> compatible(k, VertexSet(k));
    for (std::size_t i = 0; i < k; ++i) {
      const auto [a1, b1] = live[members[i]];
      for (std::size_t j = i + 1; j < k; ++j) {
        const auto [a2, b2] = live[members[j]];
        const bool conflict =
            a1 == a2 || b1 == b2 || g.adjacent(a1, b2) || g.adjacent(a2, b1);
        if (!conflict) {
          compatible[i].set(j);
          compatible[j].set(i);
        }
      }
    }
    total += max_clique_size(compatible);
  }
  return total;
}

std::size_t cut_max_matching(const Graph& g, const Cut& cut) {
  return max_matching_of(crossing_edges(g, cut));
}

std::size_t cut_max_induced_matching(const Graph& g, const Cut& cut, std::size_t budget) {
  return max_induced_matching_of(g, crossing_edges(g, cut), budget);
}

}  // namespace vpg
