#include "vpg/brute_force.hpp"

#include <bit>
#include <cstdint>
#include <vector>

#include "vpg/errors.hpp"

namespace vpg {

namespace {

using Mask = std::uint64_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.size(), 0);
  for (const auto& [u, v] : g.edges()) {
    adj[u] |= Mask{1} << v;
    adj[v] |= Mask{1} << u;
  }
  return adj;
}

// Same-size sets: the one holding the lowest differing vertex comes first.
bool lex_before(Mask a, Mask b) {
  const Mask diff = a ^ b;
  return diff && (a & (diff & -diff));
}

VertexSet to_set(Mask m, std::size_t n) {
  VertexSet s(n);
  for (; m; m &= m - 1) s.set(static_cast<std::size_t>(std::countr_zero(m)));
  return s;
}

void check_size(const Graph& g, const BruteForceLimits& limits) {
  if (g.size() > limits.search_up_to || g.size() > 63) {
    throw BudgetError("exact search limited to " + std::to_string(limits.search_up_to) +
                      " vertices, graph has " + std::to_string(g.size()));
  }
}

Mask enumerate_is(const std::vector<Mask>& adj) {
  const std::size_t n = adj.size();
  Mask best = 0;
  int best_size = 0;
  for (Mask m = 1; m < (Mask{1} << n); ++m) {
    const int size = std::popcount(m);
    if (size < best_size) continue;
    bool independent = true;
    for (Mask rest = m; rest && independent; rest &= rest - 1) {
      independent = !(adj[static_cast<std::size_t>(std::countr_zero(rest))] & m);
    }
    if (!independent) continue;
    if (size > best_size || lex_before(m, best)) {
      best = m;
      best_size = size;
    }
  }
  return best;
}

// Include-first depth-first search visits same-size sets in lexicographic
// order, so accepting only strict improvements keeps the lex-first optimum.
struct IsSearch {
  const std::vector<Mask>& adj;
  std::size_t n;
  Mask best = 0;
  int best_size = -1;

  void run(std::size_t v, Mask chosen, Mask allowed, int size) {
    if (size + std::popcount(allowed) <= best_size) return;
    if (v == n || !allowed) {
      if (size > best_size) {
        best_size = size;
        best = chosen;
      }
      return;
    }
    const Mask bit = Mask{1} << v;
    if (allowed & bit) {
      run(v + 1, chosen | bit, allowed & ~adj[v] & ~bit, size + 1);
      run(v + 1, chosen, allowed & ~bit, size);
    } else {
      run(v + 1, chosen, allowed, size);
    }
  }
};

// Searches dominating sets of exactly `k` vertices, choosing members in
// increasing index order; the first hit is the lex-first such set.
struct DsSearch {
  const std::vector<Mask>& closed;
  std::size_t n;
  Mask full;
  int max_cover;
  Mask found = 0;

  bool run(std::size_t from, Mask chosen, Mask covered, int left) {
    if (covered == full) {
      found = chosen;
      return true;
    }
    if (left == 0) return false;
    const int missing = std::popcount(full & ~covered);
    if (missing > left * max_cover) return false;
    const std::size_t u = static_cast<std::size_t>(std::countr_zero(full & ~covered));
    // Some member at index >= from must dominate u.
    const Mask reach = closed[u] & ~((Mask{1} << from) - 1);
    if (!reach) return false;
    const std::size_t last = 63 - static_cast<std::size_t>(std::countl_zero(reach));
    for (std::size_t v = from; v <= last; ++v) {
      if (run(v + 1, chosen | (Mask{1} << v), covered | closed[v], left - 1)) return true;
    }
    return false;
  }
};

}  // namespace

Solution brute_force_is(const Graph& g, const BruteForceLimits& limits) {
  check_size(g, limits);
  const auto adj = adjacency_masks(g);
  Mask best;
  if (g.size() <= limits.enumerate_up_to) {
    best = enumerate_is(adj);
  } else {
    IsSearch search{adj, g.size()};
    search.run(0, 0, g.size() == 64 ? ~Mask{0} : (Mask{1} << g.size()) - 1, 0);
    best = search.best;
  }
  return make_solution(g, Problem::IS, to_set(best, g.size()));
}

Solution brute_force_ds(const Graph& g, const BruteForceLimits& limits) {
  check_size(g, limits);
  const std::size_t n = g.size();
  if (n == 0) return make_solution(g, Problem::DS, VertexSet(0));
  auto closed = adjacency_masks(g);
  int max_cover = 0;
  for (std::size_t v = 0; v < n; ++v) {
    closed[v] |= Mask{1} << v;
    max_cover = std::max(max_cover, std::popcount(closed[v]));
  }
  const Mask full = (Mask{1} << n) - 1;
  if (n <= limits.enumerate_up_to) {
    // Plain enumeration by increasing size in lexicographic combination order.
    for (std::size_t k = 1; k <= n; ++k) {
      std::vector<std::size_t> pick(k);
      for (std::size_t i = 0; i < k; ++i) pick[i] = i;
      while (true) {
        Mask covered = 0;
        for (auto v : pick) covered |= closed[v];
        if (covered == full) {
          Mask m = 0;
          for (auto v : pick) m |= Mask{1} << v;
          return make_solution(g, Problem::DS, to_set(m, n));
        }
        std::size_t i = k;
        while (i > 0 && pick[i - 1] == n - k + i - 1) --i;
        if (i == 0) break;
        ++pick[i - 1];
        for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
      }
    }
  }
  DsSearch search{closed, n, full, max_cover};
  for (int k = 1; k <= static_cast<int>(n); ++k) {
    if (search.run(0, 0, 0, k)) break;
  }
  return make_solution(g, Problem::DS, to_set(search.found, n));
}

}  // namespace vpg
