#pragma once

#include <cstddef>

#include "vpg/graph.hpp"
#include "vpg/solution.hpp"

namespace vpg {

struct BruteForceLimits {
  std::size_t enumerate_up_to = 26;  // plain subset enumeration
  std::size_t search_up_to = 60;     // branch and bound
};

/// Maximum independent set; among optima the lexicographically smallest in
/// vertex order. Throws BudgetError above limits.search_up_to vertices.
Solution brute_force_is(const Graph& g, const BruteForceLimits& limits = {});

/// Minimum dominating set, same tie-break and limits.
Solution brute_force_ds(const Graph& g, const BruteForceLimits& limits = {});

}  // namespace vpg
