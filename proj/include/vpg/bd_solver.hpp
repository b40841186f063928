#pragma once

#include <cstddef>

#include "vpg/branch_decomposition.hpp"
#include "vpg/graph.hpp"
#include "vpg/neighbor_classes.hpp"
#include "vpg/solution.hpp"

namespace vpg {

inline constexpr std::size_t kDefaultCellBudget = 4'000'000;

struct SolveOptions {
  std::size_t class_budget = kDefaultClassBudget;
  /// Dominating set tables hold signatures x help classes cells.
  std::size_t cell_budget = kDefaultCellBudget;
};

/// Largest table seen while solving, for diagnostics.
struct SolveStats {
  std::size_t max_classes = 0;       // distinct chosen-set signatures at one node
  std::size_t max_help_classes = 0;  // distinct outside-help signatures at one node (DS)
};

/// Exact maximum independent set by dynamic programming over bd, rooted at
/// its first leaf. Tables map the neighborhood signature of a partial
/// solution across the node's cut to the best partial solution. Ties go to
/// the lexicographically smallest set.
Solution solve_is_bd(const Graph& g, const BranchDecomposition& bd, const SolveOptions& options = {},
                     SolveStats* stats = nullptr);

/// Exact minimum dominating set. Tables are indexed by the signature of the
/// chosen set across the cut and by the signature of help arriving from the
/// other side; an entry is the smallest chosen set that, with that help,
/// dominates the node's vertices.
Solution solve_ds_bd(const Graph& g, const BranchDecomposition& bd, const SolveOptions& options = {},
                     SolveStats* stats = nullptr);

}  // namespace vpg
