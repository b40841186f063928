#pragma once

#include <cstddef>
#include <vector>

#include "vpg/graph.hpp"

namespace vpg {

inline constexpr std::size_t kDefaultClassBudget = 200000;

enum class CutSide { A, B };

/// Subsets of one side that have the same neighbors across the cut are
/// equivalent; each class is given by its first-found representative.
struct NeighborClass {
  CutSide side = CutSide::A;
  VertexSet representative;
  VertexSet signature;  // N(representative) on the other side
};

/// Breadth-first closure from the empty set, adding one vertex at a time.
/// Throws BudgetError when more than `budget` classes appear.
std::vector<NeighborClass> enumerate_neighbor_classes(const Graph& g, const Cut& cut, CutSide side,
                                                      std::size_t budget = kDefaultClassBudget);

/// Signatures only: all sets N(X) & target over subsets X of `from`.
std::vector<VertexSet> neighbor_signatures(const Graph& g, const VertexSet& from,
                                           const VertexSet& target, std::size_t budget);

}  // namespace vpg
