#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "vpg/graph.hpp"

namespace vpg {

inline constexpr std::size_t kDefaultInducedMatchingBudget = 64;

using CrossEdge = std::pair<std::size_t, std::size_t>;  // (side-a vertex, side-b vertex)

/// Hopcroft-Karp on a bipartite graph given as left-side adjacency lists.
std::size_t max_bipartite_matching(std::size_t left, std::size_t right,
                                   const std::vector<std::vector<std::size_t>>& adj);

std::vector<CrossEdge> crossing_edges(const Graph& g, const Cut& cut);

std::size_t max_matching_of(const std::vector<CrossEdge>& edges);
/// Maximum induced matching of the bipartite graph formed by the given
/// crossing edges of g. Throws BudgetError when more than `budget` edges
/// remain after merging twin vertices.
std::size_t max_induced_matching_of(const Graph& g, const std::vector<CrossEdge>& edges,
                                    std::size_t budget = kDefaultInducedMatchingBudget);

std::size_t cut_max_matching(const Graph& g, const Cut& cut);
std::size_t cut_max_induced_matching(const Graph& g, const Cut& cut,
                                     std::size_t budget = kDefaultInducedMatchingBudget);

/// Size of a maximum clique of the graph given by bitset rows.
std::size_t max_clique_size(const std::vector<VertexSet>& adj);

}  // namespace vpg
