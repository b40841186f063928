#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "vpg/branch_decomposition.hpp"
#include "vpg/graph.hpp"
#include "vpg/matching.hpp"

namespace vpg {

struct CutWidth {
  std::size_t edge = 0;        // index into bd.edges()
  std::size_t side_size = 0;   // vertices on the edge.first side
  std::size_t mm = 0;
  std::optional<std::size_t> mim;
};

struct WidthReport {
  std::vector<CutWidth> cuts;
  std::size_t mm_width = 0;
  std::optional<std::size_t> mim_width;
};

struct WidthOptions {
  bool induced = true;
  std::size_t induced_budget = kDefaultInducedMatchingBudget;
  std::size_t jobs = 1;
};

/// Evaluates every tree edge of bd. Caterpillars are swept left to right,
/// updating the crossing-edge set per spine step.
WidthReport evaluate_widths(const Graph& g, const BranchDecomposition& bd,
                            const WidthOptions& options = {});

std::size_t decomposition_mm_width(const Graph& g, const BranchDecomposition& bd);
std::size_t decomposition_mim_width(const Graph& g, const BranchDecomposition& bd,
                                    std::size_t budget = kDefaultInducedMatchingBudget);

/// Copy of g with the vertices of s made pairwise adjacent.
Graph clique_augment(const Graph& g, const VertexSet& s);
Graph clique_augment(const Graph& g, const std::vector<std::string>& ids);

/// "edge,a,b,side_size,mm,mim" header plus one row per cut.
std::string width_csv(const BranchDecomposition& bd, const WidthReport& report);

}  // namespace vpg
