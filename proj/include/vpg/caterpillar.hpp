#pragma once

#include <cstddef>
#include <vector>

#include "vpg/branch_decomposition.hpp"
#include "vpg/graph.hpp"
#include "vpg/representation.hpp"

namespace vpg {

/// Trims every path so that its endpoints lie on other paths. A path that
/// meets the others at a single trace position keeps one free endpoint and
/// starts at that position. Throws PreconditionError on an isolated path.
GridRep endpoint_normalize(const GridRep& r);

/// Distinct grid-points shared by two or more paths, row by row from the top,
/// left to right within a row.
std::vector<GridPoint> intersection_point_order(const GridRep& r);

struct PathOrderKey {
  std::size_t anchor_index = 0;
  int direction_rank = 0;  // left 0, up 1, right 2, down 3

  friend auto operator<=>(const PathOrderKey&, const PathOrderKey&) = default;
};

/// Keys for every path of a normalized representation, given the point order.
std::vector<PathOrderKey> path_order_keys(const GridRep& r, const std::vector<GridPoint>& order);

/// Caterpillar whose leaf order sorts paths by key, then by id.
BranchDecomposition build_caterpillar_decomposition(const GridRep& r);

struct Decomposition {
  Graph graph;
  BranchDecomposition bd;
};

/// Full pipeline on an arbitrary representation: isolated paths are set
/// aside, the rest is normalized and ordered, and the isolated vertices are
/// appended at the end of the spine in id order. Vertex indices follow r.
Decomposition decompose(const GridRep& r);

}  // namespace vpg
