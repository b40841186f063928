#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "vpg/representation.hpp"
#include "vpg/solution.hpp"

namespace vpg {

struct SplitReport {
  std::string vertex;
  Problem problem = Problem::IS;
  std::int64_t q = 0;
  std::int64_t q_prime = 0;  // 0 for degree 2
  int degree = 2;
  std::int64_t new_vertex_count = 0;
  std::int64_t predicted_delta = 0;  // alpha(H) - alpha(G), or gamma(H) - gamma(G)
};

/// Replaces the horizontal path of a degree-2 or degree-3 vertex by a row of
/// touching horizontal paths (ids "<id>.sNN", left to right). Expects the
/// representation normalized with min_len 5; throws PreconditionError when
/// the vertex is unknown, not horizontal, of degree below 2, or too short.
std::pair<GridRep, SplitReport> split_vertex_is(const GridRep& r, const std::string& v);

/// Dominating-set version of the same gadget; expects min_len 4.
std::pair<GridRep, SplitReport> split_vertex_ds(const GridRep& r, const std::string& v);

struct Reduction {
  GridRep rep;
  std::int64_t offset = 0;
  std::vector<SplitReport> splits;
};

/// Splits every horizontal vertex of degree >= 2, in id order.
Reduction reduce_full(const GridRep& r, Problem problem);

/// "vertex,q,q_prime,degree,delta" then one row per split.
std::string splits_csv(const std::vector<SplitReport>& splits);

}  // namespace vpg
