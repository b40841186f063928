#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "vpg/representation.hpp"

namespace vpg {

/// Seeded draws over std::mt19937_64 without the library distributions.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed);
  /// Uniform integer in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);
  bool coin();
  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

/// "v" followed by i, zero-padded to the width of n-1 (at least 3 digits).
std::string vertex_id(std::size_t i, std::size_t n);

struct RandomVpgParams {
  std::size_t n = 10;
  std::size_t max_bends = 1;
  std::int64_t max_horizontal = 3;  // c
  int max_load = 2;                 // t
  std::int64_t columns = 8;
  std::int64_t rows = 0;  // 0 = derived from n and columns
  std::int64_t max_vertical = 3;
  std::uint64_t seed = 1;
  std::size_t attempts_per_path = 2000;
};

/// Paths drawn one at a time and rejected until the load bound holds; each
/// path keeps its horizontal part within c and never meets itself. Throws
/// BudgetError when a path cannot be placed.
GridRep gen_random_vpg(const RandomVpgParams& params);

/// B0-CPG representation of a connected subcubic triangle-free graph, grown
/// by attaching straight segments to existing ones. Throws BudgetError when
/// growth stalls.
GridRep gen_b0cpg_subcubic(std::size_t n, std::uint64_t seed, std::size_t attempts = 0);

struct SplitGraphSpec {
  std::vector<std::string> clique;
  std::vector<std::string> independent;
  std::vector<std::pair<std::string, std::string>> edges;  // (independent id, clique id)
};

/// Representation on four columns: each independent vertex is a unit
/// segment on its own row, every clique path leaves a shared top point and
/// detours around the rows of its independent neighbours. Throws
/// PreconditionError on inconsistent input.
GridRep gen_split_graph_rep(const SplitGraphSpec& spec);

/// Random split graph: each vertex joins the clique with probability 1/2,
/// each clique/independent pair is an edge with probability 1/2.
SplitGraphSpec random_split_graph(std::size_t n, std::uint64_t seed);

}  // namespace vpg
