#pragma once

#include <cstddef>
#include <string>

#include "vpg/graph.hpp"

namespace vpg {

enum class Problem { IS, DS };

std::string to_string(Problem p);

struct Solution {
  Problem kind = Problem::IS;
  VertexSet vertices;
  std::size_t value = 0;
  bool verified = false;
};

/// True iff the set is independent (IS) or dominating (DS) in g.
bool is_feasible(const Graph& g, Problem kind, const VertexSet& s);

/// Checks s against its definition, sets s.verified and returns it.
bool verify_solution(const Graph& g, Solution& s);

Solution make_solution(const Graph& g, Problem kind, VertexSet vertices);

/// "<kind> <value>" followed by one vertex id per line, ids sorted.
std::string format_solution(const Graph& g, const Solution& s);

}  // namespace vpg
