#include "vpg/solution.hpp"

#include <algorithm>
#include <sstream>
#include <vector>

#include "vpg/errors.hpp"

namespace vpg {

std::string to_string(Problem p) { return p == Problem::IS ? "IS" : "DS"; }

bool is_feasible(const Graph& g, Problem kind, const VertexSet& s) {
  if (s.universe() != g.size()) throw PreconditionError("solution universe does not match graph");
  if (kind == Problem::IS) {
    bool ok = true;
    s.for_each([&](std::size_t v) { ok = ok && !g.neighbors(v).intersects(s); });
    return ok;
  }
  return (g.neighborhood(s) | s).count() == g.size();
}

bool verify_solution(const Graph& g, Solution& s) {
  s.verified = is_feasible(g, s.kind, s.vertices) && s.value == s.vertices.count();
  return s.verified;
}

Solution make_solution(const Graph& g, Problem kind, VertexSet vertices) {
  Solution s{kind, std::move(vertices), 0, false};
  s.value = s.vertices.count();
  verify_solution(g, s);
  return s;
}

std::string format_solution(const Graph& g, const Solution& s) {
  std::vector<std::string> ids;
  s.vertices.for_each([&](std::size_t v) { ids.push_back(g.id(v)); });
  std::sort(ids.begin(), ids.end());
  std::ostringstream out;
  out << to_string(s.kind) << ' ' << s.value << '\n';
  for (const auto& id : ids) out << id << '\n';
  return out.str();
}

}  // namespace vpg
