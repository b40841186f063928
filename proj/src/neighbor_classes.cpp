#include "vpg/neighbor_classes.hpp"

#include <unordered_set>

#include "vpg/errors.hpp"

namespace vpg {

namespace {

void over_budget(std::size_t budget) {
  throw BudgetError("neighbor classes exceed budget " + std::to_string(budget));
}

}  // namespace

std::vector<NeighborClass> enumerate_neighbor_classes(const Graph& g, const Cut& cut, CutSide side,
                                                      std::size_t budget) {
  const VertexSet& mine = side == CutSide::A ? cut.side_a : cut.side_b;
  const VertexSet& other = side == CutSide::A ? cut.side_b : cut.side_a;
  std::vector<NeighborClass> classes{{side, g.empty_set(), g.empty_set()}};
  std::unordered_set<VertexSet, VertexSetHash> seen{classes[0].signature};
  std::vector<std::pair<std::size_t, VertexSet>> movers;
  mine.for_each([&](std::size_t v) {
    VertexSet reach = g.neighbors(v) & other;
    if (reach.any()) movers.emplace_back(v, std::move(reach));
  });
  for (std::size_t head = 0; head < classes.size(); ++head) {
    for (const auto& [v, reach] : movers) {
      if (reach.is_subset_of(classes[head].signature)) continue;
      VertexSet sig = classes[head].signature | reach;
      if (!seen.insert(sig).second) continue;
      if (classes.size() == budget) over_budget(budget);
      VertexSet rep = classes[head].representative;
      rep.set(v);
      classes.push_back({side, std::move(rep), std::move(sig)});
    }
  }
  return classes;
}

std::vector<VertexSet> neighbor_signatures(const Graph& g, const VertexSet& from,
                                           const VertexSet& target, std::size_t budget) {
  std::vector<VertexSet> sigs{g.empty_set()};
  std::unordered_set<VertexSet, VertexSetHash> seen{sigs[0]};
  std::vector<VertexSet> reaches;
  {
    std::unordered_set<VertexSet, VertexSetHash> distinct;
    from.for_each([&](std::size_t v) {
      VertexSet reach = g.neighbors(v) & target;
      if (reach.any() && distinct.insert(reach).second) reaches.push_back(std::move(reach));
    });
  }
  for (std::size_t head = 0; head < sigs.size(); ++head) {
    for (const auto& reach : reaches) {
      if (reach.is_subset_of(sigs[head])) continue;
      VertexSet sig = sigs[head] | reach;
      if (!seen.insert(sig).second) continue;
      if (sigs.size() == budget) over_budget(budget);
      sigs.push_back(std::move(sig));
    }
  }
  return sigs;
}

}  // namespace vpg
