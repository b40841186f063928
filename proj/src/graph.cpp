#include "vpg/graph.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

#include "vpg/errors.hpp"

namespace vpg {

Graph::Graph(std::vector<std::string> ids) : ids_(std::move(ids)) {
  adj_.assign(ids_.size(), VertexSet(ids_.size()));
}

std::optional<std::size_t> Graph::index_of(const std::string& id) const {
  auto it = std::find(ids_.begin(), ids_.end(), id);
  if (it == ids_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - ids_.begin());
}

void Graph::add_edge(std::size_t u, std::size_t v) {
  if (u == v) throw PreconditionError("self-loop on vertex '" + ids_[u] + "'");
  if (adj_[u].test(v)) return;
  adj_[u].set(v);
  adj_[v].set(u);
  edges_.emplace_back(std::min(u, v), std::max(u, v));
}

VertexSet Graph::closed_neighbors(std::size_t v) const {
  VertexSet s = adj_[v];
  s.set(v);
  return s;
}

VertexSet Graph::neighborhood(const VertexSet& s) const {
  VertexSet out(size());
  s.for_each([&](std::size_t v) { out |= adj_[v]; });
  return out;
}

Graph Graph::induced(std::span<const std::size_t> keep) const {
  std::vector<std::string> ids;
  ids.reserve(keep.size());
  std::vector<std::size_t> position(size(), size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    ids.push_back(ids_[keep[i]]);
    position[keep[i]] = i;
  }
  Graph h(std::move(ids));
  for (const auto& [u, v] : edges_) {
    if (position[u] < size() && position[v] < size()) h.add_edge(position[u], position[v]);
  }
  return h;
}

Graph intersection_graph(const GridRep& r) {
  std::vector<std::string> ids;
  ids.reserve(r.size());
  for (const auto& p : r.paths()) ids.push_back(p.id());
  Graph g(std::move(ids));

  std::unordered_map<GridPoint, std::vector<std::size_t>, GridPointHash> at;
  for (std::size_t i = 0; i < r.size(); ++i) {
    for (const auto& pt : path_points(r.path(i))) {
      auto& owners = at[pt];
      if (owners.empty() || owners.back() != i) owners.push_back(i);
    }
  }
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  for (const auto& [pt, owners] : at) {
    for (std::size_t a = 0; a < owners.size(); ++a) {
      for (std::size_t b = a + 1; b < owners.size(); ++b) {
        if (owners[a] != owners[b]) {
          pairs.emplace_back(std::min(owners[a], owners[b]), std::max(owners[a], owners[b]));
        }
      }
    }
  }
  // Sorted insertion keeps the edge list independent of hash iteration order.
  std::sort(pairs.begin(), pairs.end());
  for (const auto& [u, v] : pairs) g.add_edge(u, v);
  g.set_origin(std::make_shared<const GridRep>(r));
  return g;
}

std::vector<std::vector<std::size_t>> connected_components(const Graph& g) {
  std::vector<std::vector<std::size_t>> parts;
  VertexSet unseen = VertexSet::full(g.size());
  for (std::size_t s = unseen.first(); s < g.size(); s = unseen.next(s)) {
    std::vector<std::size_t> part{s};
    unseen.reset(s);
    for (std::size_t head = 0; head < part.size(); ++head) {
      const VertexSet fresh = g.neighbors(part[head]) & unseen;
      fresh.for_each([&](std::size_t v) {
        unseen.reset(v);
        part.push_back(v);
      });
    }
    std::sort(part.begin(), part.end());
    parts.push_back(std::move(part));
  }
  return parts;
}

StructureFlags structural_checks(const Graph& g, bool check_planarity) {
  StructureFlags f;
  for (std::size_t v = 0; v < g.size(); ++v) {
    if (g.degree(v) > 3) f.subcubic = false;
  }
  for (const auto& [u, v] : g.edges()) {
    if (g.neighbors(u).intersects(g.neighbors(v))) {
      f.triangle_free = false;
      break;
    }
  }
  std::vector<int> colour(g.size(), -1);
  for (std::size_t s = 0; s < g.size() && f.bipartite; ++s) {
    if (colour[s] >= 0) continue;
    colour[s] = 0;
    std::vector<std::size_t> queue{s};
    for (std::size_t head = 0; head < queue.size() && f.bipartite; ++head) {
      const std::size_t u = queue[head];
      g.neighbors(u).for_each([&](std::size_t v) {
        if (colour[v] < 0) {
          colour[v] = 1 - colour[u];
          queue.push_back(v);
        } else if (colour[v] == colour[u]) {
          f.bipartite = false;
        }
      });
    }
  }
  if (check_planarity) {
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                              boost::property<boost::vertex_index_t, int>,
                              boost::property<boost::edge_index_t, int>>;
    BoostGraph bg(g.size());
    for (const auto& [u, v] : g.edges()) boost::add_edge(u, v, bg);
    f.planar = boost::boyer_myrvold_planarity_test(bg);
  }
  return f;
}

std::string export_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.size() << ' ' << g.edge_count() << '\n';
  for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
  return out.str();
}

}  // namespace vpg
