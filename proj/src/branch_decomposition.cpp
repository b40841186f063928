#include "vpg/branch_decomposition.hpp"

#include <limits>
#include <sstream>

#include "vpg/errors.hpp"

namespace vpg {

namespace {
constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();
}

BranchDecomposition::BranchDecomposition(std::size_t node_count,
                                         std::vector<std::pair<std::size_t, std::size_t>> edges,
                                         std::vector<std::optional<std::size_t>> leaf_vertex,
                                         std::size_t vertex_count)
    : adj_(node_count), edges_(std::move(edges)), leaf_vertex_(std::move(leaf_vertex)),
      vertex_leaf_(vertex_count, kNone) {
  if (leaf_vertex_.size() != node_count) throw InvariantError("leaf map size mismatch");
  for (const auto& [a, b] : edges_) {
    if (a >= node_count || b >= node_count || a == b) throw InvariantError("bad tree edge");
    adj_[a].push_back(b);
    adj_[b].push_back(a);
  }
  for (std::size_t t = 0; t < node_count; ++t) {
    if (!leaf_vertex_[t]) continue;
    const std::size_t v = *leaf_vertex_[t];
    if (v >= vertex_count || vertex_leaf_[v] != kNone) {
      throw InvariantError("leaf map is not a bijection");
    }
    vertex_leaf_[v] = t;
  }
  check();
}

void BranchDecomposition::check() const {
  const std::size_t n = adj_.size();
  if (vertex_leaf_.empty()) {
    if (n != 0) throw InvariantError("decomposition of the empty graph has nodes");
    return;
  }
  if (edges_.size() + 1 != n) throw InvariantError("decomposition tree edge count");
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const std::size_t u = stack.back();
    stack.pop_back();
    for (auto w : adj_[u]) {
      if (!seen[w]) {
        seen[w] = true;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  if (reached != n) throw InvariantError("decomposition tree is disconnected");
  for (std::size_t t = 0; t < n; ++t) {
    if (adj_[t].size() > 3) throw InvariantError("decomposition tree node of degree > 3");
    const bool is_leaf = adj_[t].size() <= 1;
    if (is_leaf != leaf_vertex_[t].has_value()) {
      throw InvariantError("tree leaves and mapped nodes differ at node " + std::to_string(t));
    }
  }
  for (auto t : vertex_leaf_) {
    if (t == kNone) throw InvariantError("vertex without a leaf");
  }
}

BranchDecomposition BranchDecomposition::caterpillar(std::vector<std::size_t> order) {
  const std::size_t n = order.size();
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  std::vector<std::optional<std::size_t>> leaf;
  if (n == 1) {
    leaf.push_back(order[0]);
  } else if (n >= 2) {
    leaf.resize(2 * n - 2);
    for (std::size_t i = 0; i + 1 < n; ++i) edges.emplace_back(i, i + 1);
    for (std::size_t i = 1; i + 1 < n; ++i) {
      edges.emplace_back(i, n + i - 1);
      leaf[n + i - 1] = order[i];
    }
    leaf[0] = order[0];
    leaf[n - 1] = order[n - 1];
  }
  const std::size_t nodes = leaf.size();
  BranchDecomposition bd(nodes, std::move(edges), std::move(leaf), n);
  bd.order_ = std::move(order);
  return bd;
}

std::vector<VertexSet> BranchDecomposition::edge_sides() const {
  const std::size_t nv = vertex_count();
  std::vector<VertexSet> out;
  out.reserve(edges_.size());
  if (order_) {
    const auto& ord = *order_;
    const std::size_t n = ord.size();
    VertexSet prefix(nv);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      prefix.set(ord[i]);
      out.push_back(prefix);
    }
    for (std::size_t i = 1; i + 1 < n; ++i) {
      // Pendant edge (spine i, leaf): the spine side holds everything else.
      VertexSet s = VertexSet::full(nv);
      s.reset(ord[i]);
      out.push_back(std::move(s));
    }
    return out;
  }
  for (const auto& [a, b] : edges_) {
    VertexSet s(nv);
    std::vector<std::size_t> stack{a};
    std::vector<bool> seen(adj_.size(), false);
    seen[a] = seen[b] = true;
    while (!stack.empty()) {
      const std::size_t u = stack.back();
      stack.pop_back();
      if (leaf_vertex_[u]) s.set(*leaf_vertex_[u]);
      for (auto w : adj_[u]) {
        if (!seen[w]) {
          seen[w] = true;
          stack.push_back(w);
        }
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::string BranchDecomposition::export_text(const Graph& g) const {
  std::ostringstream out;
  for (std::size_t t = 0; t < node_count(); ++t) {
    if (leaf_vertex_[t]) out << "leaf " << t << ' ' << g.id(*leaf_vertex_[t]) << '\n';
  }
  for (const auto& [a, b] : edges_) out << "edge " << a << ' ' << b << '\n';
  return out.str();
}

}  // namespace vpg
