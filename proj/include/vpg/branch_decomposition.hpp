#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vpg/graph.hpp"

namespace vpg {

/// Subcubic tree whose leaves are in bijection with the vertices of a graph.
class BranchDecomposition {
 public:
  BranchDecomposition() = default;
  /// Builds from explicit tree edges and a leaf map (node -> vertex). Throws
  /// InvariantError if the result is not a valid decomposition of a graph on
  /// `vertex_count` vertices.
  BranchDecomposition(std::size_t node_count, std::vector<std::pair<std::size_t, std::size_t>> edges,
                      std::vector<std::optional<std::size_t>> leaf_vertex, std::size_t vertex_count);

  /// Caterpillar: spine nodes 0..n-1, order[0] on node 0, order[n-1] on node
  /// n-1, and order[i] on a pendant node n+i-1 hanging off spine node i.
  static BranchDecomposition caterpillar(std::vector<std::size_t> order);

  std::size_t node_count() const { return adj_.size(); }
  std::size_t vertex_count() const { return vertex_leaf_.size(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t node) const { return adj_[node]; }
  const std::optional<std::size_t>& leaf_vertex(std::size_t node) const { return leaf_vertex_[node]; }
  std::size_t leaf_of(std::size_t vertex) const { return vertex_leaf_[vertex]; }

  /// Leaf order along the spine when built by caterpillar().
  const std::optional<std::vector<std::size_t>>& linear_order() const { return order_; }

  /// Vertices mapped to leaves on the `edge.first` side of each tree edge,
  /// in edges() order.
  std::vector<VertexSet> edge_sides() const;

  /// Text export: "leaf <node> <vertex-id>" per leaf by node, then
  /// "edge <a> <b>" per tree edge.
  std::string export_text(const Graph& g) const;

 private:
  void check() const;

  std::vector<std::vector<std::size_t>> adj_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::vector<std::optional<std::size_t>> leaf_vertex_;
  std::vector<std::size_t> vertex_leaf_;
  std::optional<std::vector<std::size_t>> order_;
};

}  // namespace vpg
