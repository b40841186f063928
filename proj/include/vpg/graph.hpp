#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vpg/representation.hpp"
#include "vpg/vertex_set.hpp"

namespace vpg {

/// Simple undirected graph with string vertex ids. Adjacency is kept both as
/// a bitset row per vertex and as an edge list (u < v, insertion order).
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::vector<std::string> ids);

  std::size_t size() const { return ids_.size(); }
  const std::vector<std::string>& ids() const { return ids_; }
  const std::string& id(std::size_t v) const { return ids_[v]; }
  std::optional<std::size_t> index_of(const std::string& id) const;

  /// Adds uv unless present. Self-loops are rejected.
  void add_edge(std::size_t u, std::size_t v);
  bool adjacent(std::size_t u, std::size_t v) const { return adj_[u].test(v); }
  const VertexSet& neighbors(std::size_t v) const { return adj_[v]; }
  VertexSet closed_neighbors(std::size_t v) const;
  std::size_t degree(std::size_t v) const { return adj_[v].count(); }
  const std::vector<std::pair<std::size_t, std::size_t>>& edges() const { return edges_; }
  std::size_t edge_count() const { return edges_.size(); }

  VertexSet empty_set() const { return VertexSet(size()); }
  /// Union of open neighborhoods of the members of s.
  VertexSet neighborhood(const VertexSet& s) const;

  /// Induced subgraph on the given vertices, renumbered in the given order.
  Graph induced(std::span<const std::size_t> keep) const;

  /// The representation this graph was extracted from, if any. Vertex i
  /// corresponds to origin()->path(i).
  const std::shared_ptr<const GridRep>& origin() const { return origin_; }
  void set_origin(std::shared_ptr<const GridRep> r) { origin_ = std::move(r); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.ids_ == b.ids_ && a.adj_ == b.adj_;
  }

 private:
  std::vector<std::string> ids_;
  std::vector<VertexSet> adj_;
  std::vector<std::pair<std::size_t, std::size_t>> edges_;
  std::shared_ptr<const GridRep> origin_;
};

/// Vertex bipartition (A, complement of A).
struct Cut {
  VertexSet side_a;
  VertexSet side_b;

  Cut() = default;
  explicit Cut(VertexSet a) : side_a(std::move(a)), side_b(side_a.complement()) {}
};

/// One vertex per path, edge iff the paths share a grid-point.
Graph intersection_graph(const GridRep& r);

/// Components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<std::size_t>> connected_components(const Graph& g);

struct StructureFlags {
  bool triangle_free = true;
  bool subcubic = true;
  bool bipartite = true;
  std::optional<bool> planar;
};

StructureFlags structural_checks(const Graph& g, bool check_planarity = false);

/// "n m" header, then "u v" per edge with vertex indices.
std::string export_edge_list(const Graph& g);

}  // namespace vpg
