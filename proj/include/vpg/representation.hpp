#pragma once

// Grid-path representations: the data model and the operations that act on a
// representation as a geometric object (traces, projections, refinement,
// restriction, grid-edge loads, constraint validation).
//
// Coordinates are integers in units of the current grid step, with x the
// column (growing rightward) and y the row (growing upward).

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "vpg/rational.hpp"

namespace vpg {

struct GridPoint {
  std::int64_t x = 0;
  std::int64_t y = 0;

  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

struct GridPointHash {
  std::size_t operator()(const GridPoint& p) const noexcept {
    std::uint64_t h = static_cast<std::uint64_t>(p.x) * 0x9E3779B97F4A7C15ULL;
    h ^= static_cast<std::uint64_t>(p.y) + 0x7F4A7C159E3779B9ULL + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// Unit grid-edge, identified by its lower-left endpoint and orientation.
struct GridEdge {
  GridPoint origin;
  bool horizontal = true;

  GridPoint other() const {
    return horizontal ? GridPoint{origin.x + 1, origin.y} : GridPoint{origin.x, origin.y + 1};
  }

  friend auto operator<=>(const GridEdge&, const GridEdge&) = default;
};

enum class Flavor { VPG, CPG };

std::string to_string(Flavor f);

/// One vertex's path: its endpoints and bend-points in traversal order.
/// Consecutive points span a non-degenerate axis-parallel segment and every
/// interior point is a genuine 90 degree turn.
class GridPath {
 public:
  GridPath(std::string id, std::vector<GridPoint> points);

  const std::string& id() const { return id_; }
  std::span<const GridPoint> points() const { return points_; }
  const GridPoint& front() const { return points_.front(); }
  const GridPoint& back() const { return points_.back(); }

  std::size_t bends() const { return points_.size() - 2; }
  /// Number of grid-edges traversed.
  std::int64_t length() const;
  bool is_horizontal() const { return points_.size() == 2 && points_[0].y == points_[1].y; }
  bool is_vertical() const { return points_.size() == 2 && points_[0].x == points_[1].x; }

  friend bool operator==(const GridPath&, const GridPath&) = default;

 private:
  std::string id_;
  std::vector<GridPoint> points_;
};

/// Removes collinear interior points from a trace of unit steps, producing the
/// endpoint/bend sequence. The trace must have at least two points.
std::vector<GridPoint> compress_trace(std::span<const GridPoint> trace);

/// A grid step plus a set of paths kept sorted by id. Under the CPG flavor no
/// grid-edge is covered by two paths.
class GridRep {
 public:
  GridRep() = default;
  GridRep(Rational grid_step, Flavor flavor, std::vector<GridPath> paths);

  const Rational& grid_step() const { return grid_step_; }
  Flavor flavor() const { return flavor_; }
  std::span<const GridPath> paths() const { return paths_; }
  const GridPath& path(std::size_t i) const { return paths_[i]; }
  std::size_t size() const { return paths_.size(); }
  bool empty() const { return paths_.empty(); }

  /// Position of the path with this id in sorted order.
  std::optional<std::size_t> index_of(const std::string& id) const;

  friend bool operator==(const GridRep&, const GridRep&) = default;

 private:
  Rational grid_step_{1};
  Flavor flavor_ = Flavor::VPG;
  std::vector<GridPath> paths_;
};

/// Every grid-point of the path in traversal order, endpoints included.
std::vector<GridPoint> path_points(const GridPath& p);

struct HorizontalPart {
  std::int64_t x_min = 0;
  std::int64_t x_max = 0;

  std::int64_t length() const { return x_max - x_min; }
  friend bool operator==(const HorizontalPart&, const HorizontalPart&) = default;
};

HorizontalPart horizontal_part(const GridPath& p);

/// First/last intersections of every path with every other path, measured
/// along the path's own traversal.
struct IntersectionIndex {
  struct PairEntry {
    GridPoint first;
    GridPoint last;
    std::size_t first_position = 0;  // index into path_points of the owner
    std::size_t last_position = 0;
  };
  /// Keyed by (owner path index, other path index).
  std::map<std::pair<std::size_t, std::size_t>, PairEntry> pairs;
  std::vector<std::optional<GridPoint>> first_point;
  std::vector<std::optional<GridPoint>> last_point;
  std::vector<std::optional<std::size_t>> first_position;
  std::vector<std::optional<std::size_t>> last_position;

  const PairEntry* find(std::size_t p, std::size_t q) const {
    auto it = pairs.find({p, q});
    return it == pairs.end() ? nullptr : &it->second;
  }
};

IntersectionIndex build_intersection_index(const GridRep& r);

/// Halves the grid step and doubles every coordinate.
GridRep refine_grid(const GridRep& r);

/// Restriction to the given path ids, each path unchanged.
GridRep induced_subrepresentation(const GridRep& r, std::span<const std::string> keep);
/// Same, by path index; indices must be valid.
GridRep induced_subrepresentation(const GridRep& r, std::span<const std::size_t> keep);

/// Shifts every coordinate by (dx, dy).
GridRep translate(const GridRep& r, std::int64_t dx, std::int64_t dy);

/// Translates so that the smallest x over all points is zero.
GridRep translate_to_origin_column(const GridRep& r);

/// Columns spanned by the representation: (max x) - (min x) + 1, 0 if empty.
std::int64_t column_count(const GridRep& r);

struct EdgeLoad {
  std::map<GridEdge, int> load;
  int max_load = 0;
};

/// Number of distinct paths covering each unit grid-edge.
EdgeLoad grid_edge_load(const GridRep& r);

struct Constraints {
  std::optional<std::size_t> max_bends;
  std::optional<int> max_edge_load;
  std::optional<std::int64_t> max_horizontal;
  std::optional<Flavor> flavor;
};

struct ValidationIssue {
  enum class Kind { Bends, EdgeLoad, Horizontal, Flavor, SelfIntersection };
  Kind kind;
  std::string subject;  // path id or grid-edge
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> violations;
  /// Informational entries that do not make the report fail.
  std::vector<ValidationIssue> notes;

  bool ok() const { return violations.empty(); }
};

ValidationReport validate(const GridRep& r, const Constraints& constraints);

}  // namespace vpg
