#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vpg/bd_solver.hpp"
#include "vpg/graph.hpp"
#include "vpg/rational.hpp"
#include "vpg/representation.hpp"
#include "vpg/solution.hpp"

namespace vpg {

/// X_i: paths with a horizontal grid-edge from column i to i+1, i.e.
/// x_min <= i < i+1 <= x_max. One set per column (the last is empty). The
/// representation must start at column 0.
std::vector<VertexSet> compute_x_sets(const GridRep& r);

/// V_j: paths meeting column j, x_min <= j <= x_max.
std::vector<VertexSet> compute_v_sets(const GridRep& r);

struct ShiftConfigIS {
  Rational epsilon;
  std::int64_t c = 1;
  std::int64_t k = 0;  // ceil(1/epsilon)

  std::int64_t period() const { return k * c; }
};

struct ShiftConfigDS {
  Rational epsilon;
  std::int64_t c = 1;
  std::int64_t k = 0;  // ceil(c(2/epsilon - 1))

  std::int64_t shifts() const { return k + c; }
  /// Exact solving is used when m <= k + 2c - 1.
  bool needs_windows(std::int64_t m) const { return m > k + 2 * c - 1; }
  /// r = ceil((m - s - c) / (k + c)).
  std::int64_t last_window(std::int64_t m, std::int64_t s) const;
};

/// Both throw PreconditionError unless 0 < epsilon < 1 and c >= 1.
ShiftConfigIS make_is_config(const Rational& epsilon, std::int64_t c);
ShiftConfigDS make_ds_config(const Rational& epsilon, std::int64_t c);

struct Window {
  std::int64_t index = 0;
  bool boundary = false;  // first or last window: one exterior side only
  VertexSet vertices;
  VertexSet exterior_left;
  VertexSet exterior_right;
  VertexSet interior;
};

/// Windows 0..r for shift s, from the X and V families of a representation
/// with m = v.size() columns. Throws PreconditionError when m <= k + 2c - 1.
std::vector<Window> build_windows(const std::vector<VertexSet>& x, const std::vector<VertexSet>& v,
                                  const ShiftConfigDS& cfg, std::int64_t s);

/// Throws InvariantError unless every vertex is interior to some window,
/// windows two or more apart are disjoint, and consecutive windows meet in
/// exactly the union of the c columns they share.
void check_windows(const std::vector<Window>& windows, const std::vector<VertexSet>& v,
                   const ShiftConfigDS& cfg, std::int64_t s);

struct WindowVariant {
  std::string name;                   // "I", "L", "R" or "LR"
  std::vector<std::size_t> vertices;  // sorted indices into g
  Graph graph;                        // induced on vertices, exterior sides made cliques
};

/// I, L, R, LR for inner windows; I and LR for boundary windows.
std::vector<WindowVariant> window_variants(const Graph& g, const Window& w);

struct WindowSolve {
  VertexSet chosen;          // indices into the component graph
  std::size_t variant = 0;   // position in window_variants order
  std::size_t width = 0;     // certified width, see PtasResult
};

/// Smallest dominating set over the variants of w, each solved exactly on
/// the caterpillar of the window's own representation.
WindowSolve solve_window(const GridRep& r, const Graph& g, const Window& w, const SolveOptions& options = {});

struct PtasOptions {
  std::optional<std::int64_t> c;  // default: measured, at least 1
  std::optional<int> t;           // default: measured grid-edge load
  std::size_t jobs = 1;
  SolveOptions solve;
};

struct ShiftDiagnostic {
  std::size_t component = 0;
  std::size_t shift = 0;
  std::size_t parts = 0;      // slices (IS) or windows (DS); 1 when solved exactly
  std::size_t max_width = 0;  // largest certified width among them
  std::size_t value = 0;
};

struct PtasResult {
  Graph graph;
  Solution solution;
  std::int64_t k = 0;
  std::int64_t c = 1;
  int t = 1;
  /// Bound every certified width must respect: 3t(kc+1) for IS,
  /// 3t(k+4c+1)+2 for DS.
  std::size_t width_budget = 0;
  std::vector<ShiftDiagnostic> diagnostics;
};

/// Shifting scheme for independent set, run on each connected component.
/// Certified width of a slice: mm-width of its caterpillar. Throws
/// PreconditionError when the representation breaks the given c or t,
/// BudgetError when a width exceeds the budget or a solver table overflows.
PtasResult baker_is(const GridRep& r, const Rational& epsilon, const PtasOptions& options = {});

/// Shifting scheme for dominating set, run on each connected component.
/// Certified width of a window: mm-width of its caterpillar plus one per
/// exterior clique.
PtasResult baker_ds(const GridRep& r, const Rational& epsilon, const PtasOptions& options = {});

/// "component,shift,parts,max_width,value" then one row per diagnostic.
std::string diagnostics_csv(const std::vector<ShiftDiagnostic>& rows);

}  // namespace vpg
