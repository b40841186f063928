#pragma once

#include <string>
#include <vector>

#include "vpg/representation.hpp"

namespace vpg {

/// Rewrites a 0-bend contact representation of a subcubic triangle-free graph
/// so that
///   (b) a path strictly contains another path's endpoint iff its vertex has
///       degree 3,
///   (c) horizontal paths of degree-2 vertices have length >= min_len,
///   (d) both arms of a horizontal degree-3 path, measured from its interior
///       contact point, have length >= min_len,
///   (e) paths of degree-0 and degree-1 vertices have length 1,
/// keeping the intersection graph, the grid step and every row. Columns are
/// relabelled by the tightest strictly increasing map meeting (c) and (d), so
/// (a) the result spans at most (2n-1)*min_len + 1 columns, starting at x = 0.
/// min_len must be 4 or 5. Throws PreconditionError when the input has bends,
/// is not CPG, has crossing paths, or its graph is not subcubic and
/// triangle-free.
GridRep normalize_b0cpg(const GridRep& r, int min_len);

/// Failed properties of a normalized representation, one message each.
std::vector<std::string> normalization_audit(const GridRep& r, int min_len);

}  // namespace vpg
