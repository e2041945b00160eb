#pragma once

#include "peelkit/types.hpp"

namespace peelkit {

/// Monotone-chain convex hull of 2-D points. Returns the indices of the hull
/// vertices (ascending); collinear boundary points are excluded.
IndexSet convex_hull_2d(const Matrix& points);

}  // namespace peelkit
