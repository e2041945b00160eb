#pragma once

#include "peelkit/types.hpp"

namespace peelkit {

/// Classical multidimensional scaling: double-center -d.*d/2, keep the top-k
/// eigenpairs with eigenvalues clipped at zero. Requires k <= N-1.
/// Rank-deficient inputs yield trailing zero coordinates.
Matrix classical_mds(const DistanceMatrix& d, int k);

}  // namespace peelkit
