#pragma once

#include "peelkit/types.hpp"

namespace peelkit {

/// Spectral strict-negative-type check: reports the largest eigenvalue of
/// the quadratic form x' d x restricted to the hyperplane 1'x = 0.
/// tol < 0 selects the scale-relative default 1e-10 * max(d).
/// N = 1 is vacuously strict negative type (gamma = +inf).
SntCertificate is_strict_negative_type(const DistanceMatrix& d, double tol = -1.0);

}  // namespace peelkit
