#pragma once

#include "peelkit/types.hpp"

namespace peelkit {

/// Largest singular value, relative tolerance 1e-10.
double operator_norm(const Matrix& m);

/// Solves the symmetric system a x = b by partial-pivot LU with one step of
/// iterative refinement when the residual exceeds 1e-10 * sqrt(N).
/// Throws numeric_error if the system is numerically singular.
Vector solve_symmetric(const Matrix& a, const Vector& b);

}  // namespace peelkit
