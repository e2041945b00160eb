#pragma once

#include "peelkit/types.hpp"

namespace peelkit {

/// Z_jk = exp(-t d_jk); positive definite for strict-negative-type d, t > 0.
Matrix similarity_matrix(const DistanceMatrix& d, double t);

/// Solves Z w = 1. Cholesky factorization failure signals a
/// non-positive-definite similarity matrix; residual contract 1e-9 * sqrt(N).
WeightVector weighting(const Matrix& z, double scale_t);

/// Diversity of order q of distribution p against similarity matrix Z.
/// q = 1 uses the product formula, q = inf uses 1 / max over support of (Zp)_j.
double diversity(const Matrix& z, const Vector& p, double q);

/// p' d p.
double quadratic_entropy(const DistanceMatrix& d, const Vector& p);

}  // namespace peelkit
