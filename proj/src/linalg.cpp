#include "peelkit/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <Eigen/LU>
#include <Eigen/SVD>

#include <cmath>

namespace peelkit {

double operator_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  if (!m.allFinite()) throw std::invalid_argument("operator_norm: non-finite entries");
  Eigen::JacobiSVD<Matrix> svd(m);
  return svd.singularValues()(0);
}

Vector solve_symmetric(const Matrix& a, const Vector& b) {
  const Eigen::Index n = a.rows();
  Eigen::PartialPivLU<Matrix> lu(a);
  // Partial-pivot LU has no rank signal; detect breakdown from the result.
  Vector x = lu.solve(b);
  if (!x.allFinite()) throw numeric_error("singular linear system");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff() * x.cwiseAbs().maxCoeff());
  Vector r = b - a * x;
  const double target = 1e-10 * std::sqrt(static_cast<double>(n));
  if (r.norm() > target * scale) {
    x += lu.solve(r);
    r = b - a * x;
  }
  if (!x.allFinite() || r.norm() > 1e-6 * scale * std::sqrt(static_cast<double>(n)))
    throw numeric_error("linear solve failed to reach residual tolerance");
  return x;
}

}  // namespace peelkit
