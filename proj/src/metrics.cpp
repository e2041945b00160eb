#include "peelkit/metrics.hpp"

#include "peelkit/parallel.hpp"

#include <cmath>

namespace peelkit {

namespace {

double torus_distance(const Eigen::RowVectorXd& a, const Eigen::RowVectorXd& b) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.size(); ++j) {
    double delta = std::abs(a[j] - b[j]);
    delta = std::min(delta, 1.0 - delta);  // per-axis wraparound
    s += delta * delta;
  }
  return std::sqrt(s);
}

double angular_distance(const Eigen::RowVectorXd& a, const Eigen::RowVectorXd& b, bool strict) {
  const double na = a.norm(), nb = b.norm();
  if (na == 0.0 || nb == 0.0)
    throw std::invalid_argument("angular metric undefined for the zero vector");
  if (strict && (std::abs(na - 1.0) > 1e-9 || std::abs(nb - 1.0) > 1e-9))
    throw std::invalid_argument("angular metric with strict_unit_norm requires unit vectors");
  double c = a.dot(b) / (na * nb);
  c = std::clamp(c, -1.0, 1.0);
  return std::acos(c);
}

double poincare_distance(const Eigen::RowVectorXd& a, const Eigen::RowVectorXd& b) {
  // 2 atanh(||a-b|| / sqrt((1-||a||^2)(1-||b||^2) + ||a-b||^2)); reduces to
  // 2 atanh |(z-z')/(1 - conj(z) z')| in two dimensions.
  const double diff2 = (a - b).squaredNorm();
  if (diff2 == 0.0) return 0.0;
  const double qa = 1.0 - a.squaredNorm();
  const double qb = 1.0 - b.squaredNorm();
  if (qa <= 0.0 || qb <= 0.0)
    throw std::invalid_argument("hyperbolic metric requires points inside the open unit disk");
  const double t = std::sqrt(diff2 / (qa * qb + diff2));
  return 2.0 * std::atanh(t);
}

}  // namespace

double point_distance(const PointCloud& cloud, int i, int j, const MetricOptions& opts) {
  const auto a = cloud.coords.row(i);
  const auto b = cloud.coords.row(j);
  switch (cloud.metric) {
    case MetricKind::euclidean: return (a - b).norm();
    case MetricKind::flat_torus: return torus_distance(a, b);
    case MetricKind::angular_sphere: return angular_distance(a, b, opts.strict_unit_norm);
    case MetricKind::hyperbolic_poincare: return poincare_distance(a, b);
  }
  return 0.0;
}

DistanceMatrix pairwise_distances(const PointCloud& cloud, const MetricOptions& opts) {
  const int n = cloud.n();
  Matrix d = Matrix::Zero(n, n);
  parallel_for(n, [&](int i) {
    for (int j = 0; j < i; ++j) {
      d(i, j) = point_distance(cloud, i, j, opts);
    }
  });
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < i; ++j) d(j, i) = d(i, j);
  return DistanceMatrix{std::move(d)};
}

}  // namespace peelkit
