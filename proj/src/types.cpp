#include "peelkit/types.hpp"

#include <cmath>

namespace peelkit {

MetricKind metric_kind_from_string(const std::string& s) {
  if (s == "euclidean") return MetricKind::euclidean;
  if (s == "torus" || s == "flat_torus") return MetricKind::flat_torus;
  if (s == "angular" || s == "angular_sphere") return MetricKind::angular_sphere;
  if (s == "hyperbolic" || s == "hyperbolic_poincare") return MetricKind::hyperbolic_poincare;
  throw std::invalid_argument("unknown metric kind: " + s);
}

std::string to_string(MetricKind k) {
  switch (k) {
    case MetricKind::euclidean: return "euclidean";
    case MetricKind::flat_torus: return "flat_torus";
    case MetricKind::angular_sphere: return "angular_sphere";
    case MetricKind::hyperbolic_poincare: return "hyperbolic_poincare";
  }
  return "?";
}

std::string to_string(SaturationReason r) {
  switch (r) {
    case SaturationReason::none: return "none";
    case SaturationReason::radius: return "radius";
    case SaturationReason::cardinality: return "cardinality";
    case SaturationReason::exhausted: return "exhausted";
  }
  return "?";
}

PointCloud PointCloud::make(Matrix coords, MetricKind kind) {
  if (coords.rows() < 1 || coords.cols() < 1)
    throw std::invalid_argument("point cloud needs N >= 1, m >= 1");
  if (!coords.allFinite()) throw std::invalid_argument("point cloud has non-finite coordinates");

  if (kind == MetricKind::flat_torus) {
    for (Eigen::Index i = 0; i < coords.rows(); ++i)
      for (Eigen::Index j = 0; j < coords.cols(); ++j) {
        double v = std::fmod(coords(i, j), 1.0);
        if (v < 0.0) v += 1.0;
        if (v >= 1.0) v = 0.0;  // fmod rounding at the seam
        coords(i, j) = v;
      }
  }
  if (kind == MetricKind::hyperbolic_poincare) {
    for (Eigen::Index i = 0; i < coords.rows(); ++i)
      if (coords.row(i).norm() >= 1.0)
        throw std::invalid_argument("hyperbolic point outside the open unit disk at row " +
                                    std::to_string(i));
  }
  return PointCloud{std::move(coords), kind};
}

DistanceMatrix DistanceMatrix::from(Matrix d, bool check_triangle) {
  const Eigen::Index n = d.rows();
  if (n != d.cols()) throw std::invalid_argument("distance matrix must be square");
  if (!d.allFinite()) throw std::invalid_argument("distance matrix has non-finite entries");

  const double scale = std::max(1.0, d.cwiseAbs().maxCoeff());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (std::abs(d(i, i)) > 0.0)
      throw std::invalid_argument("distance matrix diagonal must be exactly zero");
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (std::abs(d(i, j) - d(j, i)) > 1e-12 * scale)
        throw std::invalid_argument("distance matrix is not symmetric");
      if (d(i, j) < 0.0) throw std::invalid_argument("negative distance entry");
      // Exact symmetry downstream.
      const double v = 0.5 * (d(i, j) + d(j, i));
      d(i, j) = d(j, i) = v;
    }
  }
  if (check_triangle) {
    for (Eigen::Index i = 0; i < n; ++i)
      for (Eigen::Index j = 0; j < n; ++j)
        for (Eigen::Index k = 0; k < n; ++k)
          if (d(i, j) > d(i, k) + d(k, j) + 1e-9 * scale)
            throw std::invalid_argument("triangle inequality violated");
  }
  return DistanceMatrix{std::move(d)};
}

DistanceMatrix DistanceMatrix::restricted(const IndexSet& idx) const {
  Matrix sub(idx.size(), idx.size());
  for (size_t a = 0; a < idx.size(); ++a)
    for (size_t b = 0; b < idx.size(); ++b) sub(a, b) = d(idx[a], idx[b]);
  return DistanceMatrix{std::move(sub)};
}

void ThresholdPolicy::validate(int n_points) const {
  if (radial_cap && *radial_cap <= 0.0) throw std::invalid_argument("radial cap must be > 0");
  if (cardinality_cap && *cardinality_cap <= 0) throw std::invalid_argument("cardinality cap must be > 0");
  if (n_points > 2000 && !radial_cap && !cardinality_cap)
    throw std::invalid_argument("datasets with N > 2000 need at least one finite cap");
}

NeighborhoodFamily NeighborhoodFamily::knn(int k) {
  if (k < 3) throw std::invalid_argument("knn family needs k >= 3");
  return {FamilyKind::knn, k};
}

std::string NeighborhoodFamily::tag() const {
  switch (kind) {
    case FamilyKind::knn: return "knn" + std::to_string(k);
    case FamilyKind::peel: return "peel";
    case FamilyKind::iterated_peel: return "iterated_peel";
    case FamilyKind::double_radius: return "double_radius";
  }
  return "?";
}

}  // namespace peelkit
