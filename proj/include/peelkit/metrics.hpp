#pragma once

#include "peelkit/types.hpp"

namespace peelkit {

struct MetricOptions {
  // Angular metric: rescale rows to unit norm before taking arccos of the
  // cosine similarity. With strict_unit_norm the inputs must already be
  // unit vectors to within 1e-9.
  bool strict_unit_norm = false;
};

/// Distance between two coordinate rows under the cloud's metric kind.
double point_distance(const PointCloud& cloud, int i, int j, const MetricOptions& opts = {});

/// Full pairwise distance matrix. Parallel over row blocks; entries are
/// computed independently so the result is bitwise deterministic.
DistanceMatrix pairwise_distances(const PointCloud& cloud, const MetricOptions& opts = {});

}  // namespace peelkit
