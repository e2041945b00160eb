#pragma once

#include "peelkit/metrics.hpp"
#include "peelkit/types.hpp"

#include <memory>

namespace peelkit {

/// Exact nearest-neighbor index over either a point cloud or a prebuilt
/// distance matrix. Rows are computed on demand (no N^2 storage for
/// coordinate-backed clouds). Neighbor lists are sorted ascending by
/// distance with the query point excluded.
class NeighborIndex {
 public:
  explicit NeighborIndex(PointCloud cloud, MetricOptions opts = {});
  explicit NeighborIndex(DistanceMatrix d);

  int n() const;
  double distance(int i, int j) const;

  /// All other points sorted by distance from i (ties by index).
  std::vector<std::pair<double, int>> sorted_neighbors(int i) const;

  /// Distance from i to its k-th nearest neighbor (k >= 1).
  double kth_neighbor_distance(int i, int k) const;

  /// Dense distance submatrix over a member set (local indexing).
  DistanceMatrix submatrix(const IndexSet& members) const;

  const PointCloud* cloud() const;

 private:
  struct Impl;
  std::shared_ptr<const Impl> impl_;
};

/// Twice the median k-th nearest neighbor distance with k = ceil(log2 N)
/// clamped to N-1.
double default_radial_threshold(const NeighborIndex& index);

/// Grows the closed ball around x through the sorted distinct neighbor
/// distances, peeling the restricted metric at each step, until x drops out
/// of the peel support or a threshold saturates the scan.
PeelNeighborhood peel_neighborhood(int x, const NeighborIndex& index,
                                   const ThresholdPolicy& policy);

struct NeighborhoodSet {
  std::vector<PeelNeighborhood> items;
  std::vector<std::pair<int, std::string>> errors;  // (basepoint, message)
};

/// Maps peel_neighborhood over every basepoint (parallel; deterministic).
/// Per-point failures are collected, not fatal.
NeighborhoodSet all_neighborhoods(const NeighborIndex& index, const ThresholdPolicy& policy);

/// nu_0 = {x}; nu_1 = members; nu_2 = union of members over y in nu_1(x).
IndexSet iterated_neighborhood(int x, int level, const std::vector<PeelNeighborhood>& nbhds);

/// Undirected graph with an edge j-k whenever k is in nu(j) or j is in nu(k),
/// weighted by distance. exclude_saturated drops edges contributed by
/// saturated basepoints.
WeightedGraph neighborhood_graph(const std::vector<PeelNeighborhood>& nbhds,
                                 const NeighborIndex& index, bool exclude_saturated = false);

/// Peel of the metric restricted to the radius-saturated points, embedded as
/// a length-N distribution (zeros elsewhere). Needs >= 2 such points.
PeelDistribution approximate_peel(const NeighborIndex& index,
                                  const std::vector<PeelNeighborhood>& nbhds);

/// min over x of ||x|| - rho(x) using the thresholded radii. Positive values
/// certify that the neighborhood cover leaves a hole around the origin.
double hole_proxy(const PointCloud& cloud, const std::vector<PeelNeighborhood>& nbhds);

}  // namespace peelkit
