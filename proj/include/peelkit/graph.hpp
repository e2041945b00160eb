#pragma once

#include "peelkit/types.hpp"

#include <map>

namespace peelkit {

/// Edges between all pairs within distance r.
WeightedGraph radial_graph(const DistanceMatrix& d, double r);

/// Union-symmetrized k-nearest-neighbor graph; ties at the k-th distance are
/// all included.
WeightedGraph knn_graph(const DistanceMatrix& d, int k);

struct GraphMetrics {
  double efficiency = 0.0;
  double efficiency_per_edge = 0.0;
  double efficiency_per_length = 0.0;
  int components = 0;
};

/// Mean inverse shortest-path distance over ordered pairs; disconnected
/// pairs contribute 0. Per-edge and per-length variants divide by the full
/// adjacency-matrix sums (each undirected edge counted twice).
double efficiency(const WeightedGraph& g);
double efficiency_per_edge(const WeightedGraph& g);
double efficiency_per_length(const WeightedGraph& g);
GraphMetrics graph_metrics(const WeightedGraph& g);

struct Components {
  int count = 0;
  std::vector<int> labels;  // smallest-index representative per component
};
Components connected_components(const WeightedGraph& g);

/// All-pairs shortest-path distances (inf where disconnected).
Matrix shortest_path_distances(const WeightedGraph& g);

using Histogram = std::map<long, long>;

/// 1-Wasserstein distance between integer-keyed count histograms after
/// normalizing each to a distribution.
double wasserstein1_hist(const Histogram& h1, const Histogram& h2);

}  // namespace peelkit
