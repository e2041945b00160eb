#pragma once

#include "peelkit/graph.hpp"
#include "peelkit/types.hpp"

#include <nlohmann/json_fwd.hpp>
#include <string>

namespace peelkit {

/// 64-bit decimal text with 17 significant digits.
std::string format_double(double x);

/// Point cloud CSV: N rows x m columns, optional header (auto-detected).
Matrix read_csv_matrix(const std::string& path);
void write_csv_matrix(const std::string& path, const Matrix& m,
                      const std::vector<std::string>& header = {});

/// Square distance-matrix CSV (used with --matrix).
DistanceMatrix read_csv_distance_matrix(const std::string& path, bool check_triangle = false);

/// Edge-list CSV: j, k, weight.
void write_edge_list(const std::string& path, const WeightedGraph& g);
WeightedGraph read_edge_list(const std::string& path, int n);

nlohmann::json peel_to_json(const PeelDistribution& p, double quadratic_entropy_value);
nlohmann::json neighborhood_to_json(const PeelNeighborhood& nb);

void write_json(const std::string& path, const nlohmann::json& j);

}  // namespace peelkit
