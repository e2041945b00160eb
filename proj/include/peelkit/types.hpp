#pragma once

#include <Eigen/Dense>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace peelkit {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using IndexSet = std::vector<int>;

enum class MetricKind { euclidean, flat_torus, angular_sphere, hyperbolic_poincare };

MetricKind metric_kind_from_string(const std::string& s);
std::string to_string(MetricKind k);

/// N points in m ambient coordinates with a declared metric kind.
/// Construct through make() so torus coordinates are canonicalized into
/// [0,1) and hyperbolic points are checked against the open unit disk.
struct PointCloud {
  Matrix coords;
  MetricKind metric = MetricKind::euclidean;

  int n() const { return static_cast<int>(coords.rows()); }
  int dim() const { return static_cast<int>(coords.cols()); }

  static PointCloud make(Matrix coords, MetricKind kind = MetricKind::euclidean);
};

/// N x N symmetric nonnegative matrix with zero diagonal.
struct DistanceMatrix {
  Matrix d;

  int n() const { return static_cast<int>(d.rows()); }

  // Symmetry and diagonal are always enforced (1e-12 relative);
  // the triangle inequality check (1e-9 relative) is opt-in.
  static DistanceMatrix from(Matrix d, bool check_triangle = false);

  DistanceMatrix restricted(const IndexSet& idx) const;
  double max_entry() const { return d.size() ? d.maxCoeff() : 0.0; }
};

struct SntCertificate {
  bool is_snt = false;
  double worst_rayleigh = 0.0;  // max of x' d x over unit x with 1'x = 0
  double gamma = 0.0;           // -worst_rayleigh when N >= 2
};

struct PeelDistribution {
  Vector p;          // length N, p >= 0, sums to 1
  IndexSet support;  // {j : p_j > 0}, ascending
};

struct WeightVector {
  Vector w;
  double scale_t = 0.0;
  double magnitude = 0.0;  // sum of w
};

enum class SaturationReason { none, radius, cardinality, exhausted };

std::string to_string(SaturationReason r);

struct PeelNeighborhood {
  int basepoint = -1;
  double rho = 0.0;  // +inf when the scan exhausts X with x still in the peel
  IndexSet members;  // includes basepoint, ascending
  bool saturated = false;
  SaturationReason reason = SaturationReason::none;
};

struct ThresholdPolicy {
  std::optional<double> radial_cap;
  std::optional<int> cardinality_cap;

  static ThresholdPolicy none() { return {}; }
  static ThresholdPolicy radius(double r) { return {r, std::nullopt}; }
  static ThresholdPolicy cardinality(int k) { return {std::nullopt, k}; }
  void validate(int n_points) const;
};

struct WeightedGraph {
  struct Edge {
    int u = 0, v = 0;
    double w = 0.0;
  };
  int n = 0;
  std::vector<Edge> edges;
};

enum class FamilyKind { knn, peel, iterated_peel, double_radius };

struct NeighborhoodFamily {
  FamilyKind kind = FamilyKind::peel;
  int k = 0;  // knn only; must be >= 3

  static NeighborhoodFamily knn(int k);
  static NeighborhoodFamily peel() { return {FamilyKind::peel, 0}; }
  static NeighborhoodFamily iterated_peel() { return {FamilyKind::iterated_peel, 0}; }
  static NeighborhoodFamily double_radius() { return {FamilyKind::double_radius, 0}; }
  std::string tag() const;
};

/// Per-point real estimates; NaN marks points where the estimate is undefined.
struct DimensionField {
  std::vector<double> values;
  std::string family;
};

struct ScoreField {
  std::vector<double> values;  // NaN where undefined
  int level = 2;               // j in {1, 2}
  std::string alpha = "median";
};

class numeric_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace peelkit
