#pragma once

#include "peelkit/rng.hpp"
#include "peelkit/types.hpp"

namespace peelkit {

enum class NoiseMode { std_dev, expected_norm };

struct NoiseSpec {
  NoiseMode mode = NoiseMode::expected_norm;
  double value = 0.0;   // 0 disables the noise
  int target_dim = 0;   // >= intrinsic embedding dimension
};

struct HairBallSpec {
  int m = 10;        // sphere dimension: S^m in R^(m+1)
  int n_sphere = 1000;
  int n_interval = 5;
  bool attach = false;  // include the junction point itself
  bool match = false;   // match interval spacing to the sphere's NN spacing
};

struct LabeledCloud {
  PointCloud cloud;
  std::vector<int> labels;
};

Matrix sample_ball(int m, int n, std::uint64_t seed);
/// Uniform on S^m, the unit sphere in R^(m+1).
Matrix sample_sphere(int m, int n, std::uint64_t seed);
Matrix sample_gaussian(int m, int n, std::uint64_t seed);
Matrix sample_torus(int m, int n, std::uint64_t seed);

/// Zero-pads to target_dim and adds isotropic Gaussian noise. expected_norm
/// mode picks the per-axis deviation so E||noise|| equals the given value.
PointCloud embed_with_noise(const Matrix& points, const NoiseSpec& spec, std::uint64_t seed);

/// Mean of the chi distribution with dim degrees of freedom at unit scale.
double expected_gaussian_norm(int dim);

/// Uniform by area over the annulus inner <= r <= outer.
Matrix sample_annulus(double inner, double outer, int n, std::uint64_t seed);

/// Torus of major radius 2 whose tube radius sin(theta/2) vanishes at
/// theta = 0, producing a single pinch point.
Matrix sample_pinched_torus(int n, std::uint64_t seed);

/// Approximate expected nearest-neighbor angular spacing for N uniform
/// points on S^(m-1): the mean of the limiting Weibull distribution.
double weibull_mean_spacing(int m, int n);

/// Sphere stratum plus interval stratum along +e1 from (1,0,...,0).
/// Labels: 0 sphere, 1 interval, 2 attachment point.
LabeledCloud sample_hair_ball(const HairBallSpec& spec, std::uint64_t seed);

/// Circle / 2-ball / 3-ball strata centered at x = 0, 3, 6. Labels are the
/// stratum dimensions 1/2/3.
LabeledCloud sample_stratified_cdb(int n1, int n2, int n3, std::uint64_t seed);

}  // namespace peelkit
