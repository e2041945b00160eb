#pragma once

#include "peelkit/neighborhoods.hpp"
#include "peelkit/types.hpp"

namespace peelkit {

struct EssaOptions {
  int pair_cap = 10000;        // unordered-pair subsample cap
  std::uint64_t seed = 0;      // per-point streams derive from this
  bool center_at_centroid = true;  // false centers at the basepoint
};

/// Mean |sin(angle)| over (subsampled) unordered pairs of vectors centered
/// at `center`; zero vectors are discarded. Needs >= 2 usable vectors.
double essa_statistic(const Matrix& local_points, const Vector& center,
                      const EssaOptions& opts = {});

/// E|sin(angle)| between isotropic directions in R^m, via the gamma-ratio
/// closed form for the sin^(m-2) angle density; strictly increasing, -> 1.
double ess_expectation(double m);

/// Inverts ess_expectation by bisection on [1, 1e4] (tolerance 1e-6).
double essa_dimension_from_statistic(double statistic);

double essa_dimension(const Matrix& local_points, const Vector& center,
                      const EssaOptions& opts = {});

struct VgtOptions {
  int window_lo = -1;  // 1-based inclusive indices into the sorted radii;
  int window_hi = -1;  // defaults to [ceil(k/4), k] with k = count
  bool robust = false;
};

/// Volume growth transform: slope of log(count) on log(radius) over the
/// window. Robust mode runs IRLS with bisquare weights (tuning constant
/// 4.685 * MAD), at most 25 iterations, 1e-8 slope-change convergence.
double vgt_dimension(const std::vector<double>& sorted_radii, const VgtOptions& opts = {});

struct FieldOptions {
  bool use_mds = false;  // forced on for non-Euclidean metric kinds
  EssaOptions essa;
};

/// Per-point dimension estimates for a neighborhood family. Points whose
/// neighborhood has fewer than 3 members get the NaN sentinel.
DimensionField local_dimension_field(const NeighborIndex& index,
                                     const NeighborhoodFamily& family,
                                     const std::vector<PeelNeighborhood>& nbhds,
                                     const FieldOptions& opts = {});

/// Peel-weighted finite-difference gradient of f at x over the member set
/// lambda (which must contain x): sum of p_* weighted difference quotients
/// along unit directions. Coordinates must be Euclidean.
Vector gradient_estimate(const std::vector<double>& f, int x, const IndexSet& lambda,
                         const Matrix& coords);

struct ScoreOptions {
  int level = 2;                // j in {1, 2}
  std::string alpha = "median"; // or "mean", "max"
  bool log_scale = true;
};

/// Gradient-norm singularity score: s_j(x) is the norm of the peel-weighted
/// gradient over nu_j(x) of the (log) alpha-summary of the dimension field
/// on nu_j. NaN dimension values inside nu_j propagate to a NaN score.
ScoreField gradient_norm_score(const NeighborIndex& index,
                               const std::vector<PeelNeighborhood>& nbhds,
                               const DimensionField& dims, const ScoreOptions& opts = {});

/// Kendall tau-b with tie corrections; NaN when either sequence is all ties.
double kendall_tau_b(const std::vector<double>& a, const std::vector<double>& b);

/// Summary statistic by name ("median", "mean", "max").
double summarize(const std::vector<double>& values, const std::string& alpha);

}  // namespace peelkit
