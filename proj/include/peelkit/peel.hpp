#pragma once

#include "peelkit/types.hpp"

namespace peelkit {

/// The quadratic-entropy maximizer over the probability simplex, computed by
/// support restriction: start from p = d^-1 1 / (1' d^-1 1); while any entry
/// is negative, drop the non-positive entries and re-solve on the restricted
/// matrix. Requires strict negative type input; a singular restricted solve
/// throws numeric_error naming the offending support.
PeelDistribution peel(const DistanceMatrix& d);

/// Peel of d restricted to a subset, reported in the subset's local indices.
PeelDistribution peel_restricted(const DistanceMatrix& d, const IndexSet& subset);

/// Support of peel(d restricted to subset), mapped back to global indices.
IndexSet peel_support_of(const DistanceMatrix& d, const IndexSet& subset);

/// Repeated peeling: layer L is the peel support of the points not in layers
/// < L. Stops when at most one point remains (emitted as a final singleton
/// layer) or when max_layers is reached.
std::vector<IndexSet> peel_layers(const DistanceMatrix& d, int max_layers);

/// Normalized energy distance between distributions on the same space,
/// scaled into [0,1] by twice the diameter.
double ned(const Vector& p, const Vector& q, const DistanceMatrix& d);

/// Model matrix for high-dimensional Gaussian neighbors: the origin plus a
/// regular simplex, first row/column 1 off-diagonal and sqrt(2)*(11'-I) in
/// the remaining block.
DistanceMatrix model_distance_matrix(int n);

/// Whether the origin (index 0) lies in the peel of the N-point model
/// matrix; true exactly for N <= 4.
bool model_origin_in_peel(int n);

/// Drop-one support test: for support = peel(d) and one dropped member,
/// peel(d restricted to the remainder) keeps the whole remainder iff
/// w0 restricted to it plus w0_dropped * d_I^-1 delta stays positive.
/// Returns that sign condition.
bool drop_one_condition(const DistanceMatrix& d, const IndexSet& support, int dropped);

/// Sufficient condition for peel(d|_I) = I along an explicit enumeration of
/// the points of peel(d) - I, one removal per step: at every step the
/// centered part of d^-1 delta must be dominated by its mean plus the worst
/// weight ratio. Conservative; used by the conjecture scan.
bool hereditary_sufficient(const DistanceMatrix& d, const IndexSet& peel_support,
                           const IndexSet& target, const IndexSet& removal_order);

}  // namespace peelkit
