#pragma once

#include "peelkit/types.hpp"

#include <complex>

namespace peelkit {

/// Genus-2 hyperbolic surface as the quotient of the Poincare disk by the
/// regular-octagon side-pairing group. Surface distances take the minimum of
/// disk distances over the identity and the 48 edge/vertex-adjacent
/// translates of one argument.
class BolzaSurface {
 public:
  BolzaSurface();

  using Complex = std::complex<double>;

  /// Circumradius of the fundamental octagon, 2^(-1/4).
  static double circumradius();

  bool in_fundamental_domain(Complex z, double slack = 0.0) const;

  /// Rejection sampling over the fundamental domain; aborts if the
  /// acceptance rate falls below 1 percent.
  std::vector<Complex> sample(int n, std::uint64_t seed) const;

  /// Greedy reduction to the minimal-norm orbit representative (lies in the
  /// closed fundamental domain).
  Complex reduce(Complex z) const;

  /// Surface distance between fundamental-domain points.
  double distance(Complex z1, Complex z2) const;

  DistanceMatrix distance_matrix(const std::vector<Complex>& pts) const;

  /// Generator action: side pairing k in [0, 8).
  Complex apply_generator(int k, Complex z) const;

  int translate_count() const;  // 48

  /// Hyperbolic distance on the Poincare disk, 2 atanh |(z-z')/(1-conj(z)z')|.
  static double disk_distance(Complex z1, Complex z2);

 private:
  struct Mobius {
    Complex a, b;  // z -> (a z + b) / (conj(b) z + conj(a)); |a|^2-|b|^2 = 1
    Complex operator()(Complex z) const;
    Mobius compose(const Mobius& o) const;
    Mobius inverse() const;
  };
  std::vector<Mobius> generators_;  // 8 side pairings
  std::vector<Mobius> translates_;  // 48 edge/vertex-adjacent copies
  std::vector<Complex> hole_centers_;
  double hole_radius_ = 0.0;
};

}  // namespace peelkit
