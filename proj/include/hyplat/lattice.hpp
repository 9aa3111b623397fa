#pragma once

// Rectangular lattice {2m omega + 2n omega'} in the native normalization
// omega = pi k, omega' = pi i, and the Lame coefficient
//   P(zeta) = (wp(zeta + omega + omega') - e2) / 4
// restricted to the two symmetry axes of the quarter rectangle.

#include <complex>

#include "hyplat/special_functions.hpp"

namespace hyplat {

class LatticeGeometry {
 public:
  /// Throws std::invalid_argument unless k is positive and finite.
  explicit LatticeGeometry(double k);

  double k() const noexcept { return k_; }
  /// Real half-period, pi k.
  double omega() const noexcept { return omega_; }
  /// Magnitude of the imaginary half-period, always pi.
  double omega_prime() const noexcept { return special::kPi; }
  /// tau = omega'/omega = i / k.
  double tau_imag() const noexcept { return 1.0 / k_; }
  double nome() const noexcept { return nome_; }

  /// The quarter-turned lattice rescaled to native normalization (k -> 1/k).
  LatticeGeometry rotated() const { return LatticeGeometry(1.0 / k_); }

 private:
  double k_;
  double omega_;
  double nome_;
};

/// e1 = wp(omega), e2 = wp(omega + omega'), e3 = wp(omega').
struct HalfPeriodValues {
  double e1;
  double e2;
  double e3;
};

HalfPeriodValues half_period_values(const LatticeGeometry& lat);

/// Weierstrass wp of the lattice by the theta-quotient route. Any z with
/// |Im z| reducible by the imaginary period is accepted; throws
/// TooCloseToPole within 1e-6 of a lattice point.
std::complex<double> weierstrass_p(const LatticeGeometry& lat, std::complex<double> z);

enum class Axis { real, imaginary };

/// P along one axis of the quarter rectangle, parametrized by arc length
/// x in [0, length]: P(x) on the real axis, P(i x) on the imaginary axis.
///
/// Both axes are evaluated through whichever theta representation has the
/// smaller nome, min(exp(-pi/k), exp(-pi k)) <= exp(-pi), using the
/// quarter-turn identity P_k(i t) = -P_{1/k}(t/k) / k^2. Construction does
/// the theta zero-value work once; operator() is cheap and pure.
class LameCoefficient {
 public:
  LameCoefficient(const LatticeGeometry& lat, Axis axis);

  double operator()(double x) const;

  Axis axis() const noexcept { return axis_; }
  /// omega on the real axis, pi on the imaginary axis.
  double length() const noexcept { return length_; }
  /// |P| at the far end of the axis, which is the maximum over the segment.
  double max_abs() const;

 private:
  Axis axis_;
  double length_;
  special::ThetaContext ctx_;
  double prefactor_;       // theta_1'^2 / (16 omega_r^2 theta_3^2)
  double arg_scale_;       // x -> theta argument
  double out_scale_;       // 1 or -1/k^2
  bool imaginary_kernel_;  // theta evaluated at pure imaginary argument
};

/// P(sigma) for 0 <= sigma <= omega; non-positive, exactly 0 at sigma = 0.
double p_real(const LatticeGeometry& lat, double sigma);

/// P(i t) for 0 <= t <= pi; non-negative, exactly 0 at t = 0.
double p_imag(const LatticeGeometry& lat, double t);

/// delta^2 P(omega + omega' - delta); tends to 1/4 + O(delta^2).
/// Requires 1e-4 <= delta <= 1e-2.
double laurent_check(const LatticeGeometry& lat, double delta);

}  // namespace hyplat
