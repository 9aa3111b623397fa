#pragma once

// Shooting for the Lame equation w'' + P w = lambda w along the two axes of
// the quarter rectangle, and the Neumann ground-state bounds lambda-, lambda+.

#include <array>
#include <cmath>
#include <stdexcept>

#include "hyplat/dop853.hpp"
#include "hyplat/lattice.hpp"

namespace hyplat {

/// Fundamental-matrix data at the end of a segment,
///   [ c(end)  s(end)  ]
///   [ c'(end) s'(end) ]
/// for the solutions with unit initial matrix. On the imaginary axis (c, s)
/// are the real solutions (u, v) of the rotated equation.
struct EndpointMatrix {
  double a11 = 1.0;  ///< c(end)
  double a12 = 0.0;  ///< s(end)
  double a21 = 0.0;  ///< c'(end)
  double a22 = 1.0;  ///< s'(end)
  int czeros = 0;    ///< sign changes of c on the integration mesh

  double determinant() const noexcept { return a11 * a22 - a12 * a21; }
};

struct EigenBounds {
  double lambda_minus = 0.0;
  double lambda_plus = 0.0;
};

/// Solves w'' = q(x) w on [0, length] for (w, w') = (1, 0) and (0, 1).
/// Relative tolerance `tol`, absolute tol * 1e-2.
template <class Coefficient>
EndpointMatrix shoot(Coefficient&& q, double length, double tol) {
  if (!(tol >= 1e-14 && tol <= 1e-6)) {
    throw std::invalid_argument("integration tolerance must lie in [1e-14, 1e-6]");
  }
  // state: c, c', s, s'
  std::array<double, 4> y{1.0, 0.0, 0.0, 1.0};
  const auto rhs = [&q](double x, const std::array<double, 4>& w, std::array<double, 4>& dw) {
    const double qx = q(x);
    dw[0] = w[1];
    dw[1] = qx * w[0];
    dw[2] = w[3];
    dw[3] = qx * w[2];
  };
  int zeros = 0;
  double last_sign = 1.0;
  const auto count_sign = [&](double, const std::array<double, 4>& w) {
    if (w[0] != 0.0) {
      const double sign = std::signbit(w[0]) ? -1.0 : 1.0;
      if (sign != last_sign) ++zeros;
      last_sign = sign;
    }
  };
  ode::integrate(rhs, 0.0, length, y, ode::Tolerances{tol, tol * 1e-2}, count_sign);
  return EndpointMatrix{y[0], y[2], y[1], y[3], zeros};
}

/// w'' = (lambda - P(sigma)) w on [0, omega].
EndpointMatrix integrate_real_axis(const LatticeGeometry& lat, double lambda, double tol);

/// u'' = (P(i t) - lambda) u on [0, pi]; returns (u, v, u', v') at t = pi.
EndpointMatrix integrate_imag_axis(const LatticeGeometry& lat, double lambda, double tol);

/// True when lambda lies on the ground-state side of the Neumann problem the
/// endpoint data belongs to: no sign change of c and c'(end) > 0.
inline bool below_ground_state(const EndpointMatrix& m) { return m.czeros == 0 && m.a21 > 0.0; }

/// lambda- (largest Neumann eigenvalue on the real axis) and lambda+
/// (smallest on the imaginary axis), bisected to tol * 1e2 absolute.
/// Each returned bound is the bisection end lying inside (lambda-, lambda+).
/// Throws BracketNotFound if a scan window holds no sign change.
EigenBounds lambda_bounds(const LatticeGeometry& lat, double tol = 1e-10);

}  // namespace hyplat
