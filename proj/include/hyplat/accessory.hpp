#pragma once

// Accessory-parameter problem: choose lambda so that the two boundary circles
// of the image quadrilateral have their common tangent through the origin,
// then read off a(k) = |f'(0)|.

#include "hyplat/lame_solver.hpp"
#include "hyplat/lattice.hpp"

namespace hyplat {

/// Right circle: centre m, radius r (real axis). Top circle: centre i m1,
/// radius r1 (imaginary axis). e is the tangency residual
///   e = m1^2 / sqrt(m^2 + m1^2) - r1
/// and a = m m1 / sqrt(m^2 + m1^2) the candidate radius |z0|.
///
/// The radii are r = (s'/c' - s/c)/2 = 1/(2 c c') and r1 = (v'/u' - v/u)/2,
/// i.e. the distance from the centre to the image F(omega) resp. F(omega'),
/// which is positive everywhere inside (lambda-, lambda+).
struct TangencyData {
  double m = 0.0;
  double r = 0.0;
  double m1 = 0.0;
  double r1 = 0.0;
  double e = 0.0;
  double a = 0.0;
};

struct AccessoryResult {
  double lambda_star = 0.0;
  EigenBounds bracket;
  int iterations = 0;
  double residual = 0.0;
  TangencyData tangency;
};

/// Circle data from the two endpoint matrices. Throws NearSingularQuotient
/// (carrying the limiting e) when a denominator is below 1e-12,
/// OutsideBracket when either solution changed sign or has a non-positive
/// endpoint value or derivative, GeometryViolation if a centre or radius
/// is not positive.
TangencyData tangency_from_endpoints(const EndpointMatrix& real_axis, const EndpointMatrix& imag_axis);

TangencyData tangency_data(const LatticeGeometry& lat, double lambda, double tol = 1e-10);

/// Dyadic bisection of e over the inset bracket [lambda- + d, lambda+ - d].
/// Integrator tolerance tol, eigen-bounds tol*1e2, lambda interval tol*10
/// (relative to max(1, |lambda-|, |lambda+|)) and |e| <= 1e-10, whichever
/// is later; stops early only at the floating-point floor of the interval.
AccessoryResult solve_accessory(const LatticeGeometry& lat, double tol = 1e-10);

inline constexpr double kMinAspect = 0.02;
inline constexpr double kMaxAspect = 50.0;

/// Full pipeline for a(k); k must lie in [0.02, 50].
AccessoryResult solve_for_aspect(double k, double tol = 1e-10);

double a_of_k(double k, double tol = 1e-10);

/// Unit-diagonal presentation: sides 2 omega, 2|omega'| with
/// 4 omega^2 + 4 |omega'|^2 = 1.
struct NormalizedValue {
  double two_omega = 0.0;
  double a_norm = 0.0;
};

/// Exact homothety of the native value: two_omega = k / sqrt(1 + k^2),
/// a_norm = a(k) / (2 pi sqrt(1 + k^2)).
NormalizedValue normalize(double k, double a_native);

NormalizedValue a_normalized(double k, double tol = 1e-10);

}  // namespace hyplat
