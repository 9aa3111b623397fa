#include "hyplat/lame_solver.hpp"

#include "hyplat/errors.hpp"

namespace hyplat {

namespace {

struct Shooter {
  LameCoefficient coefficient;
  double tol;

  // Real axis: w'' = (lambda - P) w.  Imaginary axis: u'' = (P - lambda) u.
  EndpointMatrix at(double lambda) const {
    if (coefficient.axis() == Axis::real) {
      return shoot([&](double x) { return lambda - coefficient(x); }, coefficient.length(), tol);
    }
    return shoot([&](double x) { return coefficient(x) - lambda; }, coefficient.length(), tol);
  }
};

// Walks from 0 in `direction` until the ground-state indicator flips, then
// bisects. Returns the end of the final interval on the admissible side.
double ground_state_edge(const Shooter& shooter, double direction, double bisect_tol) {
  const double len = shooter.coefficient.length();
  const double window = shooter.coefficient.max_abs() + (2.0 * special::kPi / len) * (2.0 * special::kPi / len);
  const double step = window / 64.0;

  if (!below_ground_state(shooter.at(0.0))) return 0.0;

  double inside = 0.0;
  double outside = 0.0;
  bool found = false;
  for (int j = 1; j <= 64; ++j) {
    const double lambda = direction * step * j;
    if (!below_ground_state(shooter.at(lambda))) {
      outside = lambda;
      found = true;
      break;
    }
    inside = lambda;
  }
  if (!found) {
    throw BracketNotFound("no Neumann ground state within the scan window");
  }
  while (std::abs(outside - inside) > bisect_tol) {
    const double mid = 0.5 * (inside + outside);
    if (mid == inside || mid == outside) break;
    if (below_ground_state(shooter.at(mid))) {
      inside = mid;
    } else {
      outside = mid;
    }
  }
  return inside;
}

}  // namespace

EndpointMatrix integrate_real_axis(const LatticeGeometry& lat, double lambda, double tol) {
  return Shooter{LameCoefficient(lat, Axis::real), tol}.at(lambda);
}

EndpointMatrix integrate_imag_axis(const LatticeGeometry& lat, double lambda, double tol) {
  return Shooter{LameCoefficient(lat, Axis::imaginary), tol}.at(lambda);
}

EigenBounds lambda_bounds(const LatticeGeometry& lat, double tol) {
  const double bisect_tol = tol * 1e2;
  const Shooter real{LameCoefficient(lat, Axis::real), tol};
  const Shooter imag{LameCoefficient(lat, Axis::imaginary), tol};
  return EigenBounds{ground_state_edge(real, -1.0, bisect_tol), ground_state_edge(imag, +1.0, bisect_tol)};
}

}  // namespace hyplat
