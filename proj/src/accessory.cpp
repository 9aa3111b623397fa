#include "hyplat/accessory.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <stdexcept>

#include "hyplat/errors.hpp"

namespace hyplat {

namespace {

constexpr double kSingularGuard = 1e-12;
constexpr double kResidualTarget = 1e-10;
constexpr int kMaxInsetHalvings = 40;
constexpr int kMaxBisections = 200;

struct Circle {
  double centre;
  double radius;
};

// Centre and radius of the circle through the real points s/c and s'/c'.
Circle circle_from(const EndpointMatrix& m) {
  const double near = m.a12 / m.a11;
  const double far = m.a22 / m.a21;
  return Circle{0.5 * (near + far), 0.5 * (far - near)};
}

double sign_of(double x) { return std::signbit(x) ? -1.0 : 1.0; }

}  // namespace

TangencyData tangency_from_endpoints(const EndpointMatrix& real_axis, const EndpointMatrix& imag_axis) {
  if (real_axis.czeros > 0 || imag_axis.czeros > 0) {
    throw OutsideBracket("shooting solution changed sign: lambda outside (lambda-, lambda+)");
  }
  const double nan = std::numeric_limits<double>::quiet_NaN();
  if (std::abs(real_axis.a11) < kSingularGuard || std::abs(imag_axis.a11) < kSingularGuard) {
    throw NearSingularQuotient("endpoint value c(omega) or u(pi) vanishes", nan);
  }
  if (std::abs(real_axis.a21) < kSingularGuard) {
    // lambda -> lambda-: the right circle opens into a vertical line, e -> -r1.
    const double limit = std::abs(imag_axis.a21) < kSingularGuard ? nan : -circle_from(imag_axis).radius;
    throw NearSingularQuotient("c'(omega) vanishes (lambda at lambda-)", limit);
  }
  if (std::abs(imag_axis.a21) < kSingularGuard) {
    // lambda -> lambda+: the top circle opens into a horizontal line, e -> v/u.
    throw NearSingularQuotient("u'(pi) vanishes (lambda at lambda+)", imag_axis.a12 / imag_axis.a11);
  }
  if (real_axis.a11 < 0.0 || real_axis.a21 < 0.0 || imag_axis.a11 < 0.0 || imag_axis.a21 < 0.0) {
    throw OutsideBracket("endpoint data beyond a Neumann ground state");
  }

  const Circle right = circle_from(real_axis);
  const Circle top = circle_from(imag_axis);
  TangencyData t;
  t.m = right.centre;
  t.r = right.radius;
  t.m1 = top.centre;
  t.r1 = top.radius;
  if (!(t.m > 0.0 && t.r > 0.0 && t.m1 > 0.0 && t.r1 > 0.0)) {
    throw GeometryViolation("tangent-circle centres and radii must be positive inside the bracket");
  }
  // e = m1^2/D - r1 rewritten with m1 - r1 = v/u, so that the two O(r1)
  // terms (large near lambda+) no longer cancel.
  const double dist = std::hypot(t.m, t.m1);
  t.e = imag_axis.a12 / imag_axis.a11 - t.m1 * t.m * t.m / (dist * (dist + t.m1));
  t.a = t.m * t.m1 / dist;
  return t;
}

TangencyData tangency_data(const LatticeGeometry& lat, double lambda, double tol) {
  return tangency_from_endpoints(integrate_real_axis(lat, lambda, tol), integrate_imag_axis(lat, lambda, tol));
}

AccessoryResult solve_accessory(const LatticeGeometry& lat, double tol) {
  if (!(tol >= 1e-12)) throw std::invalid_argument("accessory tolerance must be >= 1e-12");

  AccessoryResult result;
  result.bracket = lambda_bounds(lat, tol);
  const double lo_bound = result.bracket.lambda_minus;
  const double hi_bound = result.bracket.lambda_plus;

  double delta = 1e-4 * (hi_bound - lo_bound);
  double lo = 0.0, hi = 0.0;
  TangencyData t_lo, t_hi;
  bool bracketed = false;
  for (int i = 0; i <= kMaxInsetHalvings && !bracketed; ++i, delta *= 0.5) {
    lo = lo_bound + delta;
    hi = hi_bound - delta;
    if (!(lo < hi)) continue;
    try {
      t_lo = tangency_data(lat, lo, tol);
      t_hi = tangency_data(lat, hi, tol);
    } catch (const OutsideBracket&) {
      continue;
    } catch (const NearSingularQuotient&) {
      continue;
    }
    bracketed = sign_of(t_lo.e) != sign_of(t_hi.e);
  }
  if (!bracketed) {
    throw NoSignChange("tangency residual e has equal signs at both ends of [lambda-, lambda+]");
  }

  const double scale = std::max({1.0, std::abs(lo_bound), std::abs(hi_bound)});
  const double lambda_tol = tol * 10.0 * scale;
  const double lo_sign = sign_of(t_lo.e);

  std::optional<std::pair<double, TangencyData>> best;
  const auto consider = [&](double lambda, const TangencyData& t) {
    if (!best || std::abs(t.e) < std::abs(best->second.e)) best.emplace(lambda, t);
  };
  consider(lo, t_lo);
  consider(hi, t_hi);

  int iterations = 0;
  while (iterations < kMaxBisections) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const TangencyData t_mid = tangency_data(lat, mid, tol);
    ++iterations;
    consider(mid, t_mid);
    if (sign_of(t_mid.e) == lo_sign) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo < lambda_tol && std::abs(t_mid.e) <= kResidualTarget) break;
  }

  result.lambda_star = best->first;
  result.tangency = best->second;
  result.residual = best->second.e;
  result.iterations = iterations;
  return result;
}

AccessoryResult solve_for_aspect(double k, double tol) {
  if (!(k >= kMinAspect && k <= kMaxAspect)) {
    throw std::invalid_argument("aspect k must lie in [0.02, 50]");
  }
  return solve_accessory(LatticeGeometry(k), tol);
}

double a_of_k(double k, double tol) { return solve_for_aspect(k, tol).tangency.a; }

NormalizedValue normalize(double k, double a_native) {
  const double diag = std::sqrt(1.0 + k * k);
  return NormalizedValue{k / diag, a_native / (2.0 * special::kPi * diag)};
}

NormalizedValue a_normalized(double k, double tol) { return normalize(k, a_of_k(k, tol)); }

}  // namespace hyplat
