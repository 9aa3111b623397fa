#pragma once

// Closed-form and asymptotic values that serve as independent checks of the
// shooting pipeline.

#include <optional>

namespace hyplat::closed_forms {

/// Square-lattice value a(1) = 2 |(kappa^2)'(i)| g'(1/2), where
/// g(w) = C int_0^w t^(-3/4) (1-t)^(-3/4) dt maps the upper half-plane onto
/// the isosceles right triangle with legs 2 pi.
struct ClosedFormReport {
  double a1 = 0.0;
  double kappa2_prime_abs = 0.0;
  double g_prime_half = 0.0;
  double C = 0.0;             ///< 2 pi sqrt(2) / B(1/4, 1/4)
  double a_prime_zero = 0.0;  ///< (4 / pi^2) ln 4
  double ln4_over_pi = 0.0;   ///< offset of the strip-map asymptote
};

ClosedFormReport a1_closed_form();

/// (4 / pi^2) ln 4: slope of a at zero per unit rectangle width 2 omega
/// (= 2 pi k). Per unit k the slope is 2 pi times larger.
double a_prime_zero();

/// F(i y)/i = arccosh((2 - kappa^2(iy)) / kappa^2(iy)) / pi for y >= 0.5.
/// Throws BranchViolation if kappa^2 leaves (0, 1].
double strip_map_F(double y);

struct FunctionalResiduals {
  double functional_eq = 0.0;         ///< |a(1/k) - a(k)/k|
  std::optional<double> derivative;   ///< at k = 1: |(a(1.01) - a(0.99))/0.02 - a(1)/2|
};

FunctionalResiduals functional_identities(double k, double tol = 1e-10);

}  // namespace hyplat::closed_forms
