#include "hyplat/closed_forms.hpp"

#include <cmath>
#include <stdexcept>

#include "hyplat/accessory.hpp"
#include "hyplat/errors.hpp"
#include "hyplat/special_functions.hpp"

namespace hyplat::closed_forms {

using special::kPi;

ClosedFormReport a1_closed_form() {
  ClosedFormReport rep;
  rep.C = 2.0 * kPi * std::sqrt(2.0) / special::beta_quarter();
  rep.g_prime_half = rep.C * std::pow(2.0, 1.5);
  rep.kappa2_prime_abs = std::abs(special::kappa2_prime(1.0));
  // |d tau / d zeta| = 2 at the centre for the disc -> half-plane map.
  rep.a1 = 2.0 * rep.kappa2_prime_abs * rep.g_prime_half;
  rep.a_prime_zero = a_prime_zero();
  rep.ln4_over_pi = std::log(4.0) / kPi;
  return rep;
}

double a_prime_zero() { return 4.0 / (kPi * kPi) * std::log(4.0); }

double strip_map_F(double y) {
  if (!(y >= 0.5)) throw std::invalid_argument("strip_map_F requires y >= 0.5");
  const double k2 = special::kappa2(y);
  if (!(k2 > 0.0 && k2 <= 1.0)) {
    throw BranchViolation("kappa^2 outside (0, 1]: inverse cosine leaves the hyperbolic branch");
  }
  return std::acosh((2.0 - k2) / k2) / kPi;
}

FunctionalResiduals functional_identities(double k, double tol) {
  FunctionalResiduals res;
  res.functional_eq = std::abs(a_of_k(1.0 / k, tol) - a_of_k(k, tol) / k);
  if (k == 1.0) {
    const double h = 0.01;
    const double diff = (a_of_k(1.0 + h, tol) - a_of_k(1.0 - h, tol)) / (2.0 * h);
    res.derivative = std::abs(diff - 0.5 * a_of_k(1.0, tol));
  }
  return res;
}

}  // namespace hyplat::closed_forms
