#include "hyplat/lattice.hpp"

#include <cmath>
#include <stdexcept>

#include "hyplat/errors.hpp"

namespace hyplat {

using special::kPi;
using special::ThetaContext;
using cplx = std::complex<double>;

namespace {

constexpr double kPoleGuard = 1e-6;

#ifdef HYPLAT_P_PERTURBATION
constexpr double kPerturbation = HYPLAT_P_PERTURBATION;
#else
constexpr double kPerturbation = 1.0;
#endif

// Half-period values for k <= 1 straight from the theta zero-values.
HalfPeriodValues direct_half_periods(const LatticeGeometry& lat) {
  const auto z = special::theta_zero_values(ThetaContext::from_tau_imag(lat.tau_imag()));
  const double c = kPi * kPi / (12.0 * lat.omega() * lat.omega());
  const double t2 = std::pow(z.th2, 4), t3 = std::pow(z.th3, 4), t4 = std::pow(z.th4, 4);
  return HalfPeriodValues{c * (t3 + t4), c * (t2 - t4), -c * (t2 + t3)};
}

// wp for k <= 1 by the theta quotient
//   wp(z) - e2 = (theta_1' theta_3(v) / (2 omega theta_3 theta_1(v)))^2,  v = z / (2 omega)
// falling back to the half-period addition formula near the top edge.
cplx direct_wp(const LatticeGeometry& lat, cplx z) {
  const double omega = lat.omega();
  const double period_im = 2.0 * kPi;
  z -= cplx(0.0, period_im * std::round(z.imag() / period_im));
  const double re_shift = 2.0 * omega * std::round(z.real() / (2.0 * omega));
  if (std::abs(z - re_shift) < kPoleGuard) {
    throw TooCloseToPole("Weierstrass function evaluated at a lattice point");
  }

  const auto ctx = ThetaContext::from_tau_imag(lat.tau_imag());
  const auto zero = special::theta_zero_values(ctx);
  const auto hp = direct_half_periods(lat);
  const auto reduced_arg = [&](cplx w) {
    cplx v = w / (2.0 * omega);
    return v - std::round(v.real());
  };
  const double strip = std::log(0.9 / ctx.nome()) / (2.0 * kPi);

  cplx v = reduced_arg(z);
  if (std::abs(v.imag()) < strip) {
    const cplx ratio = zero.th1prime * special::theta_at(ctx, 3, v) /
                       (2.0 * omega * zero.th3 * special::theta_at(ctx, 1, v));
    return hp.e2 + ratio * ratio;
  }
  // wp(z) = e2 + (e1 - e2)(e3 - e2) / (wp(u) - e2),  u = z - omega - omega'
  const cplx u = z - cplx(omega, z.imag() >= 0.0 ? kPi : -kPi);
  const cplx vu = reduced_arg(u);
  const cplx inv = 2.0 * omega * zero.th3 * special::theta_at(ctx, 1, vu) /
                   (zero.th1prime * special::theta_at(ctx, 3, vu));
  return hp.e2 + (hp.e1 - hp.e2) * (hp.e3 - hp.e2) * inv * inv;
}

}  // namespace

LatticeGeometry::LatticeGeometry(double k) : k_(k), omega_(kPi * k), nome_(std::exp(-kPi / k)) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw std::invalid_argument("lattice aspect k must be positive and finite");
  }
}

HalfPeriodValues half_period_values(const LatticeGeometry& lat) {
  if (lat.k() <= 1.0) return direct_half_periods(lat);
  // Quarter turn: wp_k(u) = -k^-2 wp_{1/k}(i u / k) swaps e1 and e3.
  const auto dual = direct_half_periods(lat.rotated());
  const double s = -1.0 / (lat.k() * lat.k());
  return HalfPeriodValues{s * dual.e3, s * dual.e2, s * dual.e1};
}

std::complex<double> weierstrass_p(const LatticeGeometry& lat, std::complex<double> z) {
  if (lat.k() <= 1.0) return direct_wp(lat, z);
  const double k = lat.k();
  return -direct_wp(lat.rotated(), cplx(0.0, 1.0) * z / k) / (k * k);
}

LameCoefficient::LameCoefficient(const LatticeGeometry& lat, Axis axis)
    : axis_(axis),
      length_(axis == Axis::real ? lat.omega() : kPi),
      ctx_(ThetaContext::from_tau_imag(lat.k() <= 1.0 ? lat.tau_imag() : lat.k())),
      prefactor_(0.0),
      arg_scale_(0.0),
      out_scale_(1.0),
      imaginary_kernel_(false) {
  const double k = lat.k();
  // Real half-period of whichever lattice (k or 1/k) carries the small nome.
  const bool use_dual = k > 1.0;
  const double omega_r = use_dual ? kPi / k : kPi * k;
  const double x_to_t = use_dual ? 1.0 / k : 1.0;
  if (use_dual) out_scale_ = -1.0 / (k * k);
  // On the dual lattice the roles of the two axes are exchanged.
  imaginary_kernel_ = (axis == Axis::imaginary) != use_dual;
  arg_scale_ = x_to_t / (2.0 * omega_r);

  const auto zero = special::theta_zero_values(ctx_);
  prefactor_ = zero.th1prime * zero.th1prime / (16.0 * omega_r * omega_r * zero.th3 * zero.th3);
}

double LameCoefficient::operator()(double x) const {
  if (x == 0.0) return 0.0;
  const double v = arg_scale_ * x;
  double value;
  if (imaginary_kernel_) {
    // theta_1(i y) = i S(y): P = +prefactor S^2 / theta_3(i y)^2
    const double s = special::theta_imag(ctx_, 1, v);
    const double c = special::theta_imag(ctx_, 3, v);
    value = prefactor_ * (s * s) / (c * c);
  } else {
    const double s = special::theta_real(ctx_, 1, v);
    const double c = special::theta_real(ctx_, 3, v);
    value = -prefactor_ * (s * s) / (c * c);
  }
  return kPerturbation * out_scale_ * value;
}

double LameCoefficient::max_abs() const { return std::abs((*this)(length_)); }

double p_real(const LatticeGeometry& lat, double sigma) {
  if (!(sigma >= 0.0) || sigma > lat.omega() * (1.0 + 1e-12)) {
    throw std::invalid_argument("p_real requires 0 <= sigma <= omega");
  }
  return LameCoefficient(lat, Axis::real)(sigma);
}

double p_imag(const LatticeGeometry& lat, double t) {
  if (!(t >= 0.0) || t > kPi * (1.0 + 1e-12)) {
    throw std::invalid_argument("p_imag requires 0 <= t <= pi");
  }
  return LameCoefficient(lat, Axis::imaginary)(t);
}

double laurent_check(const LatticeGeometry& lat, double delta) {
  if (!(delta >= 1e-4 && delta <= 1e-2)) {
    throw std::invalid_argument("laurent_check requires 1e-4 <= delta <= 1e-2");
  }
  // zeta = omega + omega' - delta approaches the pole along the top edge.
  const cplx zeta(lat.omega() - delta, kPi);
  const cplx wp = weierstrass_p(lat, zeta + cplx(lat.omega(), kPi));
  const double e2 = half_period_values(lat).e2;
  return delta * delta * (wp.real() - e2) / 4.0;
}

}  // namespace hyplat
