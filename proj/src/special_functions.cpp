#include "hyplat/special_functions.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "hyplat/errors.hpp"

namespace hyplat::special {

namespace {

constexpr double kTailBound = 1e-16;
constexpr double kStripLimit = 0.9;

int truncation_for(double q, double log_q) {
  // smallest N with N^2 log q < log(1e-16) + log(1 - q)
  const double target = std::log(kTailBound) + std::log1p(-q);
  const int n = static_cast<int>(std::ceil(std::sqrt(target / log_q)));
  return n < 1 ? 1 : n;
}

void check_index(int which) {
  if (which < 1 || which > 4) {
    throw std::invalid_argument("theta index must be 1..4, got " + std::to_string(which));
  }
}

// q^e * sinh(x) and q^e * cosh(x) for x >= 0 without overflowing sinh.
double scaled_sinh(double log_q, double e, double x) {
  if (x < 20.0) return std::exp(e * log_q) * std::sinh(x);
  return 0.5 * (std::exp(e * log_q + x) - std::exp(e * log_q - x));
}

double scaled_cosh(double log_q, double e, double x) {
  if (x < 20.0) return std::exp(e * log_q) * std::cosh(x);
  return 0.5 * (std::exp(e * log_q + x) + std::exp(e * log_q - x));
}

}  // namespace

ThetaContext::ThetaContext(double q, double log_q)
    : q_(q), log_q_(log_q), trunc_(truncation_for(q, log_q)) {}

ThetaContext ThetaContext::from_nome(double q) {
  if (!(q > 0.0 && q < 1.0)) {
    throw std::invalid_argument("theta nome must lie in (0,1)");
  }
  return ThetaContext(q, std::log(q));
}

ThetaContext ThetaContext::from_tau_imag(double y) {
  if (!(y > 0.0) || !std::isfinite(y)) {
    throw std::invalid_argument("Im tau must be positive and finite");
  }
  const double log_q = -kPi * y;
  return ThetaContext(std::exp(log_q), log_q);
}

ThetaContext ThetaContext::with_trunc(int terms) const {
  if (terms < 1) throw std::invalid_argument("theta truncation must be positive");
  ThetaContext copy = *this;
  copy.trunc_ = terms;
  return copy;
}

ThetaZeroValues theta_zero_values(const ThetaContext& ctx) {
  const double lq = ctx.log_nome();
  const int n_max = ctx.trunc();
  double th2 = 0.0, th3 = 0.0, th4 = 0.0, th1p = 0.0;
  // Sum small terms first.
  for (int n = n_max; n >= 0; --n) {
    const double half = n + 0.5;
    const double qh = std::exp(half * half * lq);
    th2 += qh;
    th1p += ((n % 2 == 0) ? 1.0 : -1.0) * (2 * n + 1) * qh;
    if (n >= 1) {
      const double qn = std::exp(double(n) * n * lq);
      th3 += qn;
      th4 += ((n % 2 == 0) ? 1.0 : -1.0) * qn;
    }
  }
  return ThetaZeroValues{2.0 * th2, 1.0 + 2.0 * th3, 1.0 + 2.0 * th4, 2.0 * kPi * th1p};
}

std::complex<double> theta_at(const ThetaContext& ctx, int which, std::complex<double> z) {
  check_index(which);
  if (ctx.nome() * std::exp(2.0 * kPi * std::abs(z.imag())) >= kStripLimit) {
    throw ArgumentOutOfStrip("theta argument outside q*exp(2 pi |Im z|) < 0.9");
  }
  const double lq = ctx.log_nome();
  std::complex<double> sum = 0.0;
  for (int n = ctx.trunc(); n >= 0; --n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    switch (which) {
      case 1: {
        const double half = n + 0.5;
        sum += sign * std::exp(half * half * lq) * std::sin(double(2 * n + 1) * kPi * z);
        break;
      }
      case 2: {
        const double half = n + 0.5;
        sum += std::exp(half * half * lq) * std::cos(double(2 * n + 1) * kPi * z);
        break;
      }
      case 3:
        if (n >= 1) sum += std::exp(double(n) * n * lq) * std::cos(double(2 * n) * kPi * z);
        break;
      default:
        if (n >= 1) sum += sign * std::exp(double(n) * n * lq) * std::cos(double(2 * n) * kPi * z);
        break;
    }
  }
  return (which <= 2) ? 2.0 * sum : 1.0 + 2.0 * sum;
}

double theta_real(const ThetaContext& ctx, int which, double x) {
  check_index(which);
  const double lq = ctx.log_nome();
  double sum = 0.0;
  for (int n = ctx.trunc(); n >= 0; --n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double half = n + 0.5;
    switch (which) {
      case 1:
        sum += sign * std::exp(half * half * lq) * std::sin((2 * n + 1) * kPi * x);
        break;
      case 2:
        sum += std::exp(half * half * lq) * std::cos((2 * n + 1) * kPi * x);
        break;
      case 3:
        if (n >= 1) sum += std::exp(double(n) * n * lq) * std::cos(2 * n * kPi * x);
        break;
      default:
        if (n >= 1) sum += sign * std::exp(double(n) * n * lq) * std::cos(2 * n * kPi * x);
        break;
    }
  }
  return (which <= 2) ? 2.0 * sum : 1.0 + 2.0 * sum;
}

double theta_imag(const ThetaContext& ctx, int which, double y) {
  check_index(which);
  if (!(y >= 0.0) || y > 0.5 * ctx.tau_imag() * (1.0 + 1e-12)) {
    throw ArgumentOutOfStrip("imaginary theta argument outside [0, Im(tau)/2]");
  }
  const double lq = ctx.log_nome();
  // Terms are bounded by q^(n^2 - 1/4) on this segment; one extra term covers the q^(-1/4).
  const int n_max = ctx.trunc() + 1;
  double sum = 0.0;
  for (int n = n_max; n >= 0; --n) {
    const double sign = (n % 2 == 0) ? 1.0 : -1.0;
    const double half = n + 0.5;
    switch (which) {
      case 1:
        sum += sign * scaled_sinh(lq, half * half, (2 * n + 1) * kPi * y);
        break;
      case 2:
        sum += scaled_cosh(lq, half * half, (2 * n + 1) * kPi * y);
        break;
      case 3:
        if (n >= 1) sum += scaled_cosh(lq, double(n) * n, 2 * n * kPi * y);
        break;
      default:
        if (n >= 1) sum += sign * scaled_cosh(lq, double(n) * n, 2 * n * kPi * y);
        break;
    }
  }
  return (which <= 2) ? 2.0 * sum : 1.0 + 2.0 * sum;
}

double kappa2(double y) {
  const auto z = theta_zero_values(ThetaContext::from_tau_imag(y));
  const double ratio = z.th2 / z.th3;
  return ratio * ratio * ratio * ratio;
}

std::complex<double> kappa2_prime(double y) {
  const auto ctx = ThetaContext::from_tau_imag(y);
  const double lq = ctx.log_nome();
  const double h = ctx.nome();
  // theta_2, theta_3 and their derivatives with respect to the nome h.
  double th2 = 0.0, th3 = 0.0, dth2 = 0.0, dth3 = 0.0;
  for (int n = ctx.trunc(); n >= 0; --n) {
    const double e2 = (n + 0.5) * (n + 0.5);
    th2 += std::exp(e2 * lq);
    dth2 += e2 * std::exp((e2 - 1.0) * lq);
    if (n >= 1) {
      const double e3 = double(n) * n;
      th3 += std::exp(e3 * lq);
      dth3 += e3 * std::exp((e3 - 1.0) * lq);
    }
  }
  th2 *= 2.0;
  dth2 *= 2.0;
  th3 = 1.0 + 2.0 * th3;
  dth3 *= 2.0;
  const double d_dh = 4.0 * th2 * th2 * th2 * std::pow(th3, -5.0) * (dth2 * th3 - th2 * dth3);
  // dh/dtau = i pi h
  return std::complex<double>(0.0, kPi * h) * d_dh;
}

double gamma(double x) { return std::tgamma(x); }

double beta_quarter() {
  const double g = gamma(0.25);
  return g * g / gamma(0.5);
}

double agm(double a, double b) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw std::invalid_argument("agm requires positive arguments");
  }
  for (int iter = 0; iter < 64 && std::abs(a - b) >= 1e-15 * a; ++iter) {
    const double next = 0.5 * (a + b);
    b = std::sqrt(a * b);
    a = next;
  }
  return 0.5 * (a + b);
}

}  // namespace hyplat::special
