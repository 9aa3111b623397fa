#include "hyplat/jacobi_oracle.hpp"

#include <array>
#include <cmath>
#include <stdexcept>

#include "hyplat/special_functions.hpp"

namespace hyplat::oracle {

namespace {

using special::kPi;

// m = 1 / (1 + exp(-x)), m1 = 1 / (1 + exp(x)).
void split(double x, double& m, double& m1) {
  m = 1.0 / (1.0 + std::exp(-x));
  m1 = 1.0 / (1.0 + std::exp(x));
}

}  // namespace

double complete_K(double m1) { return kPi / (2.0 * special::agm(1.0, std::sqrt(m1))); }

JacobiLattice jacobi_lattice(double k) {
  if (!(k > 0.0 && std::isfinite(k))) throw std::invalid_argument("k must be positive");
  // K'/K decreases in m; bisect on the logit of m.
  const double target = 1.0 / k;
  double lo = -400.0, hi = 400.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    double m, m1;
    split(mid, m, m1);
    if (complete_K(m) / complete_K(m1) > target) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  JacobiLattice lat;
  lat.k = k;
  split(0.5 * (lo + hi), lat.m, lat.m1);
  lat.K = complete_K(lat.m1);
  lat.K_prime = complete_K(lat.m);
  const double omega = kPi * k;
  lat.d13 = (lat.K / omega) * (lat.K / omega);
  const double d23 = lat.m * lat.d13;
  lat.e3 = -(lat.d13 + d23) / 3.0;
  lat.e1 = lat.e3 + lat.d13;
  lat.e2 = lat.e3 + d23;
  return lat;
}

SnCnDn jacobi_real(double u, double m, double m1) {
  constexpr int kMax = 64;
  std::array<double, kMax + 1> a{}, c{};
  a[0] = 1.0;
  double b = std::sqrt(m1);
  c[0] = std::sqrt(m);
  int n = 0;
  while (std::abs(c[n]) > 1e-17 * a[n] && n < kMax) {
    a[n + 1] = 0.5 * (a[n] + b);
    c[n + 1] = 0.5 * (a[n] - b);
    b = std::sqrt(a[n] * b);
    ++n;
  }
  double phi = std::ldexp(a[n] * u, n);
  for (int j = n; j > 0; --j) {
    phi = 0.5 * (phi + std::asin(c[j] / a[j] * std::sin(phi)));
  }
  const double sn = std::sin(phi);
  const double cn = std::cos(phi);
  // cos(phi) / cos(phi_1 - phi) is 0/0 at quarter periods; m1 + m cn^2 is not.
  return SnCnDn{sn, cn, std::sqrt(m1 + m * cn * cn)};
}

std::complex<double> sn_complex(std::complex<double> w, double m, double m1) {
  const SnCnDn x = jacobi_real(w.real(), m, m1);
  const SnCnDn y = jacobi_real(w.imag(), m1, m);
  const double den = y.cn * y.cn + m * x.sn * x.sn * y.sn * y.sn;
  return {x.sn * y.dn / den, x.cn * x.dn * y.sn * y.cn / den};
}

std::complex<double> wp(const JacobiLattice& lat, std::complex<double> z) {
  const std::complex<double> s = sn_complex(std::sqrt(lat.d13) * z, lat.m, lat.m1);
  return lat.e3 + lat.d13 / (s * s);
}

double p_real(const JacobiLattice& lat, double sigma) {
  const SnCnDn j = jacobi_real(std::sqrt(lat.d13) * sigma, lat.m, lat.m1);
  const double sd = j.sn / j.dn;
  return -0.25 * lat.d13 * lat.m * lat.m1 * sd * sd;
}

double p_imag(const JacobiLattice& lat, double t) {
  const SnCnDn j = jacobi_real(std::sqrt(lat.d13) * t, lat.m1, lat.m);
  const double sd = j.sn / j.dn;
  return 0.25 * lat.d13 * lat.m * lat.m1 * sd * sd;
}

}  // namespace hyplat::oracle
