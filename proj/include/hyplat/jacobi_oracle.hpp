#pragma once

// A second, theta-free route to the lattice quantities: the complete elliptic
// integral by AGM, Jacobi functions by descending Landen transformation, and
//   wp(z) = e3 + (e1 - e3) / sn^2(sqrt(e1 - e3) z | m).
// Used only to cross-check the theta route.

#include <complex>

namespace hyplat::oracle {

/// Parameter m and complementary m1 = 1 - m, both kept to full relative
/// precision, for the lattice with K'(m) / K(m) = 1/k.
struct JacobiLattice {
  double k = 0.0;
  double m = 0.0;
  double m1 = 0.0;
  double K = 0.0;
  double K_prime = 0.0;
  double e1 = 0.0;
  double e2 = 0.0;
  double e3 = 0.0;
  double d13 = 0.0;  ///< e1 - e3 = (K / omega)^2
};

JacobiLattice jacobi_lattice(double k);

/// pi / (2 agm(1, sqrt(m1))).
double complete_K(double m1);

struct SnCnDn {
  double sn;
  double cn;
  double dn;
};

/// Jacobi functions of real argument, parameter m = 1 - m1.
SnCnDn jacobi_real(double u, double m, double m1);

/// sn(x + i y | m) via the addition formula with parameter-m1 values at y.
std::complex<double> sn_complex(std::complex<double> w, double m, double m1);

std::complex<double> wp(const JacobiLattice& lat, std::complex<double> z);

/// (wp(sigma + omega + omega') - e2) / 4 = -d13 m m1 sd^2(sqrt(d13) sigma | m) / 4.
double p_real(const JacobiLattice& lat, double sigma);

/// P(i t) = d13 m m1 sd^2(sqrt(d13) t | m1) / 4.
double p_imag(const JacobiLattice& lat, double t);

}  // namespace hyplat::oracle
