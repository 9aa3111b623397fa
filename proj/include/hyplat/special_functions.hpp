#pragma once

// Theta series, the modular function kappa^2, AGM and the Gamma/Beta values
// used throughout the library.
//
// Theta functions follow the period-1 convention
//   theta_1(v) = 2 sum_{n>=0} (-1)^n q^{(n+1/2)^2} sin((2n+1) pi v)
//   theta_2(v) = 2 sum_{n>=0}        q^{(n+1/2)^2} cos((2n+1) pi v)
//   theta_3(v) = 1 + 2 sum_{n>=1}        q^{n^2} cos(2n pi v)
//   theta_4(v) = 1 + 2 sum_{n>=1} (-1)^n q^{n^2} cos(2n pi v)
// with nome q = exp(i pi tau), real in (0,1) for tau = i y.

#include <complex>

namespace hyplat::special {

inline constexpr double kPi = 3.141592653589793238462643383279502884;

/// Nome plus the number of series terms needed to push the tail below
/// round-off: q^(trunc^2) < 1e-16 (1 - q).
class ThetaContext {
 public:
  /// Throws std::invalid_argument unless 0 < q < 1.
  static ThetaContext from_nome(double q);
  /// Nome exp(-pi y) for tau = i y; keeps log q exact. Requires y > 0.
  static ThetaContext from_tau_imag(double y);

  double nome() const noexcept { return q_; }
  double log_nome() const noexcept { return log_q_; }
  /// Im tau = -log(q) / pi.
  double tau_imag() const noexcept { return -log_q_ / kPi; }
  int trunc() const noexcept { return trunc_; }

  /// Same nome, explicit term count (used to probe truncation error).
  ThetaContext with_trunc(int terms) const;

 private:
  ThetaContext(double q, double log_q);

  double q_;
  double log_q_;
  int trunc_;
};

struct ThetaZeroValues {
  double th2;
  double th3;
  double th4;
  double th1prime;  ///< d theta_1 / dv at v = 0
};

ThetaZeroValues theta_zero_values(const ThetaContext& ctx);

/// theta_which(z) for complex z. Throws ArgumentOutOfStrip unless
/// q * exp(2 pi |Im z|) < 0.9, and std::invalid_argument for which outside 1..4.
std::complex<double> theta_at(const ThetaContext& ctx, int which, std::complex<double> z);

/// theta_which(x) for real x.
double theta_real(const ThetaContext& ctx, int which, double x);

/// Real reduction of theta_which on the imaginary axis, 0 <= y <= Im(tau)/2:
/// returns theta_1(i y) / i for which = 1 and theta_which(i y) otherwise.
/// Throws ArgumentOutOfStrip when y leaves that segment.
double theta_imag(const ThetaContext& ctx, int which, double y);

/// Jacobi's modular function kappa^2(i y) = (theta_2 / theta_3)^4.
double kappa2(double y);

/// d kappa^2 / d tau at tau = i y (pure imaginary).
std::complex<double> kappa2_prime(double y);

double gamma(double x);

/// B(1/4, 1/4) = Gamma(1/4)^2 / Gamma(1/2).
double beta_quarter();

/// Arithmetic-geometric mean of two positive reals.
double agm(double a, double b);

}  // namespace hyplat::special
