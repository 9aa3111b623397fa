#include <doctest.h>

#include <array>
#include <cmath>

#include "hyplat/dop853.hpp"
#include "hyplat/errors.hpp"
#include "hyplat/lame_solver.hpp"
#include "rk4_reference.hpp"

using namespace hyplat;
using special::kPi;


TEST_CASE("integrator: exponential and oscillator") {
  std::array<double, 1> y{1.0};
  const auto stats = ode::integrate([](double, const std::array<double, 1>& w, std::array<double, 1>& d) { d[0] = w[0]; },
                                    0.0, 3.0, y, ode::Tolerances{1e-12, 1e-14}, [](double, const auto&) {});
  CHECK(y[0] == doctest::Approx(std::exp(3.0)).epsilon(1e-11));
  CHECK(stats.accepted > 0);

  std::array<double, 2> osc{1.0, 0.0};
  ode::integrate([](double, const std::array<double, 2>& w, std::array<double, 2>& d) { d = {w[1], -w[0]}; }, 0.0,
                 20.0 * kPi, osc, ode::Tolerances{1e-12, 1e-14}, [](double, const auto&) {});
  CHECK(osc[0] == doctest::Approx(1.0).epsilon(1e-9));
  CHECK(std::abs(osc[1]) <= 1e-9);
}

TEST_CASE("integrator: blow-up raises StepSizeUnderflow") {
  std::array<double, 1> y{1.0};
  CHECK_THROWS_AS(ode::integrate([](double, const std::array<double, 1>& w, std::array<double, 1>& d) { d[0] = w[0] * w[0]; },
                                 0.0, 2.0, y, ode::Tolerances{1e-10, 1e-12}, [](double, const auto&) {}),
                  StepSizeUnderflow);
}

TEST_CASE("shooting with a constant coefficient reproduces cosh/sinh and cos/sin") {
  const double L = 2.3;
  for (double mu : {0.7, 2.0}) {
    const auto m = shoot([mu](double) { return mu * mu; }, L, 1e-12);
    CHECK(m.a11 == doctest::Approx(std::cosh(mu * L)).epsilon(1e-11));
    CHECK(m.a12 == doctest::Approx(std::sinh(mu * L) / mu).epsilon(1e-11));
    CHECK(m.a21 == doctest::Approx(mu * std::sinh(mu * L)).epsilon(1e-11));
    CHECK(m.a22 == doctest::Approx(std::cosh(mu * L)).epsilon(1e-11));
    CHECK(m.czeros == 0);
  }
  const double mu = 3.0;
  const auto m = shoot([mu](double) { return -mu * mu; }, L, 1e-12);
  CHECK(m.a11 == doctest::Approx(std::cos(mu * L)).epsilon(1e-10));
  CHECK(m.a12 == doctest::Approx(std::sin(mu * L) / mu).epsilon(1e-10));
  CHECK(m.czeros == 2);  // cos(3x) vanishes twice on [0, 2.3]
  CHECK_THROWS_AS(shoot([](double) { return 0.0; }, 1.0, 1e-16), std::invalid_argument);
  CHECK_THROWS_AS(shoot([](double) { return 0.0; }, 1.0, 1e-5), std::invalid_argument);
}

TEST_CASE("adaptive shooting agrees with fixed-step RK4 at step length/2^20") {
  const LatticeGeometry lat(1.0);
  for (double lambda : {-0.01, 0.0, 0.015}) {
    const auto real = integrate_real_axis(lat, lambda, 1e-12);
    const auto ref_r = testing::rk4(LameCoefficient(lat, Axis::real), lambda, true, 1 << 20);
    CHECK(real.a11 == doctest::Approx(ref_r.a11).epsilon(1e-10));
    CHECK(real.a12 == doctest::Approx(ref_r.a12).epsilon(1e-10));
    CHECK(real.a21 == doctest::Approx(ref_r.a21).epsilon(1e-10));
    CHECK(real.a22 == doctest::Approx(ref_r.a22).epsilon(1e-10));
    const auto imag = integrate_imag_axis(lat, lambda, 1e-12);
    const auto ref_i = testing::rk4(LameCoefficient(lat, Axis::imaginary), lambda, false, 1 << 20);
    CHECK(imag.a11 == doctest::Approx(ref_i.a11).epsilon(1e-10));
    CHECK(imag.a21 == doctest::Approx(ref_i.a21).epsilon(1e-10));
  }
}

TEST_CASE("Wronskian stays at one") {
  for (double k : {0.02, 0.25, 1.0, 4.0, 50.0}) {
    const LatticeGeometry lat(k);
    const auto b = lambda_bounds(lat);
    const double width = b.lambda_plus - b.lambda_minus;
    // Far outside the bracket c grows like exp(sqrt(lambda) omega) and the
    // determinant cancels catastrophically, so stay within one bracket width.
    for (double lambda : {b.lambda_minus - width, b.lambda_minus, 0.5 * (b.lambda_minus + b.lambda_plus),
                          b.lambda_plus, b.lambda_plus + width}) {
      CHECK(std::abs(integrate_real_axis(lat, lambda, 1e-10).determinant() - 1.0) <= 1e-9);
      CHECK(std::abs(integrate_imag_axis(lat, lambda, 1e-10).determinant() - 1.0) <= 1e-9);
    }
  }
}

TEST_CASE("Neumann ground-state bounds") {
  for (double k : {0.02, 0.2, 0.5, 1.0, 2.0, 5.0, 50.0}) {
    const LatticeGeometry lat(k);
    const auto b = lambda_bounds(lat);
    CAPTURE(k);
    CHECK(b.lambda_minus <= 0.0);
    CHECK(b.lambda_plus >= 0.0);
    CHECK(below_ground_state(integrate_real_axis(lat, b.lambda_minus, 1e-10)));
    CHECK(below_ground_state(integrate_imag_axis(lat, b.lambda_plus, 1e-10)));
    const double step = 1e-6 * std::max(1.0, b.lambda_plus - b.lambda_minus);
    CHECK_FALSE(below_ground_state(integrate_real_axis(lat, b.lambda_minus - step, 1e-10)));
    CHECK_FALSE(below_ground_state(integrate_imag_axis(lat, b.lambda_plus + step, 1e-10)));
  }
  // The square lattice exchanges the axes with lambda -> -lambda.
  const auto sq = lambda_bounds(LatticeGeometry(1.0));
  CHECK(sq.lambda_minus == doctest::Approx(-sq.lambda_plus).epsilon(1e-7));
  CHECK(sq.lambda_plus == doctest::Approx(0.019660).epsilon(1e-4));
}

TEST_CASE("sign changes of c are counted beyond the ground state") {
  const LatticeGeometry lat(1.0);
  const auto far = integrate_real_axis(lat, -2.0, 1e-10);
  CHECK(far.czeros >= 1);
  CHECK_FALSE(below_ground_state(far));
}
