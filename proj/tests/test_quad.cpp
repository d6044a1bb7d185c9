#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hyperkernel/errors.hpp"
#include "hyperkernel/quad.hpp"
#include "hyperkernel/specfun.hpp"

using namespace hyperkernel;
using namespace hyperkernel::quad;

namespace {

QuadratureSpec spec_at(double tol) {
  QuadratureSpec s;
  s.tol = tol;
  return s;
}

}  // namespace

TEST_CASE("spec validation") {
  QuadratureSpec s;
  CHECK_NOTHROW(s.validate());
  s.tol = 1e-16;
  CHECK_THROWS_AS(s.validate(), DomainError);
  s = {};
  s.max_levels = 13;
  CHECK_THROWS_AS(s.validate(), DomainError);
}

TEST_CASE("tanh_sinh benchmarks") {
  const auto spec = spec_at(1e-12);
  CHECK(tanh_sinh([](double) { return cplx(1.0); }, 0.0, 1.0, spec).value.real() ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(tanh_sinh([](double x) { return cplx(1.0 / std::sqrt(x)); }, 0.0, 1.0, spec).value.real() ==
        doctest::Approx(2.0).epsilon(1e-12));
  CHECK(tanh_sinh([](double x) { return cplx(std::log(x)); }, 0.0, 1.0, spec).value.real() ==
        doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(tanh_sinh([](double x) { return cplx(std::cos(x), std::sin(x)); }, -1.0, 2.0, spec).value.imag() ==
        doctest::Approx(std::cos(-1.0) - std::cos(2.0)).epsilon(1e-12));
  // beta(0.5, 1.5) = pi / 2 with exact endpoint offsets
  const auto beta = tanh_sinh_endpoint(
      [](double, double from0, double to1) { return cplx(std::pow(from0, -0.5) * std::pow(to1, 0.5)); },
      0.0, 1.0, spec);
  CHECK(beta.value.real() == doctest::Approx(kPi / 2).epsilon(1e-12));
  CHECK(beta.converged);
  // strong singularity at the right endpoint needs the offset
  const double b = 0.1;
  const auto strong = tanh_sinh_endpoint(
      [b](double, double, double to1) { return cplx(std::pow(to1, b - 1.0)); }, 0.0, 1.0, spec);
  CHECK(strong.value.real() == doctest::Approx(1.0 / b).epsilon(1e-11));
}

TEST_CASE("tanh_sinh failure modes") {
  const auto spec = spec_at(1e-12);
  CHECK_THROWS_AS(tanh_sinh([](double x) { return cplx(1.0 / std::sqrt(x + 1e-100) / (x + 1e-100)); }, 0.0, 1.0,
                            spec),
                  ConvergenceError);
  auto lax = spec;
  lax.strict = false;
  lax.max_levels = 3;
  const auto osc = [](double x) { return cplx(std::cos(50.0 * x)); };
  CHECK_FALSE(tanh_sinh(osc, 0.0, 10.0, lax).converged);
  lax.strict = true;
  CHECK_THROWS_AS(tanh_sinh(osc, 0.0, 10.0, lax), ConvergenceError);
  CHECK_THROWS_AS(tanh_sinh([](double) { return cplx(NAN); }, 0.0, 1.0, spec), DomainError);
  CHECK(tanh_sinh([](double) { return cplx(3.0); }, 2.0, 2.0, spec).value == cplx(0.0));
}

TEST_CASE("square-root endpoint and panels") {
  const auto spec = spec_at(1e-12);
  // int_1^{1+L} (rho - 1)^(-1/2) exp(-rho) d rho with the offset passed exactly
  const auto near = integrate_sqrt_endpoint(
      [](double rho, double off) { return cplx(std::exp(-rho) / std::sqrt(off)); }, 1.0, 40.0, spec);
  CHECK(near.value.real() == doctest::Approx(std::sqrt(kPi) / std::exp(1.0)).epsilon(1e-11));
  const auto tail = integrate_panels([](double x) { return cplx(std::exp(-x)); }, 0.0, 2.0, spec);
  CHECK(tail.value.real() == doctest::Approx(1.0).epsilon(1e-12));
  CHECK_THROWS_AS(integrate_panels([](double) { return cplx(1.0); }, 0.0, 1.0, spec, 50),
                  ConvergenceError);
}

TEST_CASE("integrate_wave_tail") {
  const auto spec = spec_at(1e-12);
  const cplx i(0.0, 1.0);
  const auto v = integrate_wave_tail(
      [](double, double off) { return cplx(1.0 / std::sqrt(off)); }, 1.0, i, spec);
  CHECK(std::abs(v.value - std::sqrt(kPi) / std::exp(1.0)) < 1e-11);
  CHECK(integrate_wave_tail([](double, double) { return cplx(0.0); }, 1.0, i, spec).value == cplx(0.0));
  const auto e = integrate_wave_tail([](double rho, double) { return cplx(std::exp(-rho)); }, 0.0, i, spec);
  CHECK(std::abs(e.value - 0.5) < 1e-12);
  // oscillating: int_0^inf exp((i lambda) rho) = i / lambda
  const cplx lam(2.0, 0.5);
  const auto osc = integrate_wave_tail([](double, double) { return cplx(1.0); }, 0.0, lam, spec);
  CHECK(std::abs(osc.value - i / lam) < 1e-10);
}

TEST_CASE("laplace_integral") {
  const auto spec = spec_at(1e-12);
  CHECK(std::abs(laplace_integral([](double) { return cplx(1.0); }, 2.0, spec).value - 0.5) < 1e-12);
  CHECK(std::abs(laplace_integral([](double t) { return cplx(t); }, 1.0, spec).value - 1.0) < 1e-12);
  const double a = 2.0;
  const auto pair = laplace_integral(
      [a](double t) {
        return cplx(t > 0.0 ? a / std::sqrt(4.0 * kPi * t * t * t) * std::exp(-a * a / (4.0 * t)) : 0.0);
      },
      1.0, spec);
  CHECK(std::abs(pair.value - std::exp(-2.0)) < 1e-10);
  const cplx p(1.5, 2.0);
  CHECK(std::abs(laplace_integral([](double t) { return cplx(std::sin(t)); }, p, spec).value -
                 1.0 / (p * p + 1.0)) < 1e-10);
}

TEST_CASE("disc and polar integrals") {
  const auto spec = spec_at(1e-9);
  CHECK(disc_integral([](const geom::DiscPoint&) { return cplx(0.0); }, spec, 1.0).value == cplx(0.0));
  // hyperbolic area of the ball of radius R
  for (double R : {0.3, 1.0, 4.0}) {
    const auto area = polar_integral(
        geom::DiscPoint(cplx(0.2, -0.3)), R, [](double, double) { return cplx(1.0); },
        [](const geom::DiscPoint&) { return cplx(1.0); }, spec);
    CHECK(area.value.real() == doctest::Approx(4.0 * kPi * std::pow(std::sinh(R / 2), 2)).epsilon(1e-9));
  }
  // smoothly truncated indicator of the unit ball around the origin
  const auto smooth_ball = [](const geom::DiscPoint& w) {
    const double d = geom::distance(geom::DiscPoint(), w);
    return cplx(0.5 * std::erfc((d - 1.0) * 200.0));
  };
  const auto area = disc_integral(smooth_ball, spec, 1.2, {1.0});
  // erfc smoothing adds sigma^2/2 * d/dR(2 pi sinh R) at R = 1
  const double sigma2 = 1.0 / (2.0 * 200.0 * 200.0);
  const double smoothed = 4.0 * kPi * std::pow(std::sinh(0.5), 2) + 0.5 * sigma2 * 2.0 * kPi * std::cosh(1.0);
  CHECK(area.value.real() == doctest::Approx(smoothed).epsilon(1e-8));
  // rotational invariance
  const auto f = [](const geom::DiscPoint& w) {
    const cplx z = w.value();
    return cplx(std::exp(-4.0 * std::norm(z - cplx(0.3, 0.1))));
  };
  const double th = 0.9;
  const auto g = [&](const geom::DiscPoint& w) { return f(geom::DiscPoint(std::polar(1.0, th) * w.value())); };
  const auto a1 = disc_integral(f, spec, 4.0), a2 = disc_integral(g, spec, 4.0);
  CHECK(std::abs(a1.value - a2.value) < 1e-8 * std::abs(a1.value));
}
