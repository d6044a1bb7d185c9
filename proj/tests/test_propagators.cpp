#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "hyperkernel/errors.hpp"
#include "hyperkernel/kernels.hpp"

using namespace hyperkernel;
using namespace hyperkernel::kernels;

namespace {

quad::QuadratureSpec spec_at(double tol) {
  quad::QuadratureSpec s;
  s.tol = tol;
  return s;
}

SupportedFunction constant_on(double radius) {
  return {[](const geom::DiscPoint&) { return cplx(1.0); }, geom::DiscPoint(), radius};
}

SupportedFunction bump(geom::DiscPoint center, double radius) {
  return {[center, radius](const geom::DiscPoint& z) {
            const double d = geom::distance(center, z) / radius;
            return cplx(d < 1.0 ? std::exp(1.0 - 1.0 / (1.0 - d * d)) : 0.0);
          },
          center, radius};
}

}  // namespace

TEST_CASE("wave propagator trivial cases") {
  const auto spec = default_disc_spec();
  const geom::DiscPoint w(cplx(0.1, 0.2));
  SupportedFunction zero{[](const geom::DiscPoint&) { return cplx(0.0); }, geom::DiscPoint(), 1.0};
  CHECK(apply_wave_propagator(0.5, 1.0, zero, w, spec) == cplx(0.0));
  const auto far = bump(geom::DiscPoint(cplx(-0.7, 0.0)), 0.3);
  CHECK(geom::distance(w, far.center) - far.radius > 1.0);
  CHECK(apply_wave_propagator(0.5, 1.0, far, w, spec) == cplx(0.0));
  CHECK_THROWS_AS(apply_wave_propagator(0.5, 0.0, far, w, spec), DomainError);
}

TEST_CASE("wave propagator on constants") {
  // sin(t sqrt(-D)) / sqrt(-D) 1 = 2 sinh(t/2) at k = 0
  const auto spec = spec_at(1e-8);
  for (double t : {0.5, 1.0, 2.5}) {
    const cplx v = apply_wave_propagator(0.0, t, constant_on(t + 1.0), geom::DiscPoint(), spec);
    CHECK(v.real() == doctest::Approx(2.0 * std::sinh(0.5 * t)).epsilon(1e-7));
    CHECK(std::abs(v.imag()) < 1e-12);
  }
}

TEST_CASE("wave propagator small-t limit") {
  const auto spec = spec_at(1e-8);
  const auto u1 = bump(geom::DiscPoint(cplx(0.1, 0.0)), 1.5);
  const geom::DiscPoint w(cplx(0.15, 0.05));
  const double u = u1.f(w).real();
  for (double k : {0.0, 1.0}) {
    const auto ratio = [&](double t) { return apply_wave_propagator(k, t, u1, w, spec) / t; };
    // the error is O(t^2)
    const cplx extrapolated = (4.0 * ratio(0.01) - ratio(0.02)) / 3.0;
    CHECK(std::abs(extrapolated - u) < 1e-6);
  }
}

TEST_CASE("heat propagator") {
  const auto spec = default_disc_spec();
  const geom::DiscPoint w(cplx(0.05, -0.1));
  SupportedFunction zero{[](const geom::DiscPoint&) { return cplx(0.0); }, geom::DiscPoint(), 1.0};
  CHECK(apply_heat_propagator(0.0, 0.5, zero, w, spec) == cplx(0.0));
  // exp(t D) 1 = exp(t/4) up to the truncated tail of the kernel
  const cplx v = apply_heat_propagator(0.0, 0.3, constant_on(7.0), geom::DiscPoint(), spec);
  CHECK(v.real() == doctest::Approx(std::exp(0.075)).epsilon(1e-6));
  // approximate identity
  const auto v0 = bump(geom::DiscPoint(), 2.0);
  const double target = v0.f(w).real();
  const auto at = [&](double t) { return apply_heat_propagator(0.0, t, v0, w, spec).real(); };
  const double extrapolated = 2.0 * at(0.005) - at(0.01);
  CHECK(extrapolated == doctest::Approx(target).epsilon(1e-4));
}

TEST_CASE("heat semigroup at the kernel level") {
  // H(t1 + t2; w, w2) = int H(t1; w, z) H(t2; z, w2) dmu(z), phases included
  const auto line = spec_at(1e-9);
  const auto disc = spec_at(1e-7);
  const geom::DiscPoint w(cplx(0.1, 0.05)), w2(cplx(-0.2, 0.15));
  const double t1 = 0.3, t2 = 0.2, reach = 6.0;
  for (double k : {0.0, 0.5, 1.0}) {
    CAPTURE(k);
    const auto radial = [&](double r, double) { return cplx(heat_radial(k, t1, r, line)); };
    const auto angular = [&](const geom::DiscPoint& z) {
      return geom::phase_factor(k, w, z) * heat_kernel(k, t2, z, w2, line).value;
    };
    const cplx composed = quad::polar_integral(w, reach, radial, angular, disc).value;
    const cplx direct = heat_kernel(k, t1 + t2, w, w2, line).value;
    CHECK(std::abs(composed - direct) < 1e-6 * std::abs(direct));
  }
}
