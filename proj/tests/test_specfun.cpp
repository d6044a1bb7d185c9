#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "hyperkernel/errors.hpp"
#include "hyperkernel/specfun.hpp"
#include "oracle.hpp"

using namespace hyperkernel;
using namespace hyperkernel::specfun;

namespace {

double rel(cplx got, cplx want) { return std::abs(got - want) / std::abs(want); }

cplx random_param(std::mt19937_64& rng, double max_modulus) {
  std::uniform_real_distribution<double> mod(0.0, max_modulus), ang(0.0, 2.0 * kPi);
  return std::polar(mod(rng), ang(rng));
}

}  // namespace

TEST_CASE("gamma against the 50-digit Stirling oracle") {
  const cplx pts[] = {{0.5, 0.0}, {1.0, 0.0}, {3.7, 0.0},  {0.3, 2.0},  {-2.5, 0.7},
                      {12.0, -5.0}, {-7.3, 0.1}, {0.01, 0.0}, {0.5, -20.0}, {150.0, 3.0}};
  for (cplx z : pts) {
    CAPTURE(z);
    CHECK(rel(gamma(z), oracle::gamma(z)) < 1e-13);
    CHECK(std::abs(rgamma(z) * oracle::gamma(z) - 1.0) < 1e-13);
  }
  CHECK(specfun::gamma(cplx(5.0)).real() == doctest::Approx(24.0).epsilon(1e-15));
}

TEST_CASE("log_gamma branch and values") {
  const cplx pts[] = {{0.5, 0.0}, {2.0, 3.0}, {0.1, -7.0}, {30.0, 40.0}, {1e-3, 1e-3}, {5.0, -100.0}};
  for (cplx z : pts) {
    CAPTURE(z);
    CHECK(std::abs(log_gamma(z) - oracle::log_gamma(z)) < 1e-12 * std::max(1.0, std::abs(log_gamma(z))));
  }
  // reflection, modulo 2 pi i
  for (cplx z : {cplx(0.3, 0.4), cplx(-1.7, 0.2), cplx(2.2, -1.1)}) {
    const cplx d = log_gamma(z) + log_gamma(1.0 - z) - std::log(kPi / std::sin(kPi * z));
    const double turns = d.imag() / (2.0 * kPi);
    CHECK(std::abs(d.real()) < 1e-12);
    CHECK(std::abs(turns - std::round(turns)) < 1e-12);
  }
}

TEST_CASE("gamma poles") {
  CHECK(rgamma(0.0) == cplx(0.0));
  CHECK(rgamma(-3.0) == cplx(0.0));
  CHECK_THROWS_AS(specfun::gamma(cplx(-2.0)), PoleError);
  CHECK(is_nonpositive_integer(-4.0));
  CHECK_FALSE(is_nonpositive_integer(cplx(-4.0, 1e-3)));
  CHECK_FALSE(is_nonpositive_integer(1.0));
}

TEST_CASE("digamma against the asymptotic oracle") {
  for (cplx z : {cplx(1.0, 0.0), cplx(0.25, 0.0), cplx(3.0, 4.0), cplx(-2.5, 0.5), cplx(0.5, -9.0)}) {
    CAPTURE(z);
    CHECK(rel(digamma(z), oracle::digamma(z)) < 1e-12);
  }
  CHECK(digamma(1.0).real() == doctest::Approx(-kEulerGamma).epsilon(1e-15));
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(3.0, 0) == cplx(1.0));
  CHECK(pochhammer(3.0, 4).real() == doctest::Approx(3.0 * 4 * 5 * 6));
  const cplx a(0.3, 1.2);
  CHECK(rel(pochhammer(a, 120), std::exp(log_gamma(a + 120.0) - log_gamma(a))) < 1e-11);
  CHECK(rel(pochhammer(a, 120), oracle::gamma(a + 120.0) / oracle::gamma(a)) < 1e-11);
}

TEST_CASE("gauss_2f1 trivial values") {
  CHECK(gauss_2f1({0.3, 0.4, 1.1, 0.0}) == cplx(1.0));
  CHECK(gauss_2f1({1.0, 1.0, 2.0, 0.5}).real() == doctest::Approx(1.386294361120).epsilon(1e-12));
  for (double z : {0.3, -2.0, 1.0, 5.0}) {
    CAPTURE(z);
    const cplx want = 1.0 - 6.0 * z + 6.0 * z * z;
    CHECK(std::abs(gauss_2f1({-2.0, 3.0, 1.0, z}) - want) <= 1e-13 * std::abs(want));
  }
}

TEST_CASE("gauss_2f1 against the direct series inside the unit disc") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> zr(0.0, 0.9), za(0.0, 2.0 * kPi);
  for (int i = 0; i < 60; ++i) {
    const cplx a = random_param(rng, 3.0), b = random_param(rng, 3.0);
    const cplx c = random_param(rng, 3.0) + 3.5;
    const cplx z = std::polar(zr(rng), za(rng));
    CAPTURE(a);
    CAPTURE(b);
    CAPTURE(c);
    CAPTURE(z);
    CHECK(rel(gauss_2f1({a, b, c, z}), oracle::series_2f1(a, b, c, z)) < 1e-10);
  }
}

TEST_CASE("gauss_2f1 symmetry and Euler transformation") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> zr(0.0, 0.5), za(0.0, 2.0 * kPi);
  for (int i = 0; i < 50; ++i) {
    const cplx a = random_param(rng, 5.0), b = random_param(rng, 5.0), c = random_param(rng, 5.0);
    if (std::abs(c - std::round(c.real())) < 0.2) continue;
    const cplx z = std::polar(zr(rng), za(rng));
    const cplx f = gauss_2f1({a, b, c, z});
    CHECK(rel(gauss_2f1({b, a, c, z}), f) < 1e-14);
    CHECK(rel(principal_pow(1.0 - z, c - a - b) * gauss_2f1({c - a, c - b, c, z}), f) < 1e-10);
  }
}

TEST_CASE("gauss_2f1 outside the unit disc against closed forms") {
  // F(1,1;2;z) = -log(1-z)/z
  for (cplx z : {cplx(-3.0, 0.0), cplx(-50.0, 0.0), cplx(2.0, 3.0), cplx(0.95, 0.0), cplx(0.5, 0.8)}) {
    CAPTURE(z);
    CHECK(rel(gauss_2f1({1.0, 1.0, 2.0, z}), -std::log(1.0 - z) / z) < 1e-12);
  }
  // F(a,b;b;z) = (1-z)^(-a)
  const cplx a(0.3, 0.2);
  for (cplx z : {cplx(-5.0, 0.0), cplx(2.0, 1.0), cplx(0.8, 0.5), cplx(-0.9, -3.0)}) {
    CAPTURE(z);
    CHECK(rel(gauss_2f1({a, 1.7, 1.7, z}), principal_pow(1.0 - z, -a)) < 1e-12);
  }
  // F(1/2,1;3/2;-x^2) = atan(x)/x
  CHECK(rel(gauss_2f1({0.5, 1.0, 1.5, -4.0}), std::atan(2.0) / 2.0) < 1e-12);
  // F(1/2,1/2;3/2;x^2) = asin(x)/x
  CHECK(rel(gauss_2f1({0.5, 0.5, 1.5, 0.81}), std::asin(0.9) / 0.9) < 1e-12);
}

TEST_CASE("gauss_2f1 on the cut needs a side") {
  CHECK_THROWS_AS(gauss_2f1({1.0, 1.0, 2.0, 3.0}), BranchCutError);
  const cplx above = gauss_2f1({1.0, 1.0, 2.0, 3.0}, 1e-15, CutSide::above);
  const cplx below = gauss_2f1({1.0, 1.0, 2.0, 3.0}, 1e-15, CutSide::below);
  const cplx want_above = -cplx(std::log(2.0), -kPi) / 3.0;
  CHECK(rel(above, want_above) < 1e-12);
  CHECK(rel(below, std::conj(want_above)) < 1e-12);
}

TEST_CASE("gauss_2f1 at z = 1 and poles") {
  // Gauss summation
  const cplx a(0.3, 0.1), b(0.2, -0.4), c(2.5, 0.3);
  const cplx want = gamma(c) * gamma(c - a - b) / (gamma(c - a) * gamma(c - b));
  CHECK(rel(gauss_2f1({a, b, c, 1.0}), want) < 1e-13);
  CHECK_THROWS_AS(gauss_2f1({1.0, 1.0, 2.0, 1.0}), DomainError);
  CHECK_THROWS_AS(gauss_2f1({1.0, 1.0, -2.0, 0.3}), PoleError);
  // 1 - z passed exactly keeps z = 1 - 1e-20 off the singular point
  const cplx f = gauss_2f1({0.5, 0.5, 1.0, 1.0, cplx(1e-20)});
  CHECK(std::isfinite(f.real()));
  CHECK(f.real() == doctest::Approx((std::log(16.0) + 20.0 * std::log(10.0)) / kPi).epsilon(1e-9));
}

TEST_CASE("gauss_2f1 logarithmic cases") {
  CHECK(gauss_2f1_log_case(1.0, 1.0, 0, 0.9).real() == doctest::Approx(2.558427881).epsilon(1e-9));
  CHECK(rel(gauss_2f1_log_case(1.0, 1.0, 0, 0.9), -std::log(0.1) / 0.9) < 1e-13);
  CHECK(gauss_2f1_log_case(0.4, 0.7, 0, 0.0) == cplx(1.0));
  // m >= 1 against the direct series
  for (double z : {0.55, 0.8, 0.97}) {
    CAPTURE(z);
    const cplx a(0.3, 0.5), b(1.2, -0.2);
    for (int m : {1, 2, 3}) {
      CAPTURE(m);
      const cplx want = oracle::series_2f1(a, b, a + b - double(m), z);
      CHECK(rel(gauss_2f1_log_case(a, b, m, z), want) < 1e-11);
      CHECK(rel(gauss_2f1({a, b, a + b - double(m), z}), want) < 1e-11);
    }
  }
  // leading coefficient: F(a,b;a+b;z) ~ -log(1-z) G(a+b)/(G(a)G(b))
  const cplx a(0.6, 0.0), b(0.9, 0.0);
  const cplx lead = gamma(a + b) / (gamma(a) * gamma(b));
  const double z1 = 1.0 - 1e-6, z2 = 1.0 - 1e-8;
  const cplx slope = (gauss_2f1_log_case(a, b, 0, z2) - gauss_2f1_log_case(a, b, 0, z1)) /
                     (-std::log(1e-8) + std::log(1e-6));
  CHECK(rel(slope, lead) < 1e-5);
  CHECK_THROWS_AS(gauss_2f1_log_case(a, b, -1, 0.5), DomainError);
  CHECK_THROWS_AS(gauss_2f1_log_case(a, b, 0, 1.5), DomainError);
}

TEST_CASE("principal_pow") {
  CHECK(std::abs(principal_pow(-1.0, 0.5) - cplx(0.0, 1.0)) < 1e-15);
  CHECK(principal_pow(0.0, 2.0) == cplx(0.0));
  CHECK(rel(principal_pow(cplx(2.0, -1.0), cplx(0.3, 0.7)),
            std::exp(cplx(0.3, 0.7) * std::log(cplx(2.0, -1.0)))) < 1e-15);
}

TEST_CASE("chebyshev_T") {
  CHECK(chebyshev_T(0, 0.3) == 1.0);
  CHECK(chebyshev_T(2, 0.8) == doctest::Approx(0.28).epsilon(1e-15));
  CHECK(chebyshev_T(4, 2.0) == doctest::Approx(97.0).epsilon(1e-15));
  CHECK(chebyshev_T(3, -2.0) == doctest::Approx(-26.0).epsilon(1e-15));
  for (unsigned n = 0; n <= 50; ++n) {
    for (double th = 0.0; th <= kPi; th += 0.1) {
      CHECK(std::abs(chebyshev_T(n, std::cos(th)) - std::cos(n * th)) < 1e-12);
    }
  }
  CHECK(chebyshev_T(7, 1.3) == doctest::Approx(std::cosh(7.0 * std::acosh(1.3))).epsilon(1e-14));
}

TEST_CASE("cos_form_F") {
  CHECK(cos_form_F(0.37, 1.0) == doctest::Approx(1.0));
  CHECK(cos_form_F(1.0, 1.5) == doctest::Approx(3.5).epsilon(1e-15));
  CHECK(std::abs(cos_form_F(0.75, 1.3) / gauss_2f1({0.75, -0.75, 0.5, 1.0 - 1.69}).real() - 1.0) < 1e-10);
  for (double a : {0.1, 0.5, 1.3, 2.3, 4.0}) {
    CAPTURE(a);
    for (double x : {1.01, 1.2, 1.4}) {
      const cplx want = oracle::series_2f1(cplx(a), cplx(-a), cplx(0.5), cplx(1.0 - x * x));
      CHECK(std::abs(cos_form_F(a, x) / want.real() - 1.0) < 1e-12);
    }
    for (double x : {3.0, 10.0}) {
      CHECK(std::abs(cos_form_F(a, x) / gauss_2f1({a, -a, 0.5, 1.0 - x * x}).real() - 1.0) < 1e-10);
    }
  }
  CHECK(cos_form_F_from_excess(0.5, 0.0) == doctest::Approx(1.0));
  CHECK(cos_form_F_from_excess(1.0, 1.25) == doctest::Approx(3.5).epsilon(1e-15));
  CHECK_THROWS_AS(cos_form_F(0.5, 0.9), DomainError);
}
