#include <array>
#include <cmath>
#include <string>

#include "hyperkernel/errors.hpp"
#include "hyperkernel/specfun.hpp"

namespace hyperkernel {

cplx principal_pow(cplx w, cplx p) {
  if (w == cplx(0.0, 0.0)) {
    if (p.real() > 0.0) return {0.0, 0.0};
    if (p == cplx(0.0, 0.0)) return {1.0, 0.0};
    throw DomainError("principal_pow: zero base with Re p <= 0");
  }
  return std::exp(p * std::log(w));
}

namespace specfun {
namespace {

// B_{2m} / (2m (2m - 1)), Stirling series for log Gamma.
constexpr std::array<double, 10> kStirling = {
    1.0 / 12.0,         -1.0 / 360.0,        1.0 / 1260.0,
    -1.0 / 1680.0,      1.0 / 1188.0,        -691.0 / 360360.0,
    1.0 / 156.0,        -3617.0 / 122400.0,  43867.0 / 244188.0,
    -174611.0 / 125400.0};

// B_{2m} / (2m), asymptotic series for digamma.
constexpr std::array<double, 8> kDigammaAsym = {
    1.0 / 12.0,  -1.0 / 120.0,       1.0 / 252.0, -1.0 / 240.0,
    1.0 / 132.0, -691.0 / 32760.0,   1.0 / 12.0,  -3617.0 / 8160.0};

constexpr double kShiftModulus = 15.0;

std::string describe(cplx z) {
  return "(" + std::to_string(z.real()) + ", " + std::to_string(z.imag()) + ")";
}

// log sin(pi z), modulo 2 pi i, without overflow for large |Im z|.
cplx log_sin_pi(cplx z) {
  if (std::abs(z.imag()) < 5.0) return std::log(std::sin(kPi * z));
  if (z.imag() < 0.0) return std::conj(log_sin_pi(std::conj(z)));
  const cplx i(0.0, 1.0);
  const cplx e2 = std::exp(2.0 * kPi * i * z);
  return std::log(0.5 * i) - i * kPi * z + std::log(1.0 - e2);
}

cplx log_gamma_stirling(cplx w) {
  cplx sum = (w - 0.5) * std::log(w) - w + 0.5 * std::log(2.0 * kPi);
  const cplx inv = 1.0 / w;
  const cplx inv2 = inv * inv;
  cplx pw = inv;
  for (double coef : kStirling) {
    sum += coef * pw;
    pw *= inv2;
  }
  return sum;
}

}  // namespace

bool is_nonpositive_integer(cplx z) {
  if (std::abs(z.imag()) > 1e-14 || z.real() > 0.5) return false;
  return std::abs(z.real() - std::round(z.real())) < 1e-14;
}

cplx pochhammer(cplx a, unsigned n) {
  if (n == 0) return {1.0, 0.0};
  if (n > 100) {
    if (is_nonpositive_integer(a) && -std::round(a.real()) < n) return {0.0, 0.0};
    if (is_nonpositive_integer(a + static_cast<double>(n)))
      throw PoleError("pochhammer: Gamma(a + n) pole");
    return std::exp(log_gamma(a + static_cast<double>(n)) - log_gamma(a));
  }
  cplx prod(1.0, 0.0);
  for (unsigned j = 0; j < n; ++j) prod *= a + static_cast<double>(j);
  return prod;
}

cplx log_gamma(cplx z) {
  if (is_nonpositive_integer(z)) throw PoleError("log_gamma: pole at " + describe(z));
  if (z.real() < 0.5) {
    return std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
  }
  cplx w = z;
  cplx shift(0.0, 0.0);
  while (std::abs(w) < kShiftModulus) {
    shift += std::log(w);
    w += 1.0;
  }
  return log_gamma_stirling(w) - shift;
}

cplx gamma(cplx z) {
  if (z.imag() == 0.0 && z.real() > 0.0 && z.real() < 171.0) {
    return {std::tgamma(z.real()), 0.0};
  }
  return std::exp(log_gamma(z));
}

cplx rgamma(cplx z) {
  if (is_nonpositive_integer(z)) return {0.0, 0.0};
  return std::exp(-log_gamma(z));
}

cplx digamma(cplx z) {
  if (is_nonpositive_integer(z)) throw PoleError("digamma: pole at " + describe(z));
  if (z.real() < 0.5) {
    return digamma(1.0 - z) - kPi / std::tan(kPi * z);
  }
  cplx w = z;
  cplx shift(0.0, 0.0);
  while (std::abs(w) < kShiftModulus) {
    shift += 1.0 / w;
    w += 1.0;
  }
  const cplx inv2 = 1.0 / (w * w);
  cplx pw = inv2;
  cplx sum = std::log(w) - 0.5 / w;
  for (double coef : kDigammaAsym) {
    sum -= coef * pw;
    pw *= inv2;
  }
  return sum - shift;
}

}  // namespace specfun
}  // namespace hyperkernel
