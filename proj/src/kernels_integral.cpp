#include <algorithm>
#include <cmath>
#include <vector>

#include "hyperkernel/errors.hpp"
#include "hyperkernel/kernels.hpp"

namespace hyperkernel::kernels {

namespace {

constexpr double kLn2 = 0.69314718055994530942;
constexpr double kLog2Pi = 1.8378770664093454836;
constexpr double kMinImLambda = 0.1;
constexpr double kQuadratureDecay = 0.25;

double log_cosh(double x) {
  x = std::abs(x);
  return x + std::log1p(std::exp(-2.0 * x)) - kLn2;
}

double log_sinh(double x) {
  if (x < 1.0) return std::log(std::sinh(x));
  return x + std::log1p(-std::exp(-2.0 * x)) - kLn2;
}

double sign_of(ExponentSign e) { return e == ExponentSign::plus ? 1.0 : -1.0; }

// int_R^inf W_k(r, rho) exp(il rho) d rho, continued analytically in il.
// With q = exp(-rho/2), Z = exp(r - rho) and c = cosh(r/2),
//   2 pi W = c^(-2a) q^(1-2a) P^(2a) / S + c^(2a) q^(1+2a) P^(-2a) / S,
//   S = sqrt((1 - Z)(1 - exp(-2r) Z)),  P = (1 + exp(-r) Z + S) / 2,
// and each power of Z integrates to an exponential.
cplx series_tail(double a, double r, double R, cplx il) {
  constexpr int kMaxTerms = 400;
  const double eps = std::exp(-2.0 * r);
  const double L = R - r;
  const double log_c = log_cosh(0.5 * r);
  const double t[3] = {1.0, -(1.0 + eps), eps};

  std::vector<double> s{1.0}, p{1.0}, g1{1.0}, g2{1.0}, u{1.0}, v{1.0};
  const cplx base1 = std::exp(-2.0 * a * log_c - (0.5 - a - il) * R);
  const cplx base2 = std::exp(2.0 * a * log_c - (0.5 + a - il) * R);

  auto term = [&](int n, double coef, double shift) {
    const cplx beta = shift + double(n) - il;
    if (std::abs(beta) < 1e-13) {
      throw PoleError("resolvent_via_integral: lambda sits on a pole of the continued integral");
    }
    return coef * std::exp(-double(n) * L) / beta;
  };

  cplx sum = base1 * term(0, 1.0, 0.5 - a) + base2 * term(0, 1.0, 0.5 + a);
  int quiet = 0;
  for (int n = 1; n < kMaxTerms; ++n) {
    double sn = n < 3 ? t[n] : 0.0;
    for (int j = 1; j < n; ++j) sn -= s[j] * s[n - j];
    s.push_back(0.5 * sn);
    p.push_back(n == 1 ? 0.5 * (std::exp(-r) + s[1]) : 0.5 * s[n]);

    double gn1 = 0.0, gn2 = 0.0;
    for (int j = 1; j <= n; ++j) {
      gn1 += ((2.0 * a + 1.0) * j - n) * p[j] * g1[n - j];
      gn2 += ((-2.0 * a + 1.0) * j - n) * p[j] * g2[n - j];
    }
    g1.push_back(gn1 / n);
    g2.push_back(gn2 / n);

    double un = g1[n], vn = g2[n];
    for (int j = 1; j <= n; ++j) {
      un -= s[j] * u[n - j];
      vn -= s[j] * v[n - j];
    }
    u.push_back(un);
    v.push_back(vn);

    const cplx contrib = base1 * term(n, un, 0.5 - a) + base2 * term(n, vn, 0.5 + a);
    sum += contrib;
    if (n > a + 2.0 && std::abs(contrib) <= 1e-17 * std::abs(sum)) {
      if (++quiet >= 3) return sum / (2.0 * kPi);
    } else {
      quiet = 0;
    }
  }
  throw ConvergenceError("resolvent_via_integral: tail series did not converge");
}

}  // namespace

double log_wave_kernel_offset(double k, double r, double offset) {
  if (!(offset > 0.0)) throw DomainError("wave_kernel: rho must exceed r");
  if (!(r >= 0.0)) throw DomainError("wave_kernel: r must be >= 0");
  const double a = std::abs(k);
  // cosh^2(rho/2) - cosh^2(r/2) = sinh((rho - r)/2) sinh((rho + r)/2)
  const double log_delta = log_sinh(0.5 * offset) + log_sinh(r + 0.5 * offset);
  // theta = arccosh(x) = arcsinh(sqrt(x^2 - 1)), sqrt(x^2 - 1) = sqrt(delta) / c
  const double log_ratio = 0.5 * log_delta - log_cosh(0.5 * r);
  const double theta = log_ratio < 20.0
                           ? std::asinh(std::exp(log_ratio))
                           : log_ratio + std::log1p(std::sqrt(1.0 + std::exp(-2.0 * log_ratio)));
  return -kLog2Pi - 0.5 * log_delta + log_cosh(2.0 * a * theta);
}

double wave_kernel(double k, const RadialArg& ra, double rho) {
  if (!(rho > ra.r())) throw DomainError("wave_kernel: rho must exceed r");
  return std::exp(log_wave_kernel_offset(k, ra.r(), rho - ra.r()));
}

double integral_decay_rate(const SpectralParams& sp) {
  return 0.5 - sp.abs_k() + sign_of(sp.convention().exponent) * sp.lambda().imag();
}

cplx resolvent_via_integral(const SpectralParams& sp, const RadialArg& ra,
                            const quad::QuadratureSpec& spec, const IntegralOptions& options) {
  const cplx lambda = sp.lambda();
  if (!(lambda.imag() >= kMinImLambda)) {
    throw DomainError("resolvent_via_integral: Im lambda must be >= 0.1");
  }
  if (!(options.near_field_length > 0.0)) {
    throw DomainError("resolvent_via_integral: near field length must be > 0");
  }
  const double k = sp.k();
  const double r = ra.r();
  const cplx il = sign_of(sp.convention().exponent) * cplx(0.0, 1.0) * lambda;
  const double L = options.near_field_length;

  const quad::QuadResult near = quad::integrate_sqrt_endpoint(
      [&](double rho, double off) { return std::exp(log_wave_kernel_offset(k, r, off) + il * rho); },
      r, L, spec);

  const double decay = integral_decay_rate(sp);
  TailMethod method = options.tail;
  if (method == TailMethod::automatic) {
    method = decay >= kQuadratureDecay ? TailMethod::quadrature : TailMethod::series;
  }
  cplx tail;
  if (method == TailMethod::quadrature) {
    if (!(decay > 0.0)) {
      throw DomainError("resolvent_via_integral: integrand does not decay; use the series tail");
    }
    const double start = r + L;
    tail = quad::integrate_panels(
               [&](double rho) {
                 return std::exp(log_wave_kernel_offset(k, r, (rho - start) + L) + il * rho);
               },
               start, std::clamp(1.0 / decay, 1.0, 8.0), spec)
               .value;
  } else {
    tail = series_tail(sp.abs_k(), r, r + L, il);
  }

  const cplx integral = near.value + tail;
  if (options.normalization == IntegralNormalization::half) return 0.5 * integral;
  return integral / (2.0 * cplx(0.0, 1.0) * lambda);
}

double heat_radial(double k, double t, double r, const quad::QuadratureSpec& spec) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("heat_radial: t must be > 0");
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("heat_radial: r must be >= 0");
  const double log_norm = kLog2Pi - 1.5 * std::log(4.0 * kPi * t);
  auto integrand = [&](double b, double off) {
    return std::exp(log_norm - b * b / (4.0 * t) + log_wave_kernel_offset(k, r, off) + std::log(b));
  };
  const double L = std::min(4.0, 12.0 * std::sqrt(t));
  const quad::QuadResult near = quad::integrate_sqrt_endpoint(
      [&](double b, double off) { return cplx(integrand(b, off), 0.0); }, r, L, spec);
  const double start = r + L;
  const quad::QuadResult tail = quad::integrate_panels(
      [&](double b) { return cplx(integrand(b, (b - start) + L), 0.0); }, start,
      std::clamp(std::sqrt(t), 0.25, 4.0), spec);
  return near.value.real() + tail.value.real();
}

KernelValue heat_kernel(double k, double t, const geom::DiscPoint& w, const geom::DiscPoint& w2,
                        const quad::QuadratureSpec& spec) {
  KernelValue kv;
  kv.phase = geom::phase_factor(k, w, w2);
  kv.radial = heat_radial(k, t, geom::distance(w, w2), spec);
  kv.value = kv.phase * kv.radial;
  return kv;
}

}  // namespace hyperkernel::kernels
