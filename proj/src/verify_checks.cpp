#include <algorithm>
#include <cmath>

#include "hyperkernel/errors.hpp"
#include "hyperkernel/verify.hpp"

namespace hyperkernel::verify {

namespace {

using kernels::SpectralParams;

Json convention_json(const kernels::Convention& c) {
  Json j = Json::array();
  for (const auto& n : c.names()) j.push_back(n);
  return j;
}

cplx hyp(cplx a, cplx b, cplx c, double z, double one_minus_z) {
  return specfun::gauss_2f1({a, b, c, z, cplx(one_minus_z, 0.0)});
}

double log_sinh(double x) {
  if (x < 1.0) return std::log(std::sinh(x));
  return x + std::log1p(-std::exp(-2.0 * x)) - std::log(2.0);
}

}  // namespace

std::string to_string(Solution v) { return v == Solution::regular ? "regular" : "outgoing"; }

std::string to_string(RegularThirdParam v) {
  return v == RegularThirdParam::one ? "c=1" : "c=2|k|+1";
}

std::string to_string(LaplaceVariable v) {
  return v == LaplaceVariable::lambda_squared ? "p=lambda^2" : "p=lambda";
}

cplx radial_operator_apply(double k, const RealFunction& phi, double y, double h) {
  if (!(h > 0.0)) throw DomainError("radial_operator_apply: h must be > 0");
  if (!(y - 2.0 * h > 1.0)) throw DomainError("radial_operator_apply: stencil leaves y > 1");
  const cplx fm2 = phi(y - 2.0 * h), fm1 = phi(y - h), f0 = phi(y), fp1 = phi(y + h),
             fp2 = phi(y + 2.0 * h);
  const cplx d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
  const cplx d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
  return y * (y - 1.0) * d2 + (2.0 * y - 1.0) * d1 + (k * k / y + 0.25) * f0;
}

cplx helmholtz_solution(const SpectralParams& sp, Solution which, double y, RegularThirdParam c3) {
  const cplx s = sp.s();
  const double ak = sp.abs_k();
  if (which == Solution::regular) {
    const cplx c = c3 == RegularThirdParam::one ? cplx(1.0, 0.0) : cplx(2.0 * ak + 1.0, 0.0);
    return std::pow(y, ak) * specfun::gauss_2f1({s + ak, 1.0 - s + ak, c, 1.0 - y});
  }
  const auto& conv = sp.convention();
  double log_Y, complement;
  if (conv.argument == kernels::ArgumentVariant::cosh_sq_half_r) {
    log_Y = std::log(y);
    complement = (y - 1.0) / y;
  } else {
    const double Y = (2.0 * y - 1.0) * (2.0 * y - 1.0);
    log_Y = std::log(Y);
    complement = 4.0 * y * (y - 1.0) / Y;
  }
  const cplx e = conv.prefactor == kernels::PrefactorExponent::s ? s : s + ak;
  return std::exp(-e * log_Y) * hyp(sp.a(), sp.b(), sp.c(), std::exp(-log_Y), complement);
}

ResidualReport helmholtz_solution_residual(const SpectralParams& sp, Solution which,
                                           const std::vector<double>& ygrid, RegularThirdParam c3) {
  const double k = sp.k();
  const cplx lam2 = sp.lambda() * sp.lambda();
  const RealFunction phi = [&](double y) { return helmholtz_solution(sp, which, y, c3); };
  auto residual_at = [&](double y, double h) {
    const cplx v = phi(y);
    return std::abs(radial_operator_apply(k, phi, y, h) + lam2 * v) / (1.0 + std::abs(v));
  };
  double worst = 0.0, coarse = 0.0, fine = 0.0;
  for (double y : ygrid) {
    worst = std::max(worst, residual_at(y, kHelmholtzStep * y));
    const double h0 = std::min(0.02 * y, 0.25 * (y - 1.0));
    coarse = std::max(coarse, residual_at(y, h0));
    fine = std::max(fine, residual_at(y, 0.5 * h0));
  }
  const double order = std::log2(coarse / fine);
  Json p = Json::object();
  p["k"] = number_json(k);
  p["lambda"] = complex_json(sp.lambda());
  p["solution"] = to_string(which);
  if (which == Solution::regular) p["third_parameter"] = to_string(c3);
  p["convention"] = convention_json(sp.convention());
  p["y_min"] = number_json(*std::min_element(ygrid.begin(), ygrid.end()));
  p["y_max"] = number_json(*std::max_element(ygrid.begin(), ygrid.end()));
  p["n"] = ygrid.size();
  p["refinement_order"] = number_json(order);
  return ResidualReport::make("helmholtz." + to_string(which), p, worst, kHelmholtzTol);
}

std::vector<RadialTestFunction> standard_bumps() {
  auto bump = [](double x) { return std::abs(x) < 1.0 ? std::exp(-1.0 / (1.0 - x * x)) : 0.0; };
  return {
      {"gaussian", [](double r) { return r < 7.0 ? std::exp(-r * r) : 0.0; }, 7.0},
      {"compact_bump", [bump](double r) { return bump(r / 2.0); }, 2.0},
      {"modulated_bump", [bump](double r) { return std::cos(2.0 * r) * bump(r / 1.5); }, 1.5},
  };
}

cplx green_pairing(const SpectralParams& sp, const RadialTestFunction& phi,
                   const quad::QuadratureSpec& spec, double h) {
  const double k = sp.k();
  const cplx lam2 = sp.lambda() * sp.lambda();
  const auto even = [&phi](double x) { return phi.f(std::abs(x)); };
  const auto integrand = [&](double r) -> cplx {
    if (r < 1e-100) return {0.0, 0.0};
    const double fm2 = even(r - 2.0 * h), fm1 = even(r - h), f0 = even(r), fp1 = even(r + h),
                 fp2 = even(r + 2.0 * h);
    if (fm2 == 0.0 && fm1 == 0.0 && f0 == 0.0 && fp1 == 0.0 && fp2 == 0.0) return {0.0, 0.0};
    const double d1 = (fm2 - 8.0 * fm1 + 8.0 * fp1 - fp2) / (12.0 * h);
    const double d2 = (-fm2 + 16.0 * fm1 - 30.0 * f0 + 16.0 * fp1 - fp2) / (12.0 * h * h);
    const double ch = std::cosh(0.5 * r);
    const cplx op = d2 + d1 / std::tanh(r) + (k * k / (ch * ch) + 0.25 + lam2) * f0;
    return kernels::resolvent_radial(sp, kernels::RadialArg(r)) * op * std::sinh(r);
  };
  return 2.0 * kPi * quad::tanh_sinh(integrand, 0.0, phi.support, spec).value;
}

cplx symmetric_limit(const std::function<cplx(cplx)>& f, cplx lambda, double eps) {
  return 0.5 * (f(lambda * (1.0 + eps)) + f(lambda * (1.0 - eps)));
}

ResidualReport exp_formula_check(double a, const std::vector<double>& zgrid) {
  if (!(a > -0.25)) throw DomainError("exp_formula_check: a must be > -1/4");
  double worst = 0.0;
  for (double z : zgrid) {
    if (!(z > 0.0)) throw DomainError("exp_formula_check: z must be > 0");
    const double ch = std::cosh(z);
    const double th = std::tanh(z);
    const cplx lhs = hyp(a + 1.0, a + 0.5, 2.0 * a + 1.0, 1.0 / (ch * ch), th * th);
    const double rhs = std::exp(-2.0 * a * z + 2.0 * a * std::log(2.0 * ch)) / th;
    worst = std::max(worst, std::abs(lhs - rhs) / std::abs(rhs));
  }
  Json p = Json::object();
  p["a"] = number_json(a);
  p["z_min"] = number_json(*std::min_element(zgrid.begin(), zgrid.end()));
  p["z_max"] = number_json(*std::max_element(zgrid.begin(), zgrid.end()));
  p["n"] = zgrid.size();
  return ResidualReport::make("exp_formula", p, worst, 1e-9);
}

ResidualReport chebyshev_specialization_check(double k,
                                              const std::vector<std::pair<double, double>>& grid) {
  const double two_k = 2.0 * std::abs(k);
  const double n = std::round(two_k);
  if (std::abs(two_k - n) > 1e-12) {
    throw DomainError("chebyshev_specialization_check: 2|k| must be an integer");
  }
  double worst = 0.0;
  for (const auto& [r, rho] : grid) {
    const double lib = kernels::wave_kernel(k, kernels::RadialArg(r), rho);
    const double cr = std::cosh(0.5 * r), cp = std::cosh(0.5 * rho);
    const double oracle = specfun::chebyshev_T(unsigned(n), cp / cr) /
                          (2.0 * kPi * std::sqrt(cp * cp - cr * cr));
    worst = std::max(worst, std::abs(lib - oracle) / std::abs(oracle));
  }
  Json p = Json::object();
  p["k"] = number_json(k);
  p["pairs"] = grid.size();
  return ResidualReport::make("chebyshev_specialization", p, worst, 1e-12);
}

ResidualReport subordination_scalar_check(double a, double y, const quad::QuadratureSpec& spec) {
  if (!(a > 0.0)) throw DomainError("subordination_scalar_check: a must be > 0");
  const auto f = [y](double x) -> cplx { return y == 0.0 ? x : std::sin(x * y) / y; };
  const cplx v = quad::laplace_integral(f, a, spec).value;
  const double exact = 1.0 / (a * a + y * y);
  Json p = Json::object();
  p["a"] = number_json(a);
  p["y"] = number_json(y);
  p["value"] = number_json(v.real());
  return ResidualReport::make("subordination_scalar", p, std::abs(v - exact) / exact, 1e-9);
}

ResidualReport laplace_pair_check(double a, double p, const quad::QuadratureSpec& spec) {
  if (!(a > 0.0) || !(p > 0.0)) throw DomainError("laplace_pair_check: a and p must be > 0");
  const auto f = [a](double x) -> cplx {
    if (!(x > 0.0)) return 0.0;
    return std::exp(std::log(a) - 0.5 * std::log(4.0 * kPi) - 1.5 * std::log(x) - a * a / (4.0 * x));
  };
  const cplx v = quad::laplace_integral(f, p, spec).value;
  const double exact = std::exp(-a * std::sqrt(p));
  Json j = Json::object();
  j["a"] = number_json(a);
  j["p"] = number_json(p);
  j["value"] = number_json(v.real());
  return ResidualReport::make("laplace_pair", j, std::abs(v - exact) / exact, 1e-8);
}

ResidualReport resolvent_heat_laplace_check(double k, double lambda, double r,
                                            const quad::QuadratureSpec& spec,
                                            LaplaceVariable variable) {
  const double p = variable == LaplaceVariable::lambda_squared ? lambda * lambda : lambda;
  const cplx target =
      kernels::resolvent_radial(SpectralParams(k, cplx(0.0, lambda)), kernels::RadialArg(r));
  const cplx v = quad::laplace_integral(
                     [&](double t) -> cplx { return kernels::heat_radial(k, t, r, spec); }, p, spec)
                     .value;
  Json j = Json::object();
  j["k"] = number_json(k);
  j["lambda"] = number_json(lambda);
  j["r"] = number_json(r);
  j["variable"] = to_string(variable);
  j["laplace"] = number_json(v.real());
  j["resolvent"] = complex_json(target);
  return ResidualReport::make("resolvent_heat_laplace", j, std::abs(v - target) / std::abs(target),
                              1e-5);
}

std::vector<ResidualReport> asymptotics_check(double k, cplx lambda) {
  const SpectralParams sp(k, lambda);
  const auto G = [&](double r) { return kernels::resolvent_radial(sp, kernels::RadialArg(r)); };
  const auto log_term = [](double r) { return 2.0 * log_sinh(0.5 * r); };  // ln sinh^2(r/2)
  std::vector<ResidualReport> out;

  {  // (ii) G / (-(1/4pi) ln sinh^2(r/2)) -> 1, extrapolated linearly in 1 / ln sinh^2(r/2)
    const double rs[3] = {1e-2, 1e-3, 1e-4};
    double sx = 0.0, sxx = 0.0;
    cplx sy = 0.0, sxy = 0.0;
    Json ratios = Json::array();
    for (double r : rs) {
      const double L = log_term(r);
      const cplx ratio = G(r) / (-L / (4.0 * kPi));
      const double x = 1.0 / L;
      sx += x;
      sxx += x * x;
      sy += ratio;
      sxy += x * ratio;
      ratios.push_back(complex_json(ratio));
    }
    const double n = 3.0;
    const cplx slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    const cplx limit = (sy - slope * sx) / n;
    Json p = Json::object();
    p["k"] = number_json(k);
    p["lambda"] = complex_json(lambda);
    p["r"] = {1e-2, 1e-3, 1e-4};
    p["ratios"] = ratios;
    p["extrapolated"] = complex_json(limit);
    out.push_back(ResidualReport::make("asymptotics.small_r_log_law", p, std::abs(limit - 1.0), 0.01));
  }

  {  // (iii) sinh(r/2) dG/dr tends to a constant
    auto c_at = [&](double r) {
      const double d = 1e-3 * r;
      return std::sinh(0.5 * r) * (G(r + d) - G(r - d)) / (2.0 * d);
    };
    const cplx c1 = c_at(1e-3), c2 = c_at(1e-4);
    Json p = Json::object();
    p["k"] = number_json(k);
    p["lambda"] = complex_json(lambda);
    p["constant"] = complex_json(c2);
    p["reference_minus_1_over_4pi"] = number_json(-1.0 / (4.0 * kPi));
    p["printed_minus_1_over_2pi"] = number_json(-1.0 / (2.0 * kPi));
    p["ratio_to_printed"] = complex_json(c2 / (-1.0 / (2.0 * kPi)));
    out.push_back(ResidualReport::make("asymptotics.derivative_constant", p,
                                       std::abs(c2 - c1) / std::abs(c2), 0.01));
  }

  {  // (iv) G sinh^(2s)(r/2) 4 pi Gamma(2s) / (Gamma(s-k) Gamma(s+k)) -> 1 at r = 15
    const double r = 15.0;
    const cplx s = sp.s();
    const cplx log_norm = std::log(4.0 * kPi) + specfun::log_gamma(2.0 * s) -
                          specfun::log_gamma(s - k) - specfun::log_gamma(s + k);
    const cplx ratio = G(r) * std::exp(2.0 * s * log_sinh(0.5 * r) + log_norm);
    const cplx printed = G(r) * std::exp(2.0 * s * log_sinh(r) + log_norm);
    Json p = Json::object();
    p["k"] = number_json(k);
    p["lambda"] = complex_json(lambda);
    p["r"] = number_json(r);
    p["ratio"] = complex_json(ratio);
    auto accepted = ResidualReport::make("asymptotics.large_r_decay", p, std::abs(ratio - 1.0), 0.01);
    Json q = p;
    q["ratio"] = complex_json(printed);
    q["law"] = "sinh^(-2s)(r)";
    auto rejected =
        ResidualReport::make("asymptotics.large_r_decay_printed", q, std::abs(printed - 1.0), 0.01);
    out.push_back(accepted);
    out.push_back(negative_control("asymptotics.large_r_printed_rejected", accepted, rejected));
  }
  return out;
}

}  // namespace hyperkernel::verify
