#include <cmath>
#include <limits>

#include "hyperkernel/errors.hpp"
#include "hyperkernel/verify.hpp"

namespace hyperkernel::verify {

namespace {

using specfun::log_gamma;

cplx hyp(cplx a, cplx b, cplx c, double z, double one_minus_z) {
  return specfun::gauss_2f1({a, b, c, z, cplx(one_minus_z, 0.0)});
}

Json cjson(std::initializer_list<std::pair<const char*, cplx>> items) {
  Json j = Json::object();
  for (const auto& [name, v] : items) {
    j[name] = v.imag() == 0.0 ? number_json(v.real()) : complex_json(v);
  }
  return j;
}

}  // namespace

std::string to_string(IdentityForm v) { return v == IdentityForm::corrected ? "corrected" : "printed"; }

std::string to_string(LeftExponent v) {
  return v == LeftExponent::minus_a_plus_mu ? "x^(-a+mu)" : "x^(-b)";
}

ResidualReport euler_integral_check(cplx a, cplx b, cplx c, double z,
                                    const quad::QuadratureSpec& spec) {
  if (!(c.real() > b.real()) || !(b.real() > 0.0)) {
    throw DomainError("euler_integral_check: requires Re c > Re b > 0");
  }
  if (!(z < 1.0)) throw DomainError("euler_integral_check: z must be < 1");
  const auto integrand = [&](double t, double from0, double to1) -> cplx {
    return std::exp((b - 1.0) * std::log(from0) + (c - b - 1.0) * std::log(to1) -
                    a * std::log1p(-z * t));
  };
  const cplx I = quad::tanh_sinh_endpoint(integrand, 0.0, 1.0, spec).value;
  const cplx lhs = I * std::exp(log_gamma(c) - log_gamma(b) - log_gamma(c - b));
  const cplx F = specfun::gauss_2f1({a, b, c, z});
  Json p = cjson({{"a", a}, {"b", b}, {"c", c}, {"z", z}});
  return ResidualReport::make("euler_integral", p, std::abs(lhs - F) / std::abs(F), 1e-9);
}

ResidualReport fractional_identity_i_check(cplx mu, cplx nu, cplx a, cplx b, double x, double z,
                                           const quad::QuadratureSpec& spec, IdentityForm form) {
  if (!(mu.real() > 0.0) || !(nu.real() > 0.0)) {
    throw DomainError("fractional_identity_i_check: requires Re mu > 0 and Re nu > 0");
  }
  if (!(z > x) || !(x > 0.0)) throw DomainError("fractional_identity_i_check: requires z > x > 0");
  const auto integrand = [&](double y, double from_x, double to_z) -> cplx {
    return std::exp((mu - 1.0) * std::log(from_x) + (nu - 1.0) * std::log(to_z) +
                    (a - b - mu) * std::log(y));
  };
  const cplx lhs = quad::tanh_sinh_endpoint(integrand, x, z, spec).value;
  const cplx beta = std::exp(log_gamma(mu) + log_gamma(nu) - log_gamma(mu + nu));
  const double arg = (x - z) / x;
  cplx rhs;
  if (form == IdentityForm::corrected) {
    rhs = beta * std::exp((mu + nu - 1.0) * std::log(z - x) + (a - b - mu) * std::log(x)) *
          hyp(b - a + mu, mu, mu + nu, arg, z / x);
  } else {
    rhs = beta * std::exp((mu + nu - 1.0) * std::log(z - x)) *
          hyp(b - a - mu, mu, mu + nu, arg, z / x);
  }
  Json p = cjson({{"mu", mu}, {"nu", nu}, {"a", a}, {"b", b}, {"x", x}, {"z", z}});
  p["form"] = to_string(form);
  p["integral"] = complex_json(lhs);
  return ResidualReport::make("fractional_identity_i." + to_string(form), p,
                              std::abs(lhs - rhs) / std::abs(lhs), 1e-8);
}

ResidualReport weyl_step_check(cplx a, cplx b, cplx c, cplx mu, double x,
                               const quad::QuadratureSpec& spec) {
  if (!(mu.real() > 0.0) || !(b.real() > 0.0) || !(x > 1.0)) {
    throw DomainError("weyl_step_check: requires Re mu > 0, Re b > 0, x > 1");
  }
  const double lx = std::log(x);
  const cplx lhs = std::exp(log_gamma(b) - b * lx) * hyp(a, b, c, 1.0 / x, (x - 1.0) / x);
  // y = x / tau maps (x, inf) onto (0, 1):
  // int_x^inf y^(-b-mu) (y-x)^(mu-1) F(1/y) dy = x^(-b) int_0^1 tau^(b-1) (1-tau)^(mu-1) F(tau/x) dtau
  const auto integrand = [&](double tau, double from0, double to1) -> cplx {
    return std::exp((b - 1.0) * std::log(from0) + (mu - 1.0) * std::log(to1)) *
           hyp(a, b + mu, c, tau / x, (x - tau) / x);
  };
  const cplx I = quad::tanh_sinh_endpoint(integrand, 0.0, 1.0, spec).value;
  const cplx rhs = std::exp(log_gamma(b + mu) - log_gamma(mu) - b * lx) * I;
  Json p = cjson({{"a", a}, {"b", b}, {"c", c}, {"mu", mu}, {"x", x}});
  return ResidualReport::make("weyl_step", p, std::abs(lhs - rhs) / std::abs(lhs), 1e-8);
}

ResidualReport fractional_identity_ii_check(cplx a, cplx b, cplx c, cplx mu, cplx nu, double x,
                                            const quad::QuadratureSpec& spec,
                                            LeftExponent exponent, IdentityForm inner) {
  if (!(x > 1.0) || !(mu.real() > 0.0) || !(nu.real() > 0.0) || !(a.real() > 0.0) ||
      !(b.real() > 0.0)) {
    throw DomainError("fractional_identity_ii_check: requires x > 1 and Re a, b, mu, nu > 0");
  }
  const double lx = std::log(x);
  const cplx e = exponent == LeftExponent::minus_a_plus_mu ? -a + mu : -b;
  const cplx lhs =
      std::exp(log_gamma(a) + log_gamma(b) + e * lx) * hyp(a, b, c, 1.0 / x, (x - 1.0) / x);
  const cplx p1 = inner == IdentityForm::corrected ? b - a + mu : b - a - mu;
  // z = x / tau; I(x, z) = (z-x)^(mu+nu-1) F(p1, mu; mu+nu; 1 - z/x) with 1 - z/x = -(1-tau)/tau.
  const auto integrand = [&](double tau, double from0, double to1) -> cplx {
    if (from0 < 1e-250) return {0.0, 0.0};
    const cplx inner_F = hyp(p1, mu, mu + nu, -to1 / from0, 1.0 / from0);
    const cplx outer_F = hyp(a + nu, b + mu, c, tau / x, (x - tau) / x);
    return std::exp((mu - a) * lx + (mu + nu - 1.0) * std::log(to1) +
                    (a - mu - 1.0) * std::log(from0)) *
           inner_F * outer_F;
  };
  Json p = cjson({{"a", a}, {"b", b}, {"c", c}, {"mu", mu}, {"nu", nu}, {"x", x}});
  p["left_exponent"] = to_string(exponent);
  p["inner"] = to_string(inner);
  const std::string name =
      "fractional_identity_ii." + to_string(exponent) + "." + to_string(inner);
  cplx I;
  try {
    I = quad::tanh_sinh_endpoint(integrand, 0.0, 1.0, spec).value;
  } catch (const ConvergenceError&) {
    // integrand not integrable at tau = 0
    p["integral"] = "divergent";
    return ResidualReport::make(name, p, std::numeric_limits<double>::infinity(), 1e-7);
  }
  const cplx rhs = std::exp(log_gamma(a + nu) + log_gamma(b + mu) - log_gamma(mu + nu)) * I;
  return ResidualReport::make(name, p, std::abs(lhs - rhs) / std::abs(lhs), 1e-7);
}

ResidualReport negative_control(const std::string& identity, const ResidualReport& accepted,
                                const ResidualReport& rejected) {
  Json p = Json::object();
  p["accepted"] = accepted.identity;
  p["accepted_residual"] = number_json(accepted.residual);
  p["rejected"] = rejected.identity;
  p["rejected_residual"] = number_json(rejected.residual);
  const double ratio = rejected.residual > 0.0 ? accepted.residual / rejected.residual
                                                : std::numeric_limits<double>::infinity();
  return ResidualReport::make(identity, p, ratio, 1e-3);
}

}  // namespace hyperkernel::verify
