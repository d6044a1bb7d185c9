#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "hyperkernel/errors.hpp"
#include "hyperkernel/verify.hpp"

namespace hyperkernel::verify {

namespace {

using kernels::SpectralParams;
using Reports = std::vector<ResidualReport>;

const cplx kI(0.0, 1.0);
// Step off an eigenvalue along lambda for the removable-singularity cells.
constexpr double kPoleOffset = 1e-6;
constexpr double kPairingLimitEps = 1e-4;

quad::QuadratureSpec spec_for(double tol) {
  quad::QuadratureSpec spec;
  spec.tol = tol;
  return spec;
}

bool is_eigenvalue(double k, cplx lambda) {
  return specfun::is_nonpositive_integer(SpectralParams(k, lambda).a());
}

void append(Reports& out, const Reports& more) { out.insert(out.end(), more.begin(), more.end()); }

std::vector<double> geometric_grid(double lo, double hi, int n) {
  std::vector<double> g;
  for (int i = 0; i < n; ++i) g.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
  return g;
}

Reports hypergeometric_suite(double tol) {
  const auto spec = spec_for(tol);
  Reports out;
  out.push_back(euler_integral_check(0.5, 1.0, 2.5, 0.3, spec));
  out.push_back(euler_integral_check({1.0, 1.0}, 0.7, 2.0, -0.5, spec));
  out.push_back(euler_integral_check(0.5, 1.0, 2.5, 0.0, spec));
  out.push_back(exp_formula_check(0.0, {1.0}));
  out.push_back(exp_formula_check(1.0, {0.5}));
  out.push_back(exp_formula_check(0.75, geometric_grid(0.05, 8.0, 12)));
  return out;
}

Reports helmholtz_suite(double) {
  Reports out;
  const auto ys = geometric_grid(1.1, 20.0, 12);
  double min_order = std::numeric_limits<double>::infinity();
  for (double k : {0.0, 0.5, 1.0, 2.3}) {
    for (cplx lambda : {kI, cplx(0.5, 0.5), cplx(0.7, 0.0)}) {
      for (Solution which : {Solution::regular, Solution::outgoing}) {
        out.push_back(helmholtz_solution_residual(SpectralParams(k, lambda), which, ys));
        min_order = std::min(min_order, out.back().params["refinement_order"].get<double>());
      }
    }
  }
  out.push_back(helmholtz_solution_residual(SpectralParams(0.0, 0.5 * kI), Solution::outgoing, ys));
  Json p = Json::object();
  p["min_observed_order"] = number_json(min_order);
  p["required"] = 3.5;
  out.push_back(ResidualReport::make("helmholtz.refinement_order", p,
                                     std::max(0.0, 3.5 - min_order), 0.0));

  kernels::Convention wrong;
  wrong.prefactor = kernels::PrefactorExponent::s_plus_abs_k;
  const auto accepted = helmholtz_solution_residual(SpectralParams(1.0, 0.7), Solution::outgoing, ys);
  const auto rejected =
      helmholtz_solution_residual(SpectralParams(1.0, 0.7, wrong), Solution::outgoing, ys);
  out.push_back(negative_control("helmholtz.wrong_prefactor_rejected", accepted, rejected));
  return out;
}

Reports green_suite(double tol) {
  const auto spec = spec_for(std::min(tol, 1e-10));
  // near an eigenvalue the difference stencil noise is scaled by |G|
  const auto pole_spec = spec_for(std::max(tol, 1e-8));
  Reports out;
  const std::pair<double, cplx> cells[] = {{0.0, kI}, {1.0, {0.5, 0.5}}, {1.5, kI}, {1.5, {0.5, 0.5}}};
  for (const auto& [k, lambda] : cells) {
    for (const auto& bump : standard_bumps()) {
      const bool pole = is_eigenvalue(k, lambda);
      const auto pairing = [&](cplx l) {
        return green_pairing(SpectralParams(k, l), bump, pole ? pole_spec : spec);
      };
      const cplx v = pole ? symmetric_limit(pairing, lambda, kPairingLimitEps) : pairing(lambda);
      Json p = Json::object();
      p["k"] = number_json(k);
      p["lambda"] = complex_json(lambda);
      p["test_function"] = bump.name;
      p["pairing"] = complex_json(v);
      p["minus_phi0"] = number_json(-bump.f(0.0));
      if (pole) p["evaluation"] = "eigenvalue: symmetric limit along lambda";
      out.push_back(ResidualReport::make("green_pairing", p, std::abs(v + bump.f(0.0)), 1e-4));
    }
  }
  return out;
}

Reports integral_suite(double tol) {
  const auto spec = spec_for(std::min(tol, 1e-10));
  Reports out;
  for (double k : {0.0, 0.5, 1.0, 1.5, 2.3}) {
    for (cplx lambda : {cplx(0.3, 0.7), kI, cplx(0.4, 0.8)}) {
      const bool pole = is_eigenvalue(k, lambda);
      const cplx l = pole ? lambda * (1.0 + kPoleOffset) : lambda;
      const SpectralParams sp(k, l);
      for (double r : {0.5, 1.0, 2.0}) {
        const kernels::RadialArg ra(r);
        const cplx closed = kernels::resolvent_radial(sp, ra);
        const cplx via = kernels::resolvent_via_integral(sp, ra, spec);
        Json p = Json::object();
        p["k"] = number_json(k);
        p["lambda"] = complex_json(lambda);
        p["r"] = number_json(r);
        p["closed_form"] = complex_json(closed);
        p["integral"] = complex_json(via);
        p["tail"] = kernels::integral_decay_rate(sp) >= 0.25 ? "quadrature" : "continued series";
        if (pole) p["evaluation"] = "eigenvalue: ratio at lambda (1 + 1e-6)";
        out.push_back(ResidualReport::make("integral_representation", p,
                                           std::abs(via - closed) / std::abs(closed), 1e-6));
      }
    }
  }
  return out;
}

Reports chebyshev_suite(double) {
  std::mt19937_64 rng(20240611);
  std::uniform_real_distribution<double> ur(0.1, 3.0), ud(0.05, 3.0);
  std::vector<std::pair<double, double>> grid;
  for (int i = 0; i < 50; ++i) {
    const double r = ur(rng);
    grid.emplace_back(r, r + ud(rng));
  }
  Reports out;
  for (double k : {0.0, 0.5, 1.0, 1.5, 2.0}) out.push_back(chebyshev_specialization_check(k, grid));
  return out;
}

Reports fractional_suite(double tol) {
  const auto spec = spec_for(std::min(tol, 1e-12));
  Reports out;
  out.push_back(fractional_identity_i_check(1.0, 1.0, 1.0, 1.0, 2.0, 3.0, spec));
  const auto i_ok = fractional_identity_i_check(0.5, 0.5, 1.0, 2.0, 2.0, 5.0, spec);
  const auto i_bad =
      fractional_identity_i_check(0.5, 0.5, 1.0, 2.0, 2.0, 5.0, spec, IdentityForm::printed);
  out.push_back(i_ok);
  out.push_back(negative_control("fractional_identity_i.printed_rejected", i_ok, i_bad));

  out.push_back(weyl_step_check(0.0, 1.0, 2.0, 0.5, 2.0, spec));
  out.push_back(weyl_step_check(0.5, 1.0, 2.0, 0.5, 3.0, spec));
  out.push_back(weyl_step_check(0.5, 1.0, 2.0, 1.0, 3.0, spec));

  const auto ii_ok = fractional_identity_ii_check(0.75, 0.75, 1.5, 0.5, 0.25, 2.0, spec);
  const auto ii_exp = fractional_identity_ii_check(0.75, 0.75, 1.5, 0.5, 0.25, 2.0, spec,
                                                   LeftExponent::minus_b);
  const auto ii_inner = fractional_identity_ii_check(0.75, 0.75, 1.5, 0.5, 0.25, 2.0, spec,
                                                     LeftExponent::minus_a_plus_mu,
                                                     IdentityForm::printed);
  out.push_back(ii_ok);
  out.push_back(negative_control("fractional_identity_ii.exponent_minus_b_rejected", ii_ok, ii_exp));
  out.push_back(negative_control("fractional_identity_ii.printed_inner_rejected", ii_ok, ii_inner));
  return out;
}

Reports laplace_suite(double tol) {
  const auto spec = spec_for(std::min(tol, 1e-10));
  const auto heat_spec = spec_for(std::min(std::max(tol, 1e-9), 1e-8));
  Reports out;
  out.push_back(resolvent_heat_laplace_check(0.0, 1.0, 1.0, heat_spec));
  const auto ok = resolvent_heat_laplace_check(1.0, 0.8, 1.5, heat_spec);
  out.push_back(ok);
  out.push_back(resolvent_heat_laplace_check(0.5, 1.2, 0.7, heat_spec));
  const auto bad = resolvent_heat_laplace_check(1.0, 0.8, 1.5, heat_spec, LaplaceVariable::lambda);
  out.push_back(negative_control("resolvent_heat_laplace.p_equals_lambda_rejected", ok, bad));
  out.push_back(laplace_pair_check(2.0, 1.0, spec));
  out.push_back(laplace_pair_check(1.0, 4.0, spec));
  out.push_back(subordination_scalar_check(1.0, 1.0, spec));
  out.push_back(subordination_scalar_check(2.0, 3.0, spec));
  out.push_back(subordination_scalar_check(0.5, 0.0, spec));
  return out;
}

Reports asymptotics_suite(double) {
  Reports out;
  for (double k : {0.0, 0.5, 1.0, 2.3}) {
    for (cplx lambda : {kI, cplx(0.5, 0.5)}) append(out, asymptotics_check(k, lambda));
  }
  return out;
}

Reports conventions_suite(double tol) {
  const auto verdict = resolve_conventions(spec_for(std::min(tol, 1e-10)));
  Reports out;
  Json p = Json::object();
  Json sel = Json::array();
  for (const auto& n : verdict.selected.names()) sel.push_back(n);
  p["selected"] = sel;
  p["winner_total"] = number_json(verdict.winner_total);
  out.push_back(ResidualReport::make("conventions.winner_sanity", p, verdict.winner_total,
                                     kResolverSanity));
  Json q = p;
  q["runner_up_total"] = number_json(verdict.runner_up_total);
  out.push_back(ResidualReport::make("conventions.separation", q,
                                     verdict.winner_total / verdict.runner_up_total, 1e-3));
  out.push_back(ResidualReport::make("conventions.selected_is_default", p,
                                     verdict.selected == kernels::Convention::resolved() ? 0.0 : 1.0,
                                     0.0));
  for (const auto& flag : verdict.local_flags) {
    double best = std::numeric_limits<double>::infinity(), second = best;
    Json f = Json::object();
    for (const auto& [name, v] : flag.candidates) {
      f[name] = number_json(v);
      if (v < best) {
        second = best;
        best = v;
      } else if (v < second) {
        second = v;
      }
    }
    f["selected"] = flag.selected;
    out.push_back(ResidualReport::make("conventions." + flag.name, f, best / second, 1e-3));
  }
  return out;
}

using SuiteFn = Reports (*)(double);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r = {
      {"hypergeometric", hypergeometric_suite}, {"helmholtz", helmholtz_suite},
      {"green", green_suite},                   {"integral", integral_suite},
      {"chebyshev", chebyshev_suite},           {"fractional", fractional_suite},
      {"laplace", laplace_suite},               {"asymptotics", asymptotics_suite},
      {"conventions", conventions_suite},
  };
  return r;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (const auto& [name, fn] : registry()) n.push_back(name);
    n.push_back("all");
    return n;
  }();
  return names;
}

std::vector<ResidualReport> run_suite(const std::string& name, double tol) {
  if (name == "all") {
    Reports out;
    for (const auto& [n, fn] : registry()) append(out, fn(tol));
    return out;
  }
  for (const auto& [n, fn] : registry()) {
    if (n == name) return fn(tol);
  }
  throw DomainError("unknown suite: " + name);
}

}  // namespace hyperkernel::verify
