#pragma once

// Numerical oracles for the identities behind the kernels: ODE residuals,
// the Dirac pairing, fractional-integral identities, special-function
// identities, Laplace relations, asymptotics, and the convention resolver.

#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperkernel/kernels.hpp"
#include "hyperkernel/quad.hpp"

namespace hyperkernel::verify {

using Json = nlohmann::ordered_json;

/// Complex number as {"re": x, "im": y}, components rounded to 15 digits.
Json complex_json(cplx z);
/// Real number rounded to 15 significant digits; non-finite values map to strings.
Json number_json(double x);

struct ResidualReport {
  std::string identity;
  Json params = Json::object();
  double residual = 0.0;
  double tolerance = 0.0;
  bool pass = false;

  /// Sets pass = (residual <= tolerance); NaN never passes.
  static ResidualReport make(std::string identity, Json params, double residual,
                             double tolerance);
  Json to_json() const;
};

std::string format_report_line(const ResidualReport& r);

// ---------------------------------------------------------------- radial ODE

using RealFunction = std::function<cplx(double)>;

/// l_y^k phi = y (y - 1) phi'' + (2y - 1) phi' + (k^2 / y + 1/4) phi with
/// fourth-order central differences of step h. Throws DomainError when the
/// stencil leaves y > 1.
cplx radial_operator_apply(double k, const RealFunction& phi, double y, double h);

enum class Solution { regular, outgoing };

/// Third parameter of the regular solution y^|k| F(s+|k|, 1-s+|k|; c3; 1-y).
enum class RegularThirdParam { one, two_abs_k_plus_one };

std::string to_string(Solution v);
std::string to_string(RegularThirdParam v);

/// The two solutions of (l_y^k + lambda^2) phi = 0 as functions of y, built
/// from the convention carried by sp (outgoing without the Gamma prefactor).
cplx helmholtz_solution(const kernels::SpectralParams& sp, Solution which, double y,
                        RegularThirdParam c3 = RegularThirdParam::one);

inline constexpr double kHelmholtzTol = 1e-6;
inline constexpr double kHelmholtzStep = 1e-3;

/// max over the grid of |(l_y^k + lambda^2) phi| / (1 + |phi|) with h = 1e-3 y.
/// The params record also carries the observed refinement order between
/// h0 = min(0.02 y, (y - 1) / 4) and h0 / 2.
ResidualReport helmholtz_solution_residual(const kernels::SpectralParams& sp, Solution which,
                                           const std::vector<double>& ygrid,
                                           RegularThirdParam c3 = RegularThirdParam::one);

// ------------------------------------------------------------- Dirac pairing

/// Smooth even radial test function with support in [0, support].
struct RadialTestFunction {
  std::string name;
  std::function<double(double)> f;
  double support = 0.0;
};

/// Gaussian exp(-r^2) (cut at r = 7), compact bump exp(-1/(1-(r/2)^2)) and
/// the modulated bump cos(2r) exp(-1/(1-(r/1.5)^2)).
std::vector<RadialTestFunction> standard_bumps();

/// 2 pi int_0^inf G(lambda, r) [(D_k + lambda^2) phi](r) sinh r dr with the
/// radial operator d^2/dr^2 + coth r d/dr + k^2/cosh^2(r/2) + 1/4 applied by
/// fourth-order differences of step h. Expected value -phi(0).
cplx green_pairing(const kernels::SpectralParams& sp, const RadialTestFunction& phi,
                   const quad::QuadratureSpec& spec, double h = 1e-3);

/// Value at lambda of a function with a removable singularity there:
/// the mean of f(lambda (1 + eps)) and f(lambda (1 - eps)).
cplx symmetric_limit(const std::function<cplx(cplx)>& f, cplx lambda, double eps);

// -------------------------------------------------- hypergeometric integrals

/// Euler integral representation of 2F1; pass at relative 1e-9.
ResidualReport euler_integral_check(cplx a, cplx b, cplx c, double z,
                                    const quad::QuadratureSpec& spec);

enum class IdentityForm { corrected, printed };
std::string to_string(IdentityForm v);

/// int_x^z (y-x)^(mu-1) (z-y)^(nu-1) y^(a-b-mu) dy against the closed form;
/// corrected: G(mu)G(nu)/G(mu+nu) (z-x)^(mu+nu-1) x^(a-b-mu) F(b-a+mu, mu; mu+nu; (x-z)/x),
/// printed: the same without x^(a-b-mu) and with first parameter b-a-mu.
/// Pass at 1e-8.
ResidualReport fractional_identity_i_check(cplx mu, cplx nu, cplx a, cplx b, double x, double z,
                                           const quad::QuadratureSpec& spec,
                                           IdentityForm form = IdentityForm::corrected);

/// Gamma(b) x^(-b) F(a,b;c;1/x) against
/// Gamma(b+mu)/Gamma(mu) int_x^inf y^(-b-mu) (y-x)^(mu-1) F(a, b+mu; c; 1/y) dy.
/// Pass at 1e-8.
ResidualReport weyl_step_check(cplx a, cplx b, cplx c, cplx mu, double x,
                               const quad::QuadratureSpec& spec);

/// Power of x on the left of the composed identity.
enum class LeftExponent { minus_a_plus_mu, minus_b };
std::string to_string(LeftExponent v);

/// Gamma(a) Gamma(b) x^e F(a,b;c;1/x) against
/// Gamma(a+nu) Gamma(b+mu)/Gamma(mu+nu) int_x^inf I(x,z) z^(-a-nu) F(a+nu, b+mu; c; 1/z) dz,
/// I(x,z) = (z-x)^(mu+nu-1) F(b-a+mu, mu; mu+nu; 1 - z/x) (corrected) or with
/// b-a-mu (printed). Pass at 1e-7.
ResidualReport fractional_identity_ii_check(cplx a, cplx b, cplx c, cplx mu, cplx nu, double x,
                                            const quad::QuadratureSpec& spec,
                                            LeftExponent exponent = LeftExponent::minus_a_plus_mu,
                                            IdentityForm inner = IdentityForm::corrected);

/// Report that a printed form is rejected: residual = corrected / printed,
/// pass when the printed residual is at least 10^3 times the corrected one.
ResidualReport negative_control(const std::string& identity, const ResidualReport& accepted,
                                const ResidualReport& rejected);

// ----------------------------------------------------- special-function checks

/// F(a+1, a+1/2; 2a+1; sech^2 z) = exp(-2az) coth z (2 cosh z)^(2a); pass 1e-9.
ResidualReport exp_formula_check(double a, const std::vector<double>& zgrid);

/// wave_kernel against (1/2pi) Delta^(-1/2) T_{2|k|}(cosh(rho/2)/cosh(r/2));
/// requires 2|k| integral; pass 1e-12.
ResidualReport chebyshev_specialization_check(double k,
                                              const std::vector<std::pair<double, double>>& grid);

/// int_0^inf exp(-a x) sin(x y) / y dx = 1 / (a^2 + y^2); pass 1e-9.
ResidualReport subordination_scalar_check(double a, double y, const quad::QuadratureSpec& spec);

/// Laplace transform of a (4 pi x^3)^(-1/2) exp(-a^2 / 4x) equals exp(-a sqrt p); pass 1e-8.
ResidualReport laplace_pair_check(double a, double p, const quad::QuadratureSpec& spec);

enum class LaplaceVariable { lambda_squared, lambda };
std::string to_string(LaplaceVariable v);

/// int_0^inf exp(-p t) heat_radial(k, t, r) dt with p = lambda^2 or lambda
/// against resolvent_radial(k, i lambda, r); pass 1e-5.
ResidualReport resolvent_heat_laplace_check(double k, double lambda, double r,
                                            const quad::QuadratureSpec& spec,
                                            LaplaceVariable variable = LaplaceVariable::lambda_squared);

/// (ii) small-r log law, (iii) sinh(r/2) dG/dr constant (reported),
/// (iv) large-r decay law at r = 15, and the printed large-r law sinh^(-2s)(r)
/// as a negative control.
std::vector<ResidualReport> asymptotics_check(double k, cplx lambda);

// ------------------------------------------------------ convention resolver

struct CandidateScore {
  kernels::Convention convention;
  double helmholtz = 0.0;
  double integral = 0.0;
  double log_law = 0.0;
  double total = 0.0;
  bool selected = false;
};

struct LocalFlag {
  std::string name;
  std::vector<std::pair<std::string, double>> candidates;  // candidate, residual
  std::string selected;
};

struct ConventionVerdict {
  std::vector<CandidateScore> table;
  kernels::Convention selected;
  double winner_total = 0.0;
  double runner_up_total = 0.0;
  bool sane = false;  // winner below the 1e-3 sanity threshold
  std::vector<LocalFlag> local_flags;

  Json to_json() const;
};

/// Fixed probe set: k in {0, 0.5, 1, 2.3}, lambda in {i, 0.5+0.5i}, r in {0.5, 1, 2}.
struct ProbeSet {
  std::vector<double> k{0.0, 0.5, 1.0, 2.3};
  std::vector<cplx> lambda{{0.0, 1.0}, {0.5, 0.5}};
  std::vector<double> r{0.5, 1.0, 2.0};
};

inline constexpr double kResolverSanity = 1e-3;

/// Scores the 16 tuples and the local flags (regular third parameter, phase
/// orientation, integral normalization, Laplace variable).
ConventionVerdict resolve_conventions(const quad::QuadratureSpec& spec,
                                      const ProbeSet& probes = {});

/// |(D_k + lambda^2) G(., w2)| / |G| at w for the phase orientation given,
/// with D_k the two-dimensional magnetic operator applied by finite differences.
double phase_orientation_residual(double k, cplx lambda, const geom::DiscPoint& w,
                                  const geom::DiscPoint& w2, geom::PhaseOrientation orientation);

// ------------------------------------------------------------------- suites

/// Names accepted by run_suite, "all" last.
const std::vector<std::string>& suite_names();

/// Runs one named suite with quadrature tolerance tol. Throws DomainError
/// for an unknown name.
std::vector<ResidualReport> run_suite(const std::string& name, double tol);

}  // namespace hyperkernel::verify
