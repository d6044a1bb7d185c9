#pragma once

// Resolvent, wave and heat kernels of the magnetic Schrodinger operator
// D_k = L_k + k^2 + 1/4 on the hyperbolic disc, and the wave and heat
// propagators applied to compactly supported data.

#include <array>
#include <string>

#include "hyperkernel/geom.hpp"
#include "hyperkernel/quad.hpp"
#include "hyperkernel/specfun.hpp"

namespace hyperkernel::kernels {

/// Relation between the spectral parameter lambda and s.
enum class SConvention {
  half_minus_i_lambda,          // s = 1/2 - i lambda
  one_minus_i_lambda_over_two,  // s = (1 - i lambda) / 2
};

/// Exponent e of the radial prefactor y^(-e).
enum class PrefactorExponent {
  s,           // y^(-s)
  s_plus_abs_k  // y^(-s - |k|)
};

/// Variable Y whose inverse is the hypergeometric argument.
enum class ArgumentVariant {
  cosh_sq_half_r,  // Y = cosh^2(r / 2)
  cosh_sq_r        // Y = cosh^2(r)
};

/// Oscillating factor of the integral representation.
enum class ExponentSign {
  plus,  // exp(+i lambda rho)
  minus  // exp(-i lambda rho)
};

/// Prefactor multiplying the integral of W_k exp(+-i lambda rho).
enum class IntegralNormalization {
  half,                 // 1/2
  inverse_two_i_lambda  // 1 / (2 i lambda)
};

std::string to_string(SConvention v);
std::string to_string(PrefactorExponent v);
std::string to_string(ArgumentVariant v);
std::string to_string(ExponentSign v);
std::string to_string(IntegralNormalization v);

struct Convention {
  SConvention s_rule = SConvention::half_minus_i_lambda;
  PrefactorExponent prefactor = PrefactorExponent::s;
  ArgumentVariant argument = ArgumentVariant::cosh_sq_half_r;
  ExponentSign exponent = ExponentSign::plus;

  /// The tuple selected by the convention resolver.
  static constexpr Convention resolved() { return {}; }

  std::array<std::string, 4> names() const;
  friend bool operator==(const Convention&, const Convention&) = default;
};

/// Normalization of the integral representation selected by the resolver.
inline constexpr IntegralNormalization kResolvedNormalization = IntegralNormalization::half;

/// Magnetic strength k, spectral parameter lambda and the derived Gauss
/// parameters (a, b, c) = (s - |k|, s + |k|, 2 s).
class SpectralParams {
 public:
  SpectralParams(double k, cplx lambda, Convention convention = Convention::resolved());

  double k() const { return k_; }
  double abs_k() const { return std::abs(k_); }
  cplx lambda() const { return lambda_; }
  const Convention& convention() const { return convention_; }
  cplx s() const { return s_; }
  cplx a() const { return s_ - abs_k(); }
  cplx b() const { return s_ + abs_k(); }
  cplx c() const { return 2.0 * s_; }

 private:
  double k_;
  cplx lambda_;
  Convention convention_;
  cplx s_;
};

/// Geodesic distance r >= 0 and y = cosh^2(r / 2).
class RadialArg {
 public:
  explicit RadialArg(double r);

  double r() const { return r_; }
  double y() const { return y_; }
  /// log y, finite for every finite r.
  double log_y() const;
  /// 1 / y = sech^2(r / 2).
  double inv_y() const;
  /// 1 - 1 / y = tanh^2(r / 2), exact.
  double tanh_sq_half() const;

 private:
  double r_;
  double y_;
};

struct KernelValue {
  cplx phase{1.0, 0.0};
  cplx radial{0.0, 0.0};
  cplx value{0.0, 0.0};
};

inline constexpr double kDefaultTol = 1e-14;

/// Gamma(s - k) Gamma(s + k) / (4 pi Gamma(2 s)) Y^(-e) F(s - |k|, s + |k|; 2 s; 1 / Y)
/// with (s, e, Y) chosen by the convention in sp. Throws DomainError at r = 0
/// and PoleError at an eigenvalue (s - |k| a non-positive integer).
cplx resolvent_radial(const SpectralParams& sp, const RadialArg& ra, double tol = kDefaultTol);

/// resolvent_radial at k = 0.
cplx free_resolvent(cplx lambda, const RadialArg& ra, double tol = kDefaultTol,
                    Convention convention = Convention::resolved());

/// Two-point resolvent kernel: phase_factor(k, w, w2) times the radial part at
/// r = distance(w, w2). Throws DomainError for coincident points.
KernelValue resolvent_kernel(const SpectralParams& sp, const geom::DiscPoint& w,
                             const geom::DiscPoint& w2, double tol = kDefaultTol);

/// W_k(r, rho) = (1/2pi) (cosh^2(rho/2) - cosh^2(r/2))^(-1/2) cosh(2|k| arccosh x),
/// x = cosh(rho/2) / cosh(r/2). Throws DomainError unless rho > r >= 0.
double wave_kernel(double k, const RadialArg& ra, double rho);

/// log W_k(r, r + offset) with the offset rho - r > 0 passed exactly.
double log_wave_kernel_offset(double k, double r, double offset);

/// Evaluation of the part of the integral beyond the near field.
enum class TailMethod {
  automatic,   // quadrature when the integrand decays fast enough, else series
  quadrature,  // panel quadrature (requires decay)
  series       // termwise integration of the exact expansion in exp(-rho)
};

struct IntegralOptions {
  IntegralNormalization normalization = kResolvedNormalization;
  TailMethod tail = TailMethod::automatic;
  double near_field_length = quad::kDefaultNearField;
};

/// norm * int_r^inf W_k(r, rho) exp(+-i lambda rho) d rho with the sign from
/// sp.convention().exponent. Where the integral does not converge absolutely
/// the tail is its analytic continuation in lambda (series method). Throws
/// DomainError if Im lambda < 0.1, PoleError when a continued tail term is
/// singular.
cplx resolvent_via_integral(const SpectralParams& sp, const RadialArg& ra,
                            const quad::QuadratureSpec& spec,
                            const IntegralOptions& options = {});

/// Decay rate of the integrand W_k exp(+-i lambda rho) as rho -> inf.
double integral_decay_rate(const SpectralParams& sp);

/// Radial heat kernel: int_r^inf (4 pi t)^(-3/2) exp(-b^2 / 4t) 2 pi W_k(r, b) b db.
/// r = 0 is allowed. Throws DomainError for t <= 0.
double heat_radial(double k, double t, double r, const quad::QuadratureSpec& spec);

KernelValue heat_kernel(double k, double t, const geom::DiscPoint& w, const geom::DiscPoint& w2,
                        const quad::QuadratureSpec& spec);

/// Initial data with support in the closed geodesic ball B(center, radius).
struct SupportedFunction {
  quad::DiscFunction f;
  geom::DiscPoint center;
  double radius = 0.0;
};

/// Defaults for the propagators: 1e-8 for one-dimensional, 1e-6 for disc integrals.
quad::QuadratureSpec default_disc_spec();
quad::QuadratureSpec default_line_spec();

/// u(t, w) = int W(t; w, w') u1(w') dmu(w') with the wave propagator kernel
/// phase_factor(k, w, w') W_k(d(w, w'), t) / 2, dmu = 4 (1 - |w|^2)^(-2) dA.
cplx apply_wave_propagator(double k, double t, const SupportedFunction& u1,
                           const geom::DiscPoint& w, const quad::QuadratureSpec& spec);

/// v(t, w) = int H_k(t; w, w') v0(w') dmu(w').
cplx apply_heat_propagator(double k, double t, const SupportedFunction& v0,
                           const geom::DiscPoint& w, const quad::QuadratureSpec& spec,
                           const quad::QuadratureSpec& line_spec = default_line_spec());

}  // namespace hyperkernel::kernels
