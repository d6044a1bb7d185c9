#include "hyperkernel/kernels.hpp"

#include <cmath>

#include "hyperkernel/errors.hpp"

namespace hyperkernel::kernels {

namespace {

constexpr double kLn2 = 0.69314718055994530942;

double log_cosh(double x) {
  x = std::abs(x);
  return x + std::log1p(std::exp(-2.0 * x)) - kLn2;
}

// log Y, 1 / Y and 1 - 1 / Y for Y = cosh^2(x).
struct CoshSquare {
  double log_value;
  double inverse;
  double complement;
};

CoshSquare cosh_square(double x) {
  const double e = std::exp(-2.0 * std::abs(x));
  const double th = std::tanh(x);
  return {2.0 * log_cosh(x), 4.0 * e / ((1.0 + e) * (1.0 + e)), th * th};
}

}  // namespace

std::string to_string(SConvention v) {
  return v == SConvention::half_minus_i_lambda ? "s=1/2-i*lambda" : "s=(1-i*lambda)/2";
}

std::string to_string(PrefactorExponent v) {
  return v == PrefactorExponent::s ? "y^(-s)" : "y^(-s-|k|)";
}

std::string to_string(ArgumentVariant v) {
  return v == ArgumentVariant::cosh_sq_half_r ? "1/cosh^2(r/2)" : "1/cosh^2(r)";
}

std::string to_string(ExponentSign v) {
  return v == ExponentSign::plus ? "exp(+i*lambda*rho)" : "exp(-i*lambda*rho)";
}

std::string to_string(IntegralNormalization v) {
  return v == IntegralNormalization::half ? "1/2" : "1/(2i*lambda)";
}

std::array<std::string, 4> Convention::names() const {
  return {to_string(s_rule), to_string(prefactor), to_string(argument), to_string(exponent)};
}

SpectralParams::SpectralParams(double k, cplx lambda, Convention convention)
    : k_(k), lambda_(lambda), convention_(convention) {
  if (!std::isfinite(k) || !std::isfinite(lambda.real()) || !std::isfinite(lambda.imag())) {
    throw DomainError("SpectralParams: k and lambda must be finite");
  }
  const cplx i_lambda = cplx(0.0, 1.0) * lambda;
  s_ = convention.s_rule == SConvention::half_minus_i_lambda ? 0.5 - i_lambda
                                                             : 0.5 * (1.0 - i_lambda);
}

RadialArg::RadialArg(double r) : r_(r) {
  if (!(r >= 0.0) || !std::isfinite(r)) throw DomainError("RadialArg: r must be finite and >= 0");
  const double c = std::cosh(0.5 * r);
  y_ = c * c;
}

double RadialArg::log_y() const { return 2.0 * log_cosh(0.5 * r_); }

double RadialArg::inv_y() const { return cosh_square(0.5 * r_).inverse; }

double RadialArg::tanh_sq_half() const {
  const double th = std::tanh(0.5 * r_);
  return th * th;
}

cplx resolvent_radial(const SpectralParams& sp, const RadialArg& ra, double tol) {
  if (ra.r() == 0.0) throw DomainError("resolvent_radial: r = 0 is the diagonal singularity");
  const cplx a = sp.a(), b = sp.b(), c = sp.c();
  if (specfun::is_nonpositive_integer(a)) {
    throw PoleError("resolvent_radial: lambda is an eigenvalue (s - |k| is a pole of Gamma)");
  }
  const Convention& conv = sp.convention();
  const CoshSquare Y = conv.argument == ArgumentVariant::cosh_sq_half_r ? cosh_square(0.5 * ra.r())
                                                                         : cosh_square(ra.r());
  const cplx e = conv.prefactor == PrefactorExponent::s ? sp.s() : sp.s() + sp.abs_k();
  const cplx F = specfun::gauss_2f1({a, b, c, Y.inverse, cplx(Y.complement, 0.0)}, tol);
  const cplx log_pref = specfun::log_gamma(a) + specfun::log_gamma(b) - specfun::log_gamma(c);
  return std::exp(log_pref - e * Y.log_value) * F / (4.0 * kPi);
}

cplx free_resolvent(cplx lambda, const RadialArg& ra, double tol, Convention convention) {
  return resolvent_radial(SpectralParams(0.0, lambda, convention), ra, tol);
}

KernelValue resolvent_kernel(const SpectralParams& sp, const geom::DiscPoint& w,
                             const geom::DiscPoint& w2, double tol) {
  const double r = geom::distance(w, w2);
  if (r == 0.0) throw DomainError("resolvent_kernel: coincident points");
  KernelValue kv;
  kv.phase = geom::phase_factor(sp.k(), w, w2);
  kv.radial = resolvent_radial(sp, RadialArg(r), tol);
  kv.value = kv.phase * kv.radial;
  return kv;
}

}  // namespace hyperkernel::kernels
