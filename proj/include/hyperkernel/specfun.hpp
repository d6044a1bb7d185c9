#pragma once

// Scalar special functions: complex log-Gamma, digamma, Pochhammer symbols,
// the Gauss hypergeometric function 2F1 with complex parameters, and
// Chebyshev polynomials.
//
// Branch convention: every non-integer power w^p is exp(p * Log w) with Log
// the principal logarithm, arg in (-pi, pi].

#include <complex>
#include <optional>

namespace hyperkernel {

using cplx = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846264338327950288;
inline constexpr double kEulerGamma = 0.57721566490153286060651209008240243;

/// Principal-branch power exp(p * Log w). w = 0 returns 0 for Re p > 0.
cplx principal_pow(cplx w, cplx p);

namespace specfun {

/// True when z lies (within 1e-14) on a non-positive integer of the real axis.
bool is_nonpositive_integer(cplx z);

/// Rising factorial (a)_n as an n-term product; log-space for n > 100.
cplx pochhammer(cplx a, unsigned n);

/// log Gamma(z), continuous branch that is real on the positive axis.
/// Throws PoleError at non-positive integers.
cplx log_gamma(cplx z);

/// Gamma(z) = exp(log_gamma(z)). Throws PoleError at poles.
cplx gamma(cplx z);

/// 1 / Gamma(z); exactly zero at the poles of Gamma.
cplx rgamma(cplx z);

/// Digamma psi(z). Throws PoleError at non-positive integers.
cplx digamma(cplx z);

/// Side from which an argument on the cut [1, inf) is approached.
enum class CutSide { none, above, below };

/// Parameters and argument of 2F1(a, b; c; z). When the caller knows 1 - z
/// exactly (e.g. tanh^2 for z = sech^2) it may supply it so that evaluations
/// near z = 1 keep full relative accuracy in 1 - z.
struct HyperParams {
  cplx a;
  cplx b;
  cplx c;
  cplx z;
  std::optional<cplx> one_minus_z = std::nullopt;
};

inline constexpr double kSeriesRadius = 0.5;
inline constexpr double kLogCaseThreshold = 1e-9;
inline constexpr int kMaxSeriesTerms = 10000;

/// Gauss hypergeometric function. Direct series for |z| <= 0.5, otherwise a
/// linear transformation (Pfaff, 1 - z, 1 / (1 - z)) with the logarithmic
/// connection formulas when c - a - b is an integer.
cplx gauss_2f1(const HyperParams& p, double tol = 1e-15,
               CutSide side = CutSide::none);

/// Direct power series, valid for |z| < 1. Exposed for cross-checks.
cplx gauss_2f1_series(cplx a, cplx b, cplx c, cplx z, double tol = 1e-15);

/// F(a, b; a + b - m; z) for integer m >= 0 and real z in (0, 1) by the
/// logarithmic expansion in powers of (1 - z).
cplx gauss_2f1_log_case(cplx a, cplx b, int m, double z, double tol = 1e-15);

/// Same expansion with w = 1 - z supplied directly (complex, |w| < 1).
/// m may be negative; it is mapped to m >= 0 through Euler's transformation.
cplx gauss_2f1_log_case_w(cplx a, cplx b, int m, cplx w, double tol = 1e-15);

/// Chebyshev polynomial of the first kind.
double chebyshev_T(unsigned n, double x);

/// F(a, -a; 1/2; 1 - x^2) = cosh(2 a arccosh x) for x >= 1.
double cos_form_F(double a, double x);

/// Same, with x^2 - 1 passed exactly (x^2 - 1 >= 0) for accuracy near x = 1.
double cos_form_F_from_excess(double a, double x_sq_minus_one);

}  // namespace specfun
}  // namespace hyperkernel
