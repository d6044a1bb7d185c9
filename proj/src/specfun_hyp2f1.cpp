#include <cmath>
#include <initializer_list>
#include <limits>
#include <string>

#include "hyperkernel/errors.hpp"
#include "hyperkernel/specfun.hpp"

namespace hyperkernel::specfun {
namespace {

// Series sums run in extended precision; terms may exceed the final sum by
// several orders of magnitude for complex parameters.
using lcplx = std::complex<long double>;

constexpr int kConsecutiveSmallTerms = 3;

lcplx widen(cplx z) { return {z.real(), z.imag()}; }
cplx narrow(lcplx z) {
  return {static_cast<double>(z.real()), static_cast<double>(z.imag())};
}

void check_tol(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw DomainError("gauss_2f1: tol must be positive");
}

// Gamma(num...) / Gamma(den...). A pole in the denominator gives 0, a pole in
// the numerator throws.
cplx gamma_ratio(std::initializer_list<cplx> num, std::initializer_list<cplx> den) {
  for (cplx d : den) {
    if (is_nonpositive_integer(d)) return {0.0, 0.0};
  }
  cplx lg(0.0, 0.0);
  for (cplx n : num) lg += log_gamma(n);
  for (cplx d : den) lg -= log_gamma(d);
  return std::exp(lg);
}

// Number of terms of a terminating series, or -1 when a and b are both
// non-terminating.
int terminating_degree(cplx a, cplx b) {
  int deg = -1;
  for (cplx p : {a, b}) {
    if (is_nonpositive_integer(p)) {
      const int d = static_cast<int>(-std::round(p.real()));
      if (deg < 0 || d < deg) deg = d;
    }
  }
  return deg;
}

cplx polynomial(cplx a, cplx b, cplx c, cplx z, int degree) {
  if (is_nonpositive_integer(c) && -std::round(c.real()) < degree) {
    throw PoleError("gauss_2f1: c is a non-positive integer blocking the terminating series");
  }
  const lcplx A = widen(a), B = widen(b), C = widen(c), Z = widen(z);
  lcplx term(1.0L, 0.0L), sum(1.0L, 0.0L);
  for (int n = 0; n < degree; ++n) {
    const long double nn = n;
    term *= (A + nn) * (B + nn) / ((C + nn) * (nn + 1.0L)) * Z;
    sum += term;
  }
  return narrow(sum);
}

bool converged(long double term_mag, long double sum_mag, double tol, int& small_count) {
  if (term_mag <= tol * sum_mag) {
    ++small_count;
  } else {
    small_count = 0;
  }
  return small_count >= kConsecutiveSmallTerms;
}

lcplx series_impl(cplx a, cplx b, cplx c, cplx z, double tol) {
  const lcplx A = widen(a), B = widen(b), C = widen(c), Z = widen(z);
  lcplx term(1.0L, 0.0L), sum(1.0L, 0.0L);
  int small = 0;
  for (int n = 0; n < kMaxSeriesTerms; ++n) {
    const long double nn = n;
    const lcplx num = (A + nn) * (B + nn);
    if (num == lcplx(0.0L, 0.0L)) return sum;
    if (is_nonpositive_integer(c + static_cast<double>(n))) {
      throw PoleError("gauss_2f1: c is a non-positive integer");
    }
    term *= num / ((C + nn) * (nn + 1.0L)) * Z;
    sum += term;
    if (converged(std::abs(term), std::abs(sum), tol, small)) return sum;
  }
  throw ConvergenceError("gauss_2f1: series did not converge within the iteration cap");
}

// F(a, b; a + b; 1 - w), logarithmic expansion.
cplx log_case_m0(cplx a, cplx b, cplx w, double tol) {
  const cplx pref = gamma_ratio({a + b}, {a, b});
  const lcplx A = widen(a), B = widen(b), W = widen(w);
  const lcplx log_w = widen(std::log(w));
  lcplx psi_a = widen(digamma(a)), psi_b = widen(digamma(b));
  long double psi_n1 = -kEulerGamma;  // psi(n + 1)
  lcplx coef(1.0L, 0.0L), sum(0.0L, 0.0L);
  int small = 0;
  for (int n = 0; n < kMaxSeriesTerms; ++n) {
    const long double nn = n;
    const lcplx term = coef * (2.0L * psi_n1 - psi_a - psi_b - log_w);
    sum += term;
    if (n > 0 && converged(std::abs(term), std::abs(sum), tol, small)) {
      return pref * narrow(sum);
    }
    coef *= (A + nn) * (B + nn) / ((nn + 1.0L) * (nn + 1.0L)) * W;
    psi_a += 1.0L / (A + nn);
    psi_b += 1.0L / (B + nn);
    psi_n1 += 1.0L / (nn + 1.0L);
  }
  throw ConvergenceError("gauss_2f1_log_case: expansion did not converge");
}

// F(a, b; a + b - m; 1 - w) for m >= 1.
cplx log_case_m(cplx a, cplx b, int m, cplx w, double tol) {
  const double md = m;
  const cplx c = a + b - md;
  const lcplx A = widen(a), B = widen(b), W = widen(w);

  // Finite part: n = 0 .. m - 1.
  cplx finite(0.0, 0.0);
  const cplx pref1 = gamma_ratio({cplx(md, 0.0), c}, {a, b});
  if (pref1 != cplx(0.0, 0.0)) {
    lcplx coef(1.0L, 0.0L), sum(0.0L, 0.0L);
    const lcplx Am = A - static_cast<long double>(m), Bm = B - static_cast<long double>(m);
    for (int n = 0; n < m; ++n) {
      sum += coef;
      if (n + 1 == m) break;
      const long double nn = n;
      coef *= (Am + nn) * (Bm + nn) / ((nn + 1.0L) * (1.0L - md + nn)) * W;
    }
    finite = pref1 * std::pow(w, -m) * narrow(sum);
  }

  // Logarithmic part.
  const cplx pref2 = (m % 2 == 0 ? -1.0 : 1.0) * gamma_ratio({c}, {a - md, b - md});
  if (pref2 == cplx(0.0, 0.0)) return finite;
  const lcplx log_w = widen(std::log(w));
  lcplx psi_a = widen(digamma(a)), psi_b = widen(digamma(b));
  long double psi_n1 = -kEulerGamma;  // psi(n + 1)
  long double psi_nm1 = -kEulerGamma;  // psi(n + m + 1)
  long double fact_m = 1.0L;
  for (int j = 1; j <= m; ++j) {
    psi_nm1 += 1.0L / j;
    fact_m *= j;
  }
  lcplx coef(1.0L / fact_m, 0.0L), sum(0.0L, 0.0L);
  int small = 0;
  for (int n = 0; n < kMaxSeriesTerms; ++n) {
    const long double nn = n;
    const lcplx term = coef * (log_w - psi_n1 - psi_nm1 + psi_a + psi_b);
    sum += term;
    if (n > 0 && converged(std::abs(term), std::abs(sum), tol, small)) {
      return finite + pref2 * narrow(sum);
    }
    coef *= (A + nn) * (B + nn) / ((nn + 1.0L) * (nn + 1.0L + md)) * W;
    psi_a += 1.0L / (A + nn);
    psi_b += 1.0L / (B + nn);
    psi_n1 += 1.0L / (nn + 1.0L);
    psi_nm1 += 1.0L / (nn + 1.0L + md);
  }
  throw ConvergenceError("gauss_2f1_log_case: expansion did not converge");
}

// F(a, b; c; 1 - w) by the connection formula around z = 1.
cplx near_one(cplx a, cplx b, cplx c, cplx w, double tol) {
  const int deg = terminating_degree(a, b);
  if (deg >= 0) return polynomial(a, b, c, 1.0 - w, deg);

  const cplx d = c - a - b;
  const double m_round = std::round(d.real());
  if (std::abs(d - cplx(m_round, 0.0)) < kLogCaseThreshold) {
    return gauss_2f1_log_case_w(a, b, -static_cast<int>(m_round), w, tol);
  }
  cplx value(0.0, 0.0);
  const cplx g1 = gamma_ratio({c, d}, {c - a, c - b});
  if (g1 != cplx(0.0, 0.0)) value += g1 * narrow(series_impl(a, b, 1.0 - d, w, tol));
  const cplx g2 = gamma_ratio({c, -d}, {a, b});
  if (g2 != cplx(0.0, 0.0)) {
    value += g2 * principal_pow(w, d) * narrow(series_impl(c - a, c - b, 1.0 + d, w, tol));
  }
  return value;
}

}  // namespace

cplx gauss_2f1_series(cplx a, cplx b, cplx c, cplx z, double tol) {
  check_tol(tol);
  if (std::abs(z) >= 1.0) throw DomainError("gauss_2f1_series: |z| must be < 1");
  return narrow(series_impl(a, b, c, z, tol));
}

cplx gauss_2f1_log_case_w(cplx a, cplx b, int m, cplx w, double tol) {
  check_tol(tol);
  if (std::abs(w) >= 1.0 || w == cplx(0.0, 0.0)) {
    throw DomainError("gauss_2f1_log_case: need 0 < |1 - z| < 1");
  }
  const cplx c = a + b - static_cast<double>(m);
  const int deg = terminating_degree(a, b);
  if (deg >= 0) return polynomial(a, b, c, 1.0 - w, deg);
  if (m < 0) {
    // Euler: F(a, b; c; z) = w^(c - a - b) F(c - a, c - b; c; z).
    return std::pow(w, -m) * gauss_2f1_log_case_w(c - a, c - b, -m, w, tol);
  }
  if (is_nonpositive_integer(c)) throw PoleError("gauss_2f1_log_case: c is a pole");
  if (m == 0) return log_case_m0(a, b, w, tol);
  return log_case_m(a, b, m, w, tol);
}

cplx gauss_2f1_log_case(cplx a, cplx b, int m, double z, double tol) {
  if (m < 0) throw DomainError("gauss_2f1_log_case: m must be non-negative");
  if (z == 0.0) return 1.0;
  if (!(z > 0.0 && z < 1.0)) throw DomainError("gauss_2f1_log_case: z must lie in [0, 1)");
  return gauss_2f1_log_case_w(a, b, m, cplx(1.0 - z, 0.0), tol);
}

cplx gauss_2f1(const HyperParams& p, double tol, CutSide side) {
  check_tol(tol);
  const cplx a = p.a, b = p.b, c = p.c;
  cplx z = p.z;
  cplx w = p.one_minus_z.value_or(1.0 - z);

  const int deg = terminating_degree(a, b);
  if (deg >= 0) return polynomial(a, b, c, z, deg);
  if (is_nonpositive_integer(c)) throw PoleError("gauss_2f1: c is a non-positive integer");

  if (std::abs(z) <= kSeriesRadius) return narrow(series_impl(a, b, c, z, tol));

  if (z.imag() == 0.0 && z.real() >= 1.0 && !(w.real() > 0.0)) {
    if (w == 0.0) {
      const cplx d = c - a - b;
      if (d.real() <= 0.0) throw DomainError("gauss_2f1: divergent at z = 1 (Re(c - a - b) <= 0)");
      return gamma_ratio({c, d}, {c - a, c - b});
    }
    if (side == CutSide::none) {
      throw BranchCutError("gauss_2f1: z on the cut [1, inf) with no side declared");
    }
    // Move infinitesimally off the axis so that the principal logarithms
    // below pick the declared side.
    const double eps = (side == CutSide::above ? 1.0 : -1.0) * 1e-300;
    z = {z.real(), eps};
    w = {w.real(), -eps};
  }

  const cplx zeta = -z / w;  // z / (z - 1)
  const double az = std::abs(z), azeta = std::abs(zeta), aw = std::abs(w);
  const double aw_inv = 1.0 / aw;

  auto pfaff_series = [&] {
    const int d2 = terminating_degree(a, c - b);
    if (d2 >= 0) return principal_pow(w, -a) * polynomial(a, c - b, c, zeta, d2);
    return principal_pow(w, -a) * narrow(series_impl(a, c - b, c, zeta, tol));
  };
  auto pfaff_near_one = [&] {
    return principal_pow(w, -a) * near_one(a, c - b, c, 1.0 / w, tol);
  };

  if (azeta <= kSeriesRadius) return pfaff_series();
  if (aw <= kSeriesRadius) return near_one(a, b, c, w, tol);
  if (aw_inv <= kSeriesRadius) return pfaff_near_one();

  // Remaining region: pick the fastest-converging representation.
  constexpr double kFallbackRadius = 0.95;
  const double best = std::min({az, azeta, aw, aw_inv});
  if (best > kFallbackRadius) {
    throw ConvergenceError("gauss_2f1: argument near exp(+-i pi/3) outside every convergent region");
  }
  if (best == azeta) return pfaff_series();
  if (best == aw) return near_one(a, b, c, w, tol);
  if (best == aw_inv) return pfaff_near_one();
  return narrow(series_impl(a, b, c, z, tol));
}

}  // namespace hyperkernel::specfun
