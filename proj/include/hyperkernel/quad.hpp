#pragma once

// Quadrature engines: tanh-sinh on finite intervals, inverse-square-root
// endpoint removal by rho = r + u^2, semi-infinite panel summation with a
// truncation policy, Laplace integrals, and geodesic-polar integration over
// the hyperbolic disc.

#include <functional>
#include <vector>

#include "hyperkernel/geom.hpp"
#include "hyperkernel/specfun.hpp"

namespace hyperkernel::quad {

struct QuadratureSpec {
  double tol = 1e-10;                   // target relative error
  int max_levels = 10;                  // tanh-sinh step halvings
  double truncation_threshold = 1e-16;  // relative to the running peak
  bool strict = true;                   // throw instead of flagging inaccuracy

  /// Throws DomainError unless tol >= 1e-14 and 1 <= max_levels <= 12.
  void validate() const;
};

struct QuadResult {
  cplx value{0.0, 0.0};
  double error = 0.0;  // estimated absolute error
  int levels = 0;
  bool converged = true;
};

using Integrand = std::function<cplx(double)>;
/// Integrand receiving x together with x - a and b - x, both exact, so that
/// endpoint singularities keep full relative accuracy.
using EndpointIntegrand = std::function<cplx(double x, double from_a, double to_b)>;

QuadResult tanh_sinh(const Integrand& f, double a, double b, const QuadratureSpec& spec);
QuadResult tanh_sinh_endpoint(const EndpointIntegrand& f, double a, double b,
                              const QuadratureSpec& spec);

/// Integrand in rho with the offset rho - r passed exactly.
using OffsetIntegrand = std::function<cplx(double rho, double offset)>;

/// int_r^{r + length} f(rho) d rho through rho = r + u^2; absorbs an
/// (rho - r)^(-1/2) singularity at the lower end.
QuadResult integrate_sqrt_endpoint(const OffsetIntegrand& f, double r, double length,
                                   const QuadratureSpec& spec);

/// int_a^inf f(x) dx summed over panels of the given width until a panel
/// falls below truncation_threshold times the largest panel, twice in a row.
QuadResult integrate_panels(const Integrand& f, double a, double width,
                            const QuadratureSpec& spec, int max_panels = 4000);

inline constexpr double kDefaultNearField = 4.0;

/// int_r^inf f(rho) exp(i lambda rho) d rho for Im lambda > 0, with f allowed
/// an (rho - r)^(-1/2) singularity at rho = r. The near field [r, r + L] is
/// integrated in u with rho = r + u^2, the tail in rho.
QuadResult integrate_wave_tail(const OffsetIntegrand& f, double r, cplx lambda,
                               const QuadratureSpec& spec,
                               double near_field_length = kDefaultNearField);

/// int_0^inf exp(-p t) f(t) dt for Re p > 0.
QuadResult laplace_integral(const Integrand& f, cplx p, const QuadratureSpec& spec);

/// Radial factor K(r) of a polar integrand; to_outer = R - r exactly.
using RadialFactor = std::function<cplx(double r, double to_outer)>;
using DiscFunction = std::function<cplx(const geom::DiscPoint&)>;

/// int_0^R int_0^{2 pi} K(r) g(polar_point(center, r, theta)) sinh r dtheta dr,
/// the hyperbolic-area integral of K(d(center, .)) g over the geodesic ball
/// B(center, R). Breakpoints in (0, R) split the radial rule.
QuadResult polar_integral(const geom::DiscPoint& center, double radius,
                          const RadialFactor& radial, const DiscFunction& angular,
                          const QuadratureSpec& spec,
                          const std::vector<double>& breakpoints = {});

/// int_D f(w) 4 (1 - |w|^2)^(-2) dA(w) for f supported in the geodesic ball
/// of radius support_radius around the origin.
QuadResult disc_integral(const DiscFunction& f, const QuadratureSpec& spec,
                         double support_radius,
                         const std::vector<double>& breakpoints = {});

}  // namespace hyperkernel::quad
