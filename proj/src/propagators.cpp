#include <algorithm>
#include <cmath>
#include <string>

#include "hyperkernel/errors.hpp"
#include "hyperkernel/kernels.hpp"

namespace hyperkernel::kernels {

namespace {

void check_support(const SupportedFunction& g, const char* who) {
  if (!g.f) throw DomainError(std::string(who) + ": initial data is empty");
  if (!(g.radius >= 0.0) || !std::isfinite(g.radius)) {
    throw DomainError(std::string(who) + ": support radius must be finite and >= 0");
  }
  const double reach = geom::distance(geom::DiscPoint{}, g.center) + g.radius;
  if (!(std::tanh(0.5 * reach) < 1.0 - geom::kBoundaryGuard)) {
    throw DomainError(std::string(who) + ": support touches the disc boundary");
  }
}

}  // namespace

quad::QuadratureSpec default_disc_spec() {
  quad::QuadratureSpec spec;
  spec.tol = 1e-6;
  return spec;
}

quad::QuadratureSpec default_line_spec() {
  quad::QuadratureSpec spec;
  spec.tol = 1e-8;
  return spec;
}

cplx apply_wave_propagator(double k, double t, const SupportedFunction& u1,
                           const geom::DiscPoint& w, const quad::QuadratureSpec& spec) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("apply_wave_propagator: t must be > 0");
  check_support(u1, "apply_wave_propagator");
  const double dc = geom::distance(w, u1.center);
  if (dc - u1.radius >= t) return {0.0, 0.0};
  const auto radial = [k, t](double r, double to_outer) -> cplx {
    if (!(to_outer > 0.0) || r >= t) return {0.0, 0.0};
    return 0.5 * std::exp(log_wave_kernel_offset(k, r, to_outer));
  };
  const auto angular = [&](const geom::DiscPoint& z) {
    const cplx v = u1.f(z);
    if (v == cplx(0.0, 0.0)) return v;
    return geom::phase_factor(k, w, z) * v;
  };
  return quad::polar_integral(w, t, radial, angular, spec, {dc - u1.radius, dc + u1.radius})
      .value;
}

cplx apply_heat_propagator(double k, double t, const SupportedFunction& v0,
                           const geom::DiscPoint& w, const quad::QuadratureSpec& spec,
                           const quad::QuadratureSpec& line_spec) {
  if (!(t > 0.0) || !std::isfinite(t)) throw DomainError("apply_heat_propagator: t must be > 0");
  check_support(v0, "apply_heat_propagator");
  const double dc = geom::distance(w, v0.center);
  const double outer = dc + v0.radius;
  const double inner = dc - v0.radius;
  const auto radial = [&](double r, double) -> cplx {
    if (r < inner) return {0.0, 0.0};
    return heat_radial(k, t, r, line_spec);
  };
  const auto angular = [&](const geom::DiscPoint& z) {
    const cplx v = v0.f(z);
    if (v == cplx(0.0, 0.0)) return v;
    return geom::phase_factor(k, w, z) * v;
  };
  return quad::polar_integral(w, outer, radial, angular, spec, {inner}).value;
}

}  // namespace hyperkernel::kernels
