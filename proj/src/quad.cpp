#include "hyperkernel/quad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "hyperkernel/errors.hpp"

namespace hyperkernel::quad {

namespace {

constexpr double kHalfPi = 1.5707963267948966;
// Beyond |t| = 6.5 the endpoint offsets underflow double range.
constexpr double kTMax = 6.5;
// Nodes this far out are within ~1e-15 of an endpoint; only there may the
// outward walk stop early.
constexpr double kTruncationStart = 3.0;
constexpr int kMinLevels = 3;
constexpr double kCancellationFloor = 1e-3;

// Offset of the node at t from the right endpoint of [-1, 1] and its weight.
struct Node {
  double offset;
  double weight;
};

Node node_at(double t) {
  const double u = kHalfPi * std::sinh(t);
  const double e = std::exp(-2.0 * u);  // u >= 0
  const double offset = 2.0 * e / (1.0 + e);
  const double ch = std::cosh(u);
  return {offset, kHalfPi * std::cosh(t) / (ch * ch)};
}

void check_finite(cplx v, const char* who) {
  if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
    throw DomainError(std::string(who) + ": integrand returned a non-finite value");
  }
}

QuadResult finish(QuadResult res, const QuadratureSpec& spec, const char* who) {
  if (!res.converged && spec.strict) {
    throw ConvergenceError(std::string(who) + ": no convergence after " +
                           std::to_string(res.levels) + " levels, error estimate " +
                           std::to_string(res.error));
  }
  return res;
}

}  // namespace

void QuadratureSpec::validate() const {
  if (!(tol >= 1e-14) || !std::isfinite(tol)) {
    throw DomainError("QuadratureSpec: tol must be >= 1e-14");
  }
  if (max_levels < 1 || max_levels > 12) {
    throw DomainError("QuadratureSpec: max_levels must lie in [1, 12]");
  }
  if (!(truncation_threshold > 0.0) || !(truncation_threshold < 1.0)) {
    throw DomainError("QuadratureSpec: truncation_threshold must lie in (0, 1)");
  }
}

QuadResult tanh_sinh_endpoint(const EndpointIntegrand& f, double a, double b,
                              const QuadratureSpec& spec) {
  spec.validate();
  if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("tanh_sinh: infinite bounds");
  if (a == b) return {};
  if (b < a) {
    auto res = tanh_sinh_endpoint(
        [&f](double x, double from_a, double to_b) { return f(x, to_b, from_a); }, b, a, spec);
    res.value = -res.value;
    return res;
  }
  const double len = b - a;
  const double hw = 0.5 * len;

  cplx sum{0.0, 0.0};  // sum of w f over all nodes so far
  double abs_sum = 0.0;
  double peak = 0.0;

  auto add_node = [&](double t) {
    const Node nd = node_at(std::abs(t));
    const double d = hw * nd.offset;
    if (d <= 0.0) return false;
    cplx v;
    if (t >= 0.0) {
      v = f(b - d, len - d, d);
    } else {
      v = f(a + d, d, len - d);
    }
    check_finite(v, "tanh_sinh");
    const cplx c = nd.weight * v;
    sum += c;
    const double m = std::abs(c);
    abs_sum += m;
    peak = std::max(peak, m);
    return !(std::abs(t) > kTruncationStart && m <= spec.truncation_threshold * peak);
  };

  // Walk outward from t0 in steps of 2h (or h at level 0) on one side.
  auto walk = [&](double t0, double step, double sign) {
    int quiet = 0;
    for (double t = t0; t <= kTMax; t += step) {
      if (!add_node(sign * t)) {
        if (++quiet >= 2) break;
      } else {
        quiet = 0;
      }
    }
  };

  QuadResult res;
  double h = 1.0;
  add_node(0.0);
  walk(1.0, 1.0, 1.0);
  walk(1.0, 1.0, -1.0);
  cplx prev = hw * h * sum;
  for (int level = 1; level <= spec.max_levels; ++level) {
    h *= 0.5;
    walk(h, 2.0 * h, 1.0);
    walk(h, 2.0 * h, -1.0);
    const cplx cur = hw * h * sum;
    const double err = std::abs(cur - prev);
    const double scale = std::max(std::abs(cur), kCancellationFloor * hw * h * abs_sum);
    res.value = cur;
    res.error = err;
    res.levels = level;
    if (level >= kMinLevels && err <= spec.tol * scale) {
      res.converged = true;
      return res;
    }
    prev = cur;
  }
  res.converged = false;
  return finish(res, spec, "tanh_sinh");
}

QuadResult tanh_sinh(const Integrand& f, double a, double b, const QuadratureSpec& spec) {
  return tanh_sinh_endpoint([&f](double x, double, double) { return f(x); }, a, b, spec);
}

QuadResult integrate_sqrt_endpoint(const OffsetIntegrand& f, double r, double length,
                                   const QuadratureSpec& spec) {
  if (!(length > 0.0)) throw DomainError("integrate_sqrt_endpoint: length must be > 0");
  return tanh_sinh(
      [&f, r](double u) {
        const double off = u * u;
        if (off == 0.0) return cplx(0.0, 0.0);
        return 2.0 * u * f(r + off, off);
      },
      0.0, std::sqrt(length), spec);
}

QuadResult integrate_panels(const Integrand& f, double a, double width,
                            const QuadratureSpec& spec, int max_panels) {
  if (!(width > 0.0)) throw DomainError("integrate_panels: width must be > 0");
  QuadratureSpec inner = spec;
  inner.strict = true;
  QuadResult total;
  double peak = 0.0;
  int quiet = 0;
  for (int p = 0; p < max_panels; ++p) {
    const double lo = a + p * width;
    const QuadResult part = tanh_sinh(f, lo, lo + width, inner);
    total.value += part.value;
    total.error += part.error;
    total.levels = std::max(total.levels, part.levels);
    const double m = std::abs(part.value);
    peak = std::max(peak, m);
    if (m <= spec.truncation_threshold * peak) {
      if (++quiet >= 2) return total;
    } else {
      quiet = 0;
    }
  }
  total.converged = false;
  if (spec.strict) {
    throw ConvergenceError("integrate_panels: truncation bound not reached after " +
                           std::to_string(max_panels) + " panels");
  }
  return total;
}

QuadResult integrate_wave_tail(const OffsetIntegrand& f, double r, cplx lambda,
                               const QuadratureSpec& spec, double near_field_length) {
  if (!(lambda.imag() > 0.0)) {
    throw DomainError("integrate_wave_tail: Im lambda must be > 0");
  }
  const cplx il = cplx(0.0, 1.0) * lambda;
  const QuadResult near = integrate_sqrt_endpoint(
      [&](double rho, double off) { return f(rho, off) * std::exp(il * rho); }, r,
      near_field_length, spec);
  const double start = r + near_field_length;
  const double width = std::clamp(1.0 / lambda.imag(), 1.0, 8.0);
  const QuadResult tail = integrate_panels(
      [&](double rho) { return f(rho, rho - r) * std::exp(il * rho); }, start, width, spec);
  QuadResult res;
  res.value = near.value + tail.value;
  res.error = near.error + tail.error;
  res.levels = std::max(near.levels, tail.levels);
  res.converged = near.converged && tail.converged;
  return res;
}

QuadResult laplace_integral(const Integrand& f, cplx p, const QuadratureSpec& spec) {
  if (!(p.real() > 0.0)) throw DomainError("laplace_integral: Re p must be > 0");
  auto g = [&](double t) {
    const cplx v = f(t);
    if (v == cplx(0.0, 0.0)) return v;
    return std::exp(-p * t) * v;
  };
  const QuadResult head = tanh_sinh(g, 0.0, 1.0, spec);
  const double width = std::clamp(1.0 / p.real(), 1.0, 8.0);
  QuadResult tail;
  try {
    tail = integrate_panels(g, 1.0, width, spec);
  } catch (const ConvergenceError&) {
    throw ConvergenceError("laplace_integral: integrand growth defeats the damping");
  }
  QuadResult res;
  res.value = head.value + tail.value;
  res.error = head.error + tail.error;
  res.levels = std::max(head.levels, tail.levels);
  res.converged = head.converged && tail.converged;
  return res;
}

namespace {

// Periodic trapezoid over theta, doubled until two successive sums agree.
cplx angular_mean(const geom::DiscPoint& center, double r, const DiscFunction& g, double tol) {
  constexpr int kStart = 16;
  constexpr int kMaxNodes = 8192;
  const double two_pi = 2.0 * kPi;
  int n = kStart;
  cplx sum{0.0, 0.0};
  double abs_sum = 0.0;
  for (int j = 0; j < n; ++j) {
    const cplx v = g(geom::polar_point(center, r, two_pi * j / n));
    sum += v;
    abs_sum += std::abs(v);
  }
  cplx prev = sum / double(n);
  while (n < kMaxNodes) {
    for (int j = 0; j < n; ++j) {
      const cplx v = g(geom::polar_point(center, r, two_pi * (j + 0.5) / n));
      sum += v;
      abs_sum += std::abs(v);
    }
    n *= 2;
    const cplx cur = sum / double(n);
    const double scale = std::max(std::abs(cur), kCancellationFloor * abs_sum / n);
    if (std::abs(cur - prev) <= tol * scale) return cur;
    prev = cur;
  }
  throw ConvergenceError("polar_integral: angular rule did not converge");
}

}  // namespace

QuadResult polar_integral(const geom::DiscPoint& center, double radius,
                          const RadialFactor& radial, const DiscFunction& angular,
                          const QuadratureSpec& spec, const std::vector<double>& breakpoints) {
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    throw DomainError("polar_integral: radius must be finite and >= 0");
  }
  if (!(std::tanh(0.5 * radius) < 1.0 - geom::kBoundaryGuard)) {
    throw DomainError("polar_integral: support touches the disc boundary");
  }
  std::vector<double> cuts{0.0};
  for (double b : breakpoints) {
    if (b > 0.0 && b < radius) cuts.push_back(b);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.push_back(radius);

  const double angular_tol = std::max(1e-15, 0.1 * spec.tol);
  QuadResult total;
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i], hi = cuts[i + 1];
    const QuadResult part = tanh_sinh_endpoint(
        [&](double r, double, double to_hi) {
          const cplx k = radial(r, (radius - hi) + to_hi);
          if (k == cplx(0.0, 0.0)) return k;
          return k * std::sinh(r) * 2.0 * kPi * angular_mean(center, r, angular, angular_tol);
        },
        lo, hi, spec);
    total.value += part.value;
    total.error += part.error;
    total.levels = std::max(total.levels, part.levels);
    total.converged = total.converged && part.converged;
  }
  return total;
}

QuadResult disc_integral(const DiscFunction& f, const QuadratureSpec& spec, double support_radius,
                         const std::vector<double>& breakpoints) {
  return polar_integral(geom::DiscPoint{}, support_radius,
                        [](double, double) { return cplx(1.0, 0.0); }, f, spec, breakpoints);
}

}  // namespace hyperkernel::quad
