#include <cmath>

#include "hyperkernel/errors.hpp"
#include "hyperkernel/specfun.hpp"

namespace hyperkernel::specfun {

double chebyshev_T(unsigned n, double x) {
  if (n == 0) return 1.0;
  double prev = 1.0, cur = x;
  for (unsigned j = 1; j < n; ++j) {
    const double next = 2.0 * x * cur - prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

double cos_form_F(double a, double x) {
  if (!(x >= 1.0)) throw DomainError("cos_form_F: x must be >= 1");
  return std::cosh(2.0 * a * std::acosh(x));
}

double cos_form_F_from_excess(double a, double x_sq_minus_one) {
  if (!(x_sq_minus_one >= 0.0)) throw DomainError("cos_form_F: x^2 - 1 must be >= 0");
  // arccosh x = arcsinh sqrt(x^2 - 1), exact near x = 1.
  return std::cosh(2.0 * a * std::asinh(std::sqrt(x_sq_minus_one)));
}

}  // namespace hyperkernel::specfun
