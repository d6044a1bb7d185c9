#include <cmath>
#include <cstdio>
#include <cstdlib>

#include "hyperkernel/verify.hpp"

namespace hyperkernel::verify {

Json number_json(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return std::strtod(buf, nullptr);
}

Json complex_json(cplx z) {
  Json j = Json::object();
  j["re"] = number_json(z.real());
  j["im"] = number_json(z.imag());
  return j;
}

ResidualReport ResidualReport::make(std::string identity, Json params, double residual,
                                    double tolerance) {
  ResidualReport r;
  r.identity = std::move(identity);
  r.params = std::move(params);
  r.residual = residual;
  r.tolerance = tolerance;
  r.pass = residual <= tolerance;
  return r;
}

Json ResidualReport::to_json() const {
  Json j = Json::object();
  j["identity"] = identity;
  j["params"] = params;
  j["residual"] = number_json(residual);
  j["tolerance"] = number_json(tolerance);
  j["pass"] = pass;
  return j;
}

std::string format_report_line(const ResidualReport& r) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "residual=%.3e tol=%.1e", r.residual, r.tolerance);
  return std::string(r.pass ? "PASS " : "FAIL ") + r.identity + " " + buf + " " +
         r.params.dump();
}

}  // namespace hyperkernel::verify
