#include "hyperkernel/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"

#include "hyperkernel/errors.hpp"
#include "hyperkernel/kernels.hpp"
#include "hyperkernel/verify.hpp"

namespace hyperkernel::cli {

namespace {

using verify::complex_json;
using verify::Json;
using verify::number_json;

constexpr double kTolMin = 1e-12;
constexpr double kTolMax = 1e-3;

double parse_real(std::string_view s, const std::string& text, const std::string& flag) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  double v = 0.0;
  const auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || end != s.data() + s.size() || !std::isfinite(v)) {
    throw UsageError(flag + ": malformed number '" + text + "'");
  }
  return v;
}

void check_tol(double tol, const std::string& source) {
  if (!(tol >= kTolMin && tol <= kTolMax)) {
    throw UsageError(source + ": tolerance must lie in [1e-12, 1e-3]");
  }
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

Json convention_json() {
  Json c = Json::array();
  for (const auto& n : kernels::Convention::resolved().names()) c.push_back(n);
  return c;
}

quad::QuadratureSpec line_spec(double tol) {
  quad::QuadratureSpec spec;
  spec.tol = tol;
  return spec;
}

const char* kernel_name(Subcommand s) {
  switch (s) {
    case Subcommand::resolvent: return "resolvent";
    case Subcommand::wave: return "wave";
    case Subcommand::heat: return "heat";
    default: return "";
  }
}

struct PointValue {
  double r = 0.0;
  cplx value;
};

// Single kernel evaluation for resolvent, wave and heat requests.
PointValue evaluate(const CliRequest& req) {
  const bool points = req.w.has_value();
  const geom::DiscPoint w = points ? geom::DiscPoint(*req.w) : geom::DiscPoint();
  const geom::DiscPoint wp = points ? geom::DiscPoint(*req.wp) : geom::DiscPoint();
  const double r = points ? geom::distance(w, wp) : *req.r;
  switch (req.subcommand) {
    case Subcommand::resolvent: {
      const kernels::SpectralParams sp(req.k, *req.lambda);
      if (points) return {r, kernels::resolvent_kernel(sp, w, wp).value};
      return {r, kernels::resolvent_radial(sp, kernels::RadialArg(r))};
    }
    case Subcommand::wave:
      return {r, kernels::wave_kernel(req.k, kernels::RadialArg(r), *req.rho)};
    case Subcommand::heat: {
      if (points) return {r, kernels::heat_kernel(req.k, *req.t, w, wp, line_spec(req.tol)).value};
      return {r, kernels::heat_radial(req.k, *req.t, r, line_spec(req.tol))};
    }
    default:
      throw DomainError("evaluate: not a kernel subcommand");
  }
}

Json point_json(const CliRequest& req, const PointValue& pv) {
  Json j = Json::object();
  j["kernel"] = kernel_name(req.subcommand);
  j["k"] = number_json(req.k);
  j["lambda"] = req.lambda ? complex_json(*req.lambda) : Json(nullptr);
  j["r"] = number_json(pv.r);
  j["value"] = complex_json(pv.value);
  j["convention"] = convention_json();
  j["tol"] = number_json(req.tol);
  if (req.t) j["t"] = number_json(*req.t);
  if (req.rho) j["rho"] = number_json(*req.rho);
  if (req.w) {
    j["w"] = complex_json(*req.w);
    j["wp"] = complex_json(*req.wp);
  }
  return j;
}

int run_table(const CliRequest& req, std::ostream& out) {
  CliRequest point = req;
  point.subcommand = req.kernel == "resolvent" ? Subcommand::resolvent
                     : req.kernel == "wave"    ? Subcommand::wave
                                               : Subcommand::heat;
  const bool over_t = req.variable == "t";
  std::vector<std::pair<double, cplx>> rows;
  for (int i = 0; i < req.n; ++i) {
    const double x = req.n == 1 ? req.grid_min
                                : req.grid_min + (req.grid_max - req.grid_min) * i / (req.n - 1);
    if (over_t) {
      point.t = x;
    } else {
      point.r = x;
    }
    rows.emplace_back(x, evaluate(point).value);
  }
  if (req.format == Format::csv) {
    out << req.variable << ",re,im\n";
    for (const auto& [x, v] : rows) out << fmt(x) << ',' << fmt(v.real()) << ',' << fmt(v.imag()) << '\n';
    return kExitOk;
  }
  Json j = Json::object();
  j["kernel"] = req.kernel;
  j["k"] = number_json(req.k);
  j["lambda"] = req.lambda ? complex_json(*req.lambda) : Json(nullptr);
  if (over_t) {
    j["r"] = number_json(*req.r);
  } else if (req.t) {
    j["t"] = number_json(*req.t);
  }
  if (req.rho) j["rho"] = number_json(*req.rho);
  j["variable"] = req.variable;
  j["convention"] = convention_json();
  j["tol"] = number_json(req.tol);
  Json data = Json::array();
  for (const auto& [x, v] : rows) {
    Json row = Json::object();
    row[req.variable] = number_json(x);
    row["value"] = complex_json(v);
    data.push_back(row);
  }
  j["rows"] = data;
  out << j.dump(2) << '\n';
  return kExitOk;
}

int run_verify(const CliRequest& req, std::ostream& out, std::ostream& err) {
  const auto reports = verify::run_suite(req.suite, req.tol);
  std::size_t failed = 0;
  Json list = Json::array();
  for (const auto& r : reports) {
    if (!r.pass) ++failed;
    err << verify::format_report_line(r) << '\n';
    list.push_back(r.to_json());
  }
  Json j = Json::object();
  j["version"] = kVersion;
  j["suite"] = req.suite;
  j["tol"] = number_json(req.tol);
  j["passed"] = reports.size() - failed;
  j["failed"] = failed;
  j["reports"] = list;
  out << j.dump(2) << '\n';
  err << (failed == 0 ? "all " : "") << reports.size() - failed << " of " << reports.size()
      << " checks passed\n";
  return failed == 0 ? kExitOk : kExitFailure;
}

void require(bool present, const std::string& flag, const std::string& sub) {
  if (!present) throw UsageError(flag + " is required by " + sub);
}

void require_positive(double x, const std::string& flag) {
  if (!(x > 0.0) || !std::isfinite(x)) throw UsageError(flag + ": must be positive and finite");
}

void require_point(cplx w, const std::string& flag) {
  if (!(std::abs(w) < 1.0)) throw UsageError(flag + ": point must lie in the open unit disc");
}

}  // namespace

cplx parse_complex(const std::string& text, const std::string& flag) {
  std::string s;
  for (char ch : text) {
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  }
  if (s.empty()) throw UsageError(flag + ": empty complex literal");
  if (s.back() != 'i') return {parse_real(s, text, flag), 0.0};
  s.pop_back();
  // split at the last sign that is not the leading one or part of an exponent
  std::size_t split = std::string::npos;
  for (std::size_t i = s.size(); i-- > 1;) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      split = i;
      break;
    }
  }
  const std::string re_text = split == std::string::npos ? "" : s.substr(0, split);
  std::string im_text = split == std::string::npos ? s : s.substr(split);
  if (im_text.empty() || im_text == "+") im_text = "1";
  if (im_text == "-") im_text = "-1";
  const double re = re_text.empty() ? 0.0 : parse_real(re_text, text, flag);
  return {re, parse_real(im_text, text, flag)};
}

std::optional<CliRequest> parse_args(int argc, const char* const* argv, std::ostream& out) {
  CLI::App app{"Resolvent, wave and heat kernels of the magnetic Laplacian on the hyperbolic disc",
               "hyperkernel"};
  app.require_subcommand(1);
  app.set_version_flag("--version", kVersion);

  double k = 0.0;
  std::string lambda_text, w_text, wp_text, kernel, suite = "all", format = "json", over = "r";
  double t = 0.0, r = 0.0, rho = 0.0, r_min = 0.0, r_max = 0.0, tol = kDefaultTol;
  int n = 0;

  auto* resolvent = app.add_subcommand("resolvent", "Resolvent kernel G_k(lambda)");
  auto* wave = app.add_subcommand("wave", "Wave kernel W_k(r, rho)");
  auto* heat = app.add_subcommand("heat", "Heat kernel H_k(t, r)");
  auto* table = app.add_subcommand("table", "Kernel values on a uniform grid");
  auto* verify = app.add_subcommand("verify", "Run verification suites");
  auto* conventions = app.add_subcommand("conventions", "Print the convention resolution report");

  for (auto* sub : {resolvent, wave, heat, table}) sub->add_option("--k", k, "Magnetic strength")->required();
  for (auto* sub : {resolvent, table}) sub->add_option("--lambda", lambda_text, "Spectral parameter a+bi");
  for (auto* sub : {resolvent, wave, heat}) sub->add_option("--r", r, "Geodesic distance");
  for (auto* sub : {resolvent, heat}) {
    sub->add_option("--w", w_text, "First disc point a+bi");
    sub->add_option("--wp", wp_text, "Second disc point a+bi");
  }
  resolvent->get_option("--lambda")->required();
  for (auto* sub : {wave, table}) sub->add_option("--rho", rho, "Wave time");
  wave->get_option("--rho")->required();
  for (auto* sub : {heat, table}) sub->add_option("--t", t, "Heat time");
  heat->get_option("--t")->required();

  table->add_option("--kernel", kernel, "resolvent, wave or heat")
      ->required()
      ->check(CLI::IsMember({"resolvent", "wave", "heat"}));
  table->add_option("--over", over, "Abscissa: r, or t for the heat kernel")
      ->check(CLI::IsMember({"r", "t"}));
  table->add_option("--r", r, "Fixed distance when tabulating over t");
  table->add_option("--r-min", r_min, "Grid start")->required();
  table->add_option("--r-max", r_max, "Grid end")->required();
  table->add_option("--n", n, "Number of grid points")->required();
  table->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));

  verify->add_option("--suite", suite, "Suite name")->check(CLI::IsMember(verify::suite_names()));

  for (auto* sub : {resolvent, wave, heat, table, verify, conventions}) {
    sub->add_option("--tol", tol, "Quadrature tolerance in [1e-12, 1e-3]");
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return std::nullopt;
  } catch (const CLI::CallForVersion&) {
    out << kVersion << '\n';
    return std::nullopt;
  } catch (const CLI::ParseError& e) {
    throw UsageError(e.what());
  }

  CliRequest req;
  req.k = k;
  auto* sub = app.get_subcommands().front();
  const std::string name = sub->get_name();
  if (name == "resolvent") req.subcommand = Subcommand::resolvent;
  if (name == "wave") req.subcommand = Subcommand::wave;
  if (name == "heat") req.subcommand = Subcommand::heat;
  if (name == "table") req.subcommand = Subcommand::table;
  if (name == "verify") req.subcommand = Subcommand::verify;
  if (name == "conventions") req.subcommand = Subcommand::conventions;

  const auto given = [&](const char* flag) {
    auto* opt = sub->get_option_no_throw(flag);
    return opt != nullptr && opt->count() > 0;
  };

  if (const char* env = std::getenv("HYPERKERNEL_TOL"); env != nullptr && !given("--tol")) {
    tol = parse_real(env, env, "HYPERKERNEL_TOL");
    check_tol(tol, "HYPERKERNEL_TOL");
  }
  check_tol(tol, "--tol");
  req.tol = tol;
  if (!std::isfinite(k)) throw UsageError("--k: must be finite");

  if (given("--lambda")) req.lambda = parse_complex(lambda_text, "--lambda");
  if (given("--w")) req.w = parse_complex(w_text, "--w");
  if (given("--wp")) req.wp = parse_complex(wp_text, "--wp");
  if (given("--rho")) req.rho = rho;
  if (given("--t")) req.t = t;
  if (given("--r")) req.r = r;

  if (req.w.has_value() != req.wp.has_value()) throw UsageError("--w and --wp must be given together");
  if (req.w) {
    require_point(*req.w, "--w");
    require_point(*req.wp, "--wp");
    if (req.r) throw UsageError("--r conflicts with --w/--wp");
  }
  if (req.r && !(*req.r >= 0.0 && std::isfinite(*req.r))) {
    throw UsageError("--r: must be non-negative and finite");
  }
  if (req.t) require_positive(*req.t, "--t");
  if (req.rho && !std::isfinite(*req.rho)) throw UsageError("--rho: must be finite");

  switch (req.subcommand) {
    case Subcommand::resolvent:
      require(req.r || req.w, "--r (or --w and --wp)", name);
      if (req.r && *req.r == 0.0) throw UsageError("--r: must be positive for the resolvent");
      break;
    case Subcommand::wave:
      require(req.r.has_value(), "--r", name);
      if (!(*req.rho > *req.r)) throw UsageError("--rho: must exceed --r");
      break;
    case Subcommand::heat:
      require(req.r || req.w, "--r (or --w and --wp)", name);
      break;
    case Subcommand::table: {
      req.kernel = kernel;
      req.variable = over;
      req.grid_min = r_min;
      req.grid_max = r_max;
      req.n = n;
      req.format = format == "csv" ? Format::csv : Format::json;
      if (n < 1) throw UsageError("--n: must be at least 1");
      if (!(std::isfinite(r_min) && std::isfinite(r_max) && r_min <= r_max)) {
        throw UsageError("--r-min/--r-max: need finite bounds with r-min <= r-max");
      }
      if (over == "t") {
        if (kernel != "heat") throw UsageError("--over t: only the heat kernel is tabulated over t");
        require(req.r.has_value(), "--r", "table --over t");
        require_positive(r_min, "--r-min");
      } else {
        if (r_min < 0.0) throw UsageError("--r-min: must be non-negative");
        if (req.r) throw UsageError("--r: only used with --over t");
      }
      if (kernel == "resolvent") {
        require(req.lambda.has_value(), "--lambda", "table --kernel resolvent");
        require_positive(r_min, "--r-min");
      }
      if (kernel == "wave") {
        require(req.rho.has_value(), "--rho", "table --kernel wave");
        if (!(*req.rho > r_max)) throw UsageError("--rho: must exceed --r-max");
      }
      if (kernel == "heat" && over == "r") require(req.t.has_value(), "--t", "table --kernel heat");
      break;
    }
    case Subcommand::verify:
      req.suite = suite;
      break;
    case Subcommand::conventions:
      break;
  }
  return req;
}

int run(const CliRequest& req, std::ostream& out, std::ostream& err) {
  try {
    switch (req.subcommand) {
      case Subcommand::resolvent:
      case Subcommand::wave:
      case Subcommand::heat:
        out << point_json(req, evaluate(req)).dump(2) << '\n';
        return kExitOk;
      case Subcommand::table:
        return run_table(req, out);
      case Subcommand::verify:
        return run_verify(req, out, err);
      case Subcommand::conventions: {
        quad::QuadratureSpec spec = line_spec(std::min(req.tol, 1e-10));
        const auto verdict = verify::resolve_conventions(spec);
        Json j = verdict.to_json();
        j["version"] = kVersion;
        out << j.dump(2) << '\n';
        return verdict.sane ? kExitOk : kExitFailure;
      }
    }
  } catch (const PoleError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const ConvergenceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitFailure;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  std::optional<CliRequest> req;
  try {
    req = parse_args(argc, argv, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (!req) return kExitOk;
  return run(*req, out, err);
}

}  // namespace hyperkernel::cli
