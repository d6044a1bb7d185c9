#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "hyperkernel/cli.hpp"

using namespace hyperkernel;
using namespace hyperkernel::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "hyperkernel");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = main_entry(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("complex literals") {
  CHECK(parse_complex("0.5+0.5i", "--lambda") == cplx(0.5, 0.5));
  CHECK(parse_complex(" 1 - 2i ", "--lambda") == cplx(1.0, -2.0));
  CHECK(parse_complex("i", "--lambda") == cplx(0.0, 1.0));
  CHECK(parse_complex("-i", "--lambda") == cplx(0.0, -1.0));
  CHECK(parse_complex("+3i", "--lambda") == cplx(0.0, 3.0));
  CHECK(parse_complex("0.7", "--lambda") == cplx(0.7, 0.0));
  CHECK(parse_complex("1e-3+2.5E+1i", "--lambda") == cplx(1e-3, 25.0));
  CHECK(parse_complex("-1e-2-1e-2i", "--lambda") == cplx(-1e-2, -1e-2));
  for (const char* bad : {"", "abc", "1+", "1+2", "1+2j", "1++2i", "nan", "1e400i", "i2"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(parse_complex(bad, "--lambda"), UsageError);
  }
  try {
    parse_complex("x", "--w");
  } catch (const UsageError& e) {
    CHECK(std::string(e.what()).find("--w") != std::string::npos);
  }
}

TEST_CASE("parse_args") {
  std::ostringstream sink;
  const char* ok[] = {"hyperkernel", "resolvent", "--k", "1", "--lambda", "0.5+0.5i", "--r", "1.2"};
  const auto req = parse_args(8, ok, sink);
  REQUIRE(req.has_value());
  CHECK(req->subcommand == Subcommand::resolvent);
  CHECK(req->k == 1.0);
  CHECK(*req->lambda == cplx(0.5, 0.5));
  CHECK(*req->r == 1.2);
  CHECK(req->tol == kDefaultTol);

  const char* verify[] = {"hyperkernel", "verify", "--suite", "all", "--tol", "1e-8"};
  const auto vr = parse_args(6, verify, sink);
  REQUIRE(vr.has_value());
  CHECK(vr->subcommand == Subcommand::verify);
  CHECK(vr->suite == "all");
  CHECK(vr->tol == 1e-8);
}

TEST_CASE("usage errors exit 2 and name the flag") {
  const auto missing = invoke({"resolvent", "--k", "1", "--r", "1.2"});
  CHECK(missing.code == kExitUsage);
  CHECK(missing.err.find("--lambda") != std::string::npos);
  const auto unknown = invoke({"resolvent", "--k", "1", "--lambda", "i", "--r", "1", "--bogus", "2"});
  CHECK(unknown.code == kExitUsage);
  CHECK(unknown.err.find("--bogus") != std::string::npos);
  const auto malformed = invoke({"resolvent", "--k", "1", "--lambda", "1+2", "--r", "1"});
  CHECK(malformed.code == kExitUsage);
  CHECK(malformed.err.find("--lambda") != std::string::npos);
  CHECK(invoke({}).code == kExitUsage);
  CHECK(invoke({"resolvent", "--k", "1", "--lambda", "i"}).code == kExitUsage);
  CHECK(invoke({"wave", "--k", "0", "--r", "2", "--rho", "1"}).code == kExitUsage);
  CHECK(invoke({"heat", "--k", "0", "--t", "-1", "--r", "1"}).code == kExitUsage);
  CHECK(invoke({"verify", "--suite", "nope"}).code == kExitUsage);
  CHECK(invoke({"verify", "--tol", "1e-2"}).code == kExitUsage);
  CHECK(invoke({"verify", "--tol", "1e-13"}).code == kExitUsage);
  CHECK(invoke({"table", "--kernel", "wave", "--k", "0", "--rho", "2", "--r-min", "0.1", "--r-max", "3", "--n", "5"})
            .code == kExitUsage);
  CHECK(invoke({"resolvent", "--k", "1", "--lambda", "i", "--w", "0.1", "--wp", "1.2"}).code == kExitUsage);
}

TEST_CASE("help exits 0") {
  const auto help = invoke({"--help"});
  CHECK(help.code == kExitOk);
  CHECK(help.out.find("resolvent") != std::string::npos);
}

TEST_CASE("wave value and JSON schema") {
  const auto o = invoke({"wave", "--k", "0", "--r", "1", "--rho", "2"});
  REQUIRE(o.code == kExitOk);
  const auto j = nlohmann::json::parse(o.out);
  const double want = 1.0 / (2.0 * kPi * std::sqrt(std::pow(std::cosh(1.0), 2) - std::pow(std::cosh(0.5), 2)));
  CHECK(j["value"]["re"].get<double>() == doctest::Approx(want).epsilon(1e-14));
  CHECK(j["value"]["im"].get<double>() == 0.0);
  CHECK(j["kernel"] == "wave");
  CHECK(j["lambda"].is_null());
  CHECK(j["convention"].size() == 4);
  for (const char* key : {"kernel", "k", "lambda", "r", "value", "convention", "tol"}) CHECK(j.contains(key));
}

TEST_CASE("resolvent, points and poles") {
  const auto o = invoke({"resolvent", "--k", "1", "--lambda", "0.5+0.5i", "--r", "1.2"});
  REQUIRE(o.code == kExitOk);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["lambda"]["re"] == 0.5);
  const auto p = invoke({"resolvent", "--k", "0.5", "--lambda", "i", "--w", "0.1+0.2i", "--wp", "-0.3i"});
  CHECK(p.code == kExitOk);
  const auto pole = invoke({"resolvent", "--k", "1.5", "--lambda", "i", "--r", "1"});
  CHECK(pole.code == kExitFailure);
  CHECK_FALSE(pole.err.empty());
  const auto heat = invoke({"heat", "--k", "1", "--t", "0.5", "--r", "0.3"});
  CHECK(heat.code == kExitOk);
  CHECK(nlohmann::json::parse(heat.out)["value"]["re"].get<double>() > 0.0);
}

TEST_CASE("table csv contract") {
  const auto o = invoke(
      {"table", "--kernel", "heat", "--k", "1", "--t", "0.5", "--r-min", "0.1", "--r-max", "3", "--n", "30", "--format", "csv"});
  REQUIRE(o.code == kExitOk);
  const auto l = lines(o.out);
  REQUIRE(l.size() == 31);
  CHECK(l[0] == "r,re,im");
  double prev = -1.0;
  for (std::size_t i = 1; i < l.size(); ++i) {
    CHECK(std::count(l[i].begin(), l[i].end(), ',') == 2);
    const double r = std::stod(l[i].substr(0, l[i].find(',')));
    CHECK(r > prev);
    prev = r;
  }
  CHECK(prev == doctest::Approx(3.0));
  const auto t = invoke({"table", "--kernel", "heat", "--over", "t", "--k", "0", "--r", "1", "--r-min", "0.1",
                         "--r-max", "1", "--n", "4", "--format", "csv"});
  CHECK(t.code == kExitOk);
  CHECK(lines(t.out)[0] == "t,re,im");
  const auto js = invoke({"table", "--kernel", "resolvent", "--k", "1", "--lambda", "i", "--r-min", "0.5",
                          "--r-max", "2", "--n", "3"});
  REQUIRE(js.code == kExitOk);
  CHECK(nlohmann::json::parse(js.out)["rows"].size() == 3);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args = {"resolvent", "--k", "2.3", "--lambda", "0.3+0.7i", "--r", "0.4"};
  CHECK(invoke(args).out == invoke(args).out);
}

TEST_CASE("tolerance from the environment") {
  setenv("HYPERKERNEL_TOL", "1e-7", 1);
  const auto o = invoke({"heat", "--k", "0", "--t", "1", "--r", "1"});
  CHECK(nlohmann::json::parse(o.out)["tol"].get<double>() == 1e-7);
  const auto flag = invoke({"heat", "--k", "0", "--t", "1", "--r", "1", "--tol", "1e-9"});
  CHECK(nlohmann::json::parse(flag.out)["tol"].get<double>() == 1e-9);
  setenv("HYPERKERNEL_TOL", "1", 1);
  CHECK(invoke({"heat", "--k", "0", "--t", "1", "--r", "1"}).code == kExitUsage);
  unsetenv("HYPERKERNEL_TOL");
}

TEST_CASE("verify chebyshev") {
  const auto o = invoke({"verify", "--suite", "chebyshev"});
  CHECK(o.code == kExitOk);
  const auto j = nlohmann::json::parse(o.out);
  CHECK(j["version"] == kVersion);
  CHECK(j["failed"] == 0);
  CHECK(j["reports"].size() == 5);
}
