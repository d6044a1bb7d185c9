#pragma once

// Command-line front end. Exit codes: 0 success, 1 numerical or
// verification failure, 2 usage error.

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>

#include "hyperkernel/specfun.hpp"

namespace hyperkernel::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

inline constexpr double kDefaultTol = 1e-10;
inline constexpr const char* kVersion = "1.0.0";

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Subcommand { resolvent, wave, heat, table, verify, conventions };
enum class Format { json, csv };

struct CliRequest {
  Subcommand subcommand = Subcommand::resolvent;
  double k = 0.0;
  std::optional<cplx> lambda;
  std::optional<double> t;
  std::optional<double> r;
  std::optional<double> rho;
  std::optional<cplx> w;
  std::optional<cplx> wp;
  std::string kernel;     // table
  std::string variable = "r";  // table abscissa: r, or t for heat
  double grid_min = 0.0;
  double grid_max = 0.0;
  int n = 0;
  std::string suite = "all";
  Format format = Format::json;
  double tol = kDefaultTol;
};

/// Parses "a+bi", "a-bi", "bi", "a" with optional whitespace and scientific
/// notation. Throws UsageError naming the flag on malformed input.
cplx parse_complex(const std::string& text, const std::string& flag);

/// Parses and validates argv. Throws UsageError; --help is reported by
/// returning std::nullopt after printing to out.
std::optional<CliRequest> parse_args(int argc, const char* const* argv, std::ostream& out);

/// Executes a validated request and returns the exit code.
int run(const CliRequest& req, std::ostream& out, std::ostream& err);

/// parse_args + run with the exit-code contract applied.
int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace hyperkernel::cli
