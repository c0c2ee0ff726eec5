#pragma once

// Command engine: every CLI (and C API) entry point maps onto one run_* routine
// here.  Each routine performs the computation, assembles a Report, and renders
// the payload that should reach stdout (JSON report, text report, or CSV).

#include <cstdint>
#include <stdexcept>
#include <string>

#include "bounds.hpp"
#include "report.hpp"

namespace wpb {

inline constexpr const char* kToolVersion = "wpbounds 1.0.0";

// Raised for malformed requests (unknown ids, invalid flag ranges, impossible
// domains).  Callers translate it into exit code 2 / WPB_ERR_INVALID.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct EngineOpts {
  bool json = false;
  std::uint64_t seed = 0;

  // certify
  std::string check = "all";
  double rmin = 1e-6;
  int depth = 42;

  // verify-random
  int trials = 1000;
  int modes = 64;
  double Lmin = 0.01;
  double Lmax = 2.0 * eps2();

  // plotdata
  std::string functions = "H,sqrtRC,twoF,C";
  double rmax = eps2bar();
  int samples = 500;
  std::string out;  // when set, CSV goes to this file instead of the payload

  // sharpness
  double L = 0.1;
  int points = 200;
  std::string constraint = "all";

  // curvature
  int genus = 2;
  int punctures = 0;
  double systole = 0.1;

  // constants
  double tol = 5e-5;

  // delta
  double eps = 1e-4;
};

struct RunResult {
  Report report;        // populated for report-producing commands
  std::string payload;  // exactly what should be printed to stdout
  int exit_code = 0;
};

RunResult run_constants(const EngineOpts& opts);
RunResult run_certify(const EngineOpts& opts);
RunResult run_verify_random(const EngineOpts& opts);
RunResult run_plotdata(const EngineOpts& opts);
RunResult run_sharpness(const EngineOpts& opts);
RunResult run_curvature(const EngineOpts& opts);
RunResult run_delta(const EngineOpts& opts);

// Dispatch by subcommand name; throws UsageError for unknown names.
RunResult run(const std::string& subcommand, const EngineOpts& opts);

}  // namespace wpb
