// wpb: command-line front end over the wpbounds C API.
//
// Exit codes: 0 every check certified, 1 at least one violation,
// 2 usage/domain error, 3 at least one inconclusive check.

#include <cstdint>
#include <cstdio>
#include <string>

#include "CLI11.hpp"
#include "wpbounds.h"

namespace {

struct Flags {
  bool json = false;
  std::uint64_t seed = 0;
  std::string check = "all";
  double rmin = 1e-6;
  int depth = 42;
  int trials = 1000;
  int modes = 64;
  double Lmin = 0.01;
  double Lmax = 1.7627471740390860505;  // 2 asinh(1)
  std::string functions = "H,sqrtRC,twoF,C";
  double plot_rmin = 1e-6;
  double rmax = 0.5493061443340548457;  // log(3)/2
  int samples = 500;
  std::string out;
  double L = 0.1;
  int points = 200;
  std::string constraint = "all";
  int genus = 2;
  int punctures = 0;
  double systole = 0.1;
  double tol = 5e-5;
  double eps = 1e-4;
};

int fail_api(wpb_status status) {
  std::fprintf(stderr, "error: %s\n", wpb_last_error());
  (void)status;
  return 2;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"certified norm bounds for holomorphic quadratic differentials "
               "over hyperbolic collars and cusps"};
  app.set_version_flag("--version", wpb_version());
  app.require_subcommand(1);
  Flags f;

  app.add_flag("--json", f.json, "emit the machine-readable JSON report");
  app.add_option("--seed", f.seed, "RNG seed for randomized subcommands");

  CLI::App* constants = app.add_subcommand(
      "constants", "check every published constant against a fresh enclosure");
  constants->add_option("--tol", f.tol, "acceptance half-width for printed values");

  CLI::App* certify = app.add_subcommand(
      "certify", "run interval branch-and-bound certificates for the bound envelope");
  certify->add_option("--check", f.check, "check id, or 'all'");
  certify->add_option("--rmin", f.rmin, "left end of the certified r-range");
  certify->add_option("--depth", f.depth, "maximum bisection depth");

  CLI::App* verify = app.add_subcommand(
      "verify-random", "probe the pointwise bounds with random differentials");
  verify->add_option("--trials", f.trials, "number of random trials");
  verify->add_option("--modes", f.modes, "Laurent mode cutoff (0..64)");
  verify->add_option("--Lmin", f.Lmin, "smallest core length sampled");
  verify->add_option("--Lmax", f.Lmax, "largest core length sampled");

  CLI::App* plotdata = app.add_subcommand(
      "plotdata", "emit CSV samples of the bound functions on a log-spaced grid");
  plotdata->add_option("--functions", f.functions,
                       "comma list from H,sqrtRC,twoF,C,K,G,m,mprime");
  plotdata->add_option("--rmin", f.plot_rmin, "left end of the grid");
  plotdata->add_option("--rmax", f.rmax, "right end of the grid");
  plotdata->add_option("--samples", f.samples, "number of grid points");
  plotdata->add_option("--out", f.out, "write CSV here instead of stdout");

  CLI::App* sharpness = app.add_subcommand(
      "sharpness", "sweep the extremal pointwise/L2 ratio across one collar");
  sharpness->add_option("--L", f.L, "collar core length");
  sharpness->add_option("--modes", f.modes, "Laurent mode cutoff (0..64)");
  sharpness->add_option("--points", f.points, "number of sweep points");
  sharpness->add_option("--constraint", f.constraint,
                        "'all' or 'perp' (orthogonal to the invariant mode)");
  sharpness->add_option("--out", f.out, "write CSV here instead of stdout");

  CLI::App* curvature = app.add_subcommand(
      "curvature", "Weil-Petersson curvature bounds for a surface type");
  curvature->add_option("--genus", f.genus, "genus g");
  curvature->add_option("--punctures", f.punctures, "number of punctures n");
  curvature->add_option("--systole", f.systole, "systole (shortest geodesic length)");

  CLI::App* delta = app.add_subcommand(
      "delta", "largest core length keeping the extremal ratio within (1+eps)");
  delta->add_option("--eps", f.eps, "relative excess over the small-length limit");

  // let the global --json / --seed flags appear after the subcommand as well
  for (CLI::App* sub : {constants, certify, verify, plotdata, sharpness,
                        curvature, delta})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  const char* name = nullptr;
  if (constants->parsed()) name = "constants";
  else if (certify->parsed()) name = "certify";
  else if (verify->parsed()) name = "verify-random";
  else if (plotdata->parsed()) name = "plotdata";
  else if (sharpness->parsed()) name = "sharpness";
  else if (curvature->parsed()) name = "curvature";
  else if (delta->parsed()) name = "delta";
  if (!name) {
    std::fprintf(stderr, "error: no subcommand\n");
    return 2;
  }

  wpb_opts* opts = wpb_opts_new();
  if (!opts) {
    std::fprintf(stderr, "error: out of memory\n");
    return 2;
  }
  wpb_status st = WPB_OK;
  auto set_u64 = [&](const char* key, std::uint64_t v) {
    if (st == WPB_OK) st = wpb_opts_set_u64(opts, key, v);
  };
  auto set_f64 = [&](const char* key, double v) {
    if (st == WPB_OK) st = wpb_opts_set_f64(opts, key, v);
  };
  auto set_str = [&](const char* key, const std::string& v) {
    if (st == WPB_OK) st = wpb_opts_set_str(opts, key, v.c_str());
  };

  set_u64("json", f.json ? 1 : 0);
  set_u64("seed", f.seed);
  set_str("check", f.check);
  set_f64("rmin", plotdata->parsed() ? f.plot_rmin : f.rmin);
  set_u64("depth", static_cast<std::uint64_t>(f.depth));
  set_u64("trials", static_cast<std::uint64_t>(f.trials));
  set_u64("modes", static_cast<std::uint64_t>(f.modes));
  set_f64("Lmin", f.Lmin);
  set_f64("Lmax", f.Lmax);
  set_str("functions", f.functions);
  set_f64("rmax", f.rmax);
  set_u64("samples", static_cast<std::uint64_t>(f.samples));
  set_str("out", f.out);
  set_f64("L", f.L);
  set_u64("points", static_cast<std::uint64_t>(f.points));
  set_str("constraint", f.constraint);
  set_u64("genus", static_cast<std::uint64_t>(f.genus));
  set_u64("punctures", static_cast<std::uint64_t>(f.punctures));
  set_f64("systole", f.systole);
  set_f64("tol", f.tol);
  set_f64("eps", f.eps);
  if (st != WPB_OK) {
    wpb_opts_free(opts);
    return fail_api(st);
  }

  wpb_report* report = nullptr;
  st = wpb_run(name, opts, &report);
  wpb_opts_free(opts);
  if (st != WPB_OK) return fail_api(st);

  const char* payload = wpb_report_payload(report);
  if (payload[0] != '\0') std::fputs(payload, stdout);
  const int code = wpb_report_exit_code(report);
  wpb_report_free(report);
  return code;
}
