#include "wpbounds.h"

#include <cstring>
#include <exception>
#include <new>
#include <stdexcept>
#include <string>

#include "bounds.hpp"
#include "engine.hpp"

namespace {

thread_local std::string g_last_error;

void set_error(const std::string& msg) { g_last_error = msg; }

}  // namespace

struct wpb_opts {
  wpb::EngineOpts o;
};

struct wpb_report {
  wpb::RunResult rr;
  std::string json;
  std::string text;
};

extern "C" {

const char* wpb_version(void) { return wpb::kToolVersion; }

const char* wpb_last_error(void) { return g_last_error.c_str(); }

wpb_opts* wpb_opts_new(void) { return new (std::nothrow) wpb_opts(); }

void wpb_opts_free(wpb_opts* opts) { delete opts; }

wpb_status wpb_opts_set_u64(wpb_opts* opts, const char* key, uint64_t value) {
  if (!opts || !key) {
    set_error("NULL argument");
    return WPB_ERR_INVALID;
  }
  const std::string k(key);
  wpb::EngineOpts& o = opts->o;
  if (k == "seed") o.seed = value;
  else if (k == "trials") o.trials = static_cast<int>(value);
  else if (k == "modes") o.modes = static_cast<int>(value);
  else if (k == "depth") o.depth = static_cast<int>(value);
  else if (k == "samples") o.samples = static_cast<int>(value);
  else if (k == "points") o.points = static_cast<int>(value);
  else if (k == "genus") o.genus = static_cast<int>(value);
  else if (k == "punctures") o.punctures = static_cast<int>(value);
  else if (k == "json") o.json = (value != 0);
  else {
    set_error("unknown u64 option key: " + k);
    return WPB_ERR_INVALID;
  }
  return WPB_OK;
}

wpb_status wpb_opts_set_f64(wpb_opts* opts, const char* key, double value) {
  if (!opts || !key) {
    set_error("NULL argument");
    return WPB_ERR_INVALID;
  }
  const std::string k(key);
  wpb::EngineOpts& o = opts->o;
  if (k == "rmin") o.rmin = value;
  else if (k == "rmax") o.rmax = value;
  else if (k == "Lmin") o.Lmin = value;
  else if (k == "Lmax") o.Lmax = value;
  else if (k == "L") o.L = value;
  else if (k == "systole") o.systole = value;
  else if (k == "tol") o.tol = value;
  else if (k == "eps") o.eps = value;
  else {
    set_error("unknown f64 option key: " + k);
    return WPB_ERR_INVALID;
  }
  return WPB_OK;
}

wpb_status wpb_opts_set_str(wpb_opts* opts, const char* key, const char* value) {
  if (!opts || !key || !value) {
    set_error("NULL argument");
    return WPB_ERR_INVALID;
  }
  const std::string k(key);
  wpb::EngineOpts& o = opts->o;
  if (k == "check") o.check = value;
  else if (k == "functions") o.functions = value;
  else if (k == "out") o.out = value;
  else if (k == "constraint") o.constraint = value;
  else {
    set_error("unknown string option key: " + k);
    return WPB_ERR_INVALID;
  }
  return WPB_OK;
}

wpb_status wpb_run(const char* subcommand, const wpb_opts* opts,
                   wpb_report** out_report) {
  if (!subcommand || !out_report) {
    set_error("NULL argument");
    return WPB_ERR_INVALID;
  }
  *out_report = nullptr;
  try {
    const wpb::EngineOpts o = opts ? opts->o : wpb::EngineOpts{};
    auto* rep = new wpb_report();
    rep->rr = wpb::run(subcommand, o);
    rep->json = rep->rr.report.to_json();
    rep->text = rep->rr.report.to_text();
    *out_report = rep;
    return WPB_OK;
  } catch (const wpb::UsageError& e) {
    set_error(e.what());
    return WPB_ERR_INVALID;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return WPB_ERR_DOMAIN;
  } catch (const std::invalid_argument& e) {
    set_error(e.what());
    return WPB_ERR_INVALID;
  } catch (const std::bad_alloc&) {
    set_error("out of memory");
    return WPB_ERR_NOMEM;
  } catch (const std::exception& e) {
    set_error(e.what());
    return WPB_ERR_INTERNAL;
  }
}

const char* wpb_report_json(const wpb_report* report) {
  return report ? report->json.c_str() : "";
}

const char* wpb_report_text(const wpb_report* report) {
  return report ? report->text.c_str() : "";
}

const char* wpb_report_payload(const wpb_report* report) {
  return report ? report->rr.payload.c_str() : "";
}

int wpb_report_exit_code(const wpb_report* report) {
  return report ? report->rr.exit_code : 2;
}

void wpb_report_free(wpb_report* report) { delete report; }

wpb_status wpb_eval_bound(const char* name, double r, double* out) {
  if (!name || !out) {
    set_error("NULL argument");
    return WPB_ERR_INVALID;
  }
  try {
    const std::string n(name);
    if (n == "C") *out = wpb::c_teo(r);
    else if (n == "F") *out = wpb::f_tail(r);
    else if (n == "twoF") *out = 2.0 * wpb::f_tail(r);
    else if (n == "G") *out = wpb::g_bound(r);
    else if (n == "H") *out = wpb::h_of_g(r);
    else if (n == "K") *out = wpb::k_cusp(r);
    else if (n == "m") *out = wpb::m_min(r);
    else if (n == "mprime") *out = wpb::m_prime_min(r);
    else if (n == "sqrtRC") *out = wpb::sqrt_r_c_teo(r);
    else if (n == "h_collar") *out = wpb::h_collar(r);
    else if (n == "s_collar") *out = wpb::s_collar(r);
    else if (n == "c0") *out = wpb::c0(r);
    else {
      set_error("unknown bound-function name: " + n);
      return WPB_ERR_INVALID;
    }
    return WPB_OK;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return WPB_ERR_DOMAIN;
  } catch (const std::exception& e) {
    set_error(e.what());
    return WPB_ERR_INTERNAL;
  }
}

wpb_status wpb_constant(const char* name, double* out) {
  if (!name || !out) {
    set_error("NULL argument");
    return WPB_ERR_INVALID;
  }
  const wpb::ClaimedConstants cc = wpb::claimed_constants();
  const std::string n(name);
  if (n == "eps2") *out = cc.eps2;
  else if (n == "eps2bar") *out = cc.eps2bar;
  else if (n == "m0") *out = cc.m0;
  else if (n == "mprime0") *out = cc.mprime0;
  else if (n == "K0") *out = cc.K0;
  else if (n == "C_eps2") *out = cc.c_eps2;
  else if (n == "C_eps2bar") *out = cc.c_eps2bar;
  else {
    set_error("unknown constant name: " + n);
    return WPB_ERR_INVALID;
  }
  return WPB_OK;
}

wpb_status wpb_delta_of_eps(double eps, double* out) {
  if (!out) {
    set_error("NULL argument");
    return WPB_ERR_INVALID;
  }
  try {
    *out = wpb::delta_of_eps(eps);
    return WPB_OK;
  } catch (const std::domain_error& e) {
    set_error(e.what());
    return WPB_ERR_DOMAIN;
  } catch (const std::exception& e) {
    set_error(e.what());
    return WPB_ERR_INTERNAL;
  }
}

}  // extern "C"
