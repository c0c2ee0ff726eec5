/* wpbounds: certified collar/cusp norm bounds for holomorphic quadratic
 * differentials on hyperbolic surfaces.
 *
 * C API over the C++ core: opaque handles, integer status codes, accessor
 * functions for rendered reports.  All strings returned by accessors are
 * owned by the handle they were read from and stay valid until that handle
 * is freed.  Handles are not thread-safe individually; distinct handles may
 * be used from distinct threads.
 */
#ifndef WPBOUNDS_H
#define WPBOUNDS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum wpb_status {
  WPB_OK = 0,
  WPB_ERR_DOMAIN = 1,       /* argument outside a function's mathematical domain */
  WPB_ERR_INVALID = 2,      /* malformed request: unknown name, bad range, NULL */
  WPB_ERR_INCONCLUSIVE = 3, /* reserved */
  WPB_ERR_NOMEM = 4,
  WPB_ERR_INTERNAL = 5
} wpb_status;

/* Library version string, e.g. "wpbounds 1.0.0". */
const char* wpb_version(void);

/* Thread-local message for the most recent failing call in this thread. */
const char* wpb_last_error(void);

/* ---- option bag -------------------------------------------------------- */

typedef struct wpb_opts wpb_opts;

wpb_opts* wpb_opts_new(void);
void wpb_opts_free(wpb_opts* opts);

/* Keys: "seed", "trials", "modes", "depth", "samples", "points", "genus",
 * "punctures", "json" (0/1). */
wpb_status wpb_opts_set_u64(wpb_opts* opts, const char* key, uint64_t value);
/* Keys: "rmin", "rmax", "Lmin", "Lmax", "L", "systole", "tol", "eps". */
wpb_status wpb_opts_set_f64(wpb_opts* opts, const char* key, double value);
/* Keys: "check", "functions", "out", "constraint". */
wpb_status wpb_opts_set_str(wpb_opts* opts, const char* key, const char* value);

/* ---- running subcommands ----------------------------------------------- */

typedef struct wpb_report wpb_report;

/* Subcommands: "constants", "certify", "verify-random", "plotdata",
 * "sharpness", "curvature", "delta".  `opts` may be NULL for all defaults.
 * On WPB_OK, *out_report owns the result and must be freed with
 * wpb_report_free. */
wpb_status wpb_run(const char* subcommand, const wpb_opts* opts,
                   wpb_report** out_report);

/* Deterministic JSON rendering of the check report (wall_time varies). */
const char* wpb_report_json(const wpb_report* report);
/* Human-readable table rendering. */
const char* wpb_report_text(const wpb_report* report);
/* What a CLI should print: JSON or text per the "json" option, or CSV for
 * the data-emitting subcommands (empty when an output file was written). */
const char* wpb_report_payload(const wpb_report* report);
/* Process exit code: 0 all certified, 1 any violation, 3 any inconclusive. */
int wpb_report_exit_code(const wpb_report* report);
void wpb_report_free(wpb_report* report);

/* ---- direct evaluators ------------------------------------------------- */

/* Names: "C", "F", "twoF", "G", "H", "K", "m", "mprime", "sqrtRC",
 * "h_collar", "s_collar", "c0".  Returns WPB_ERR_DOMAIN outside the
 * function's domain, WPB_ERR_INVALID for unknown names or NULL out. */
wpb_status wpb_eval_bound(const char* name, double r, double* out);

/* Names: "eps2", "eps2bar", "m0", "mprime0", "K0", "C_eps2", "C_eps2bar". */
wpb_status wpb_constant(const char* name, double* out);

/* Largest admissible core length for relative excess eps (capped at
 * 1/(2 pi)); WPB_ERR_DOMAIN when eps is out of range. */
wpb_status wpb_delta_of_eps(double eps, double* out);

#ifdef __cplusplus
}
#endif

#endif /* WPBOUNDS_H */
