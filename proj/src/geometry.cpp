#include "geometry.hpp"

#include <cmath>
#include <string>

#include "bounds.hpp"

namespace wpb {

namespace {

// Slack so computed boundary values (e.g. log_modulus = s(L) produced by a
// caller from the same formulas) are not rejected for a few ulps.
constexpr double EDGE_SLACK = 1e-12;

void require_in_collar(const CollarGeometry& geom, const CollarPoint& p, const char* who) {
  const double s = geom.s();
  if (!std::isfinite(p.log_modulus) || std::fabs(p.log_modulus) > s * (1.0 + EDGE_SLACK))
    throw std::domain_error(std::string(who) + ": point outside the collar annulus");
}

}  // namespace

CollarGeometry::CollarGeometry(double core_length, bool permissive_)
    : L(core_length), permissive(permissive_) {
  if (!(L > 0.0) || !std::isfinite(L))
    throw std::domain_error("CollarGeometry: core length must be positive and finite");
  const double cap = permissive ? 2.0 * eps2() + 0.5 : 2.0 * eps2() * (1.0 + EDGE_SLACK);
  if (L > cap)
    throw std::domain_error("CollarGeometry: core length exceeds 2*eps2 hypothesis");
}

double CollarGeometry::h() const { return h_collar(L); }
double CollarGeometry::s() const { return s_collar(L); }
double CollarGeometry::ambient_extent() const { return M_PI * M_PI / L; }
double CollarGeometry::half_width() const { return std::asinh(1.0 / std::sinh(0.5 * L)); }
double CollarGeometry::boundary_inj() const { return std::asinh(std::cosh(0.5 * L)); }
double CollarGeometry::area() const { return 2.0 * L / std::sinh(0.5 * L); }

double collar_metric_density(const CollarGeometry& geom, const CollarPoint& p) {
  require_in_collar(geom, p, "collar_metric_density");
  const double t = geom.L / (2.0 * M_PI) * p.log_modulus;
  return geom.L / (2.0 * M_PI) / (std::exp(p.log_modulus) * std::cos(t));
}

double inj_collar(const CollarGeometry& geom, const CollarPoint& p) {
  require_in_collar(geom, p, "inj_collar");
  const double t = geom.L / (2.0 * M_PI) * p.log_modulus;
  return std::asinh(std::sinh(0.5 * geom.L) / std::cos(t));
}

double inj_cusp(double log_modulus) {
  if (!(log_modulus < -M_PI))
    throw std::domain_error("inj_cusp: point outside the maximal cusp (needs log|z| < -pi)");
  return std::asinh(-M_PI / log_modulus);
}

double cusp_metric_density(double log_modulus) {
  if (!(log_modulus < 0.0))
    throw std::domain_error("cusp_metric_density: needs log|z| < 0");
  return -1.0 / (std::exp(log_modulus) * log_modulus);
}

double dist_to_collar_boundary(const CollarGeometry& geom, double r) {
  const double r_lo = 0.5 * geom.L, r_hi = geom.boundary_inj();
  if (!(r >= r_lo * (1.0 - EDGE_SLACK)) || !(r <= r_hi * (1.0 + EDGE_SLACK)))
    throw std::domain_error("dist_to_collar_boundary: r outside [L/2, boundary_inj]");
  const double rc = std::min(std::max(r, r_lo), r_hi);
  // Exact solutions at the bracket ends (core and boundary).  Short-circuiting
  // them also sidesteps the flat spot of g below: g has its stationary point at
  // d = half_width, where a sign test resolves only ~sqrt(eps) of the root.
  if (rc <= r_lo) return geom.half_width();
  if (rc >= r_hi) return 0.0;
  const double target = std::sinh(rc);
  const double ch = std::cosh(0.5 * geom.L);
  // g(d) = cosh(L/2) cosh d - sinh d decreases from cosh(L/2) at d = 0 to
  // sinh(L/2) at d = half_width (its stationary point is exactly there).
  double lo = 0.0, hi = geom.half_width();
  for (int i = 0; i < 200 && (hi - lo) > 1e-12; ++i) {
    const double mid = 0.5 * (lo + hi);
    const double g = ch * std::cosh(mid) - std::sinh(mid);
    if (g >= target) lo = mid; else hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace wpb
