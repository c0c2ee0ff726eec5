#pragma once

// Model geometry of the two standard thin domains:
//
//  * the collar annulus around a closed geodesic of length L, carrying the
//    hyperbolic density rho(z) = (L/2pi) / (|z| cos t), t = (L/2pi) log|z|,
//    with the collar proper cut off at |t| <= h_collar(L) inside the larger
//    ambient annulus |t| < pi/2;
//  * the maximal cusp region 0 < |z| < e^{-pi} of the punctured disk with
//    density rho(z) = -1/(|z| log|z|).
//
// Points are stored in (log-modulus, argument) coordinates: |z| underflows
// any fixed-precision float already for moderate parameters (e^{-pi^2/L}),
// while log|z| stays harmless.

#include <stdexcept>

namespace wpb {

struct CollarGeometry {
  // Validates 0 < L <= 2*eps2 (the standing hypothesis for every certified
  // statement).  The permissive flag extends the constructor domain a bit
  // past 2*eps2 for exploration; nothing evaluated there is certified.
  explicit CollarGeometry(double core_length, bool permissive = false);

  double L;
  bool permissive;

  double h() const;               // collar half-angle, h_collar(L)
  double s() const;               // collar log-modulus half-extent, s_collar(L)
  double ambient_extent() const;  // annulus log-modulus half-extent, pi^2/L
  double half_width() const;      // asinh(1/sinh(L/2)), collar half-width
  double boundary_inj() const;    // asinh(cosh(L/2)), injectivity radius at the boundary
  double area() const;            // hyperbolic area of the collar, 2L/sinh(L/2)
};

struct CuspGeometry {
  // The maximal cusp region {0 < |z| < e^{-pi}}; no parameters.
};

struct CollarPoint {
  double log_modulus = 0.0;  // log|z|, sign selects the side of the core
  double argument = 0.0;     // arg z in [0, 2pi)
};

// Hyperbolic metric density of the annulus model at p; p must lie in the
// collar proper (|log_modulus| <= s(L)).
double collar_metric_density(const CollarGeometry& geom, const CollarPoint& p);

// Injectivity radius sinh(r) = sinh(L/2)/cos((L/2pi) log|z|) at p in the
// collar proper.
double inj_collar(const CollarGeometry& geom, const CollarPoint& p);

// Injectivity radius asinh(-pi/log|z|) in the maximal cusp (log|z| < -pi).
double inj_cusp(double log_modulus);

// Density -1/(|z| log|z|) on the punctured disk (log|z| < 0).
double cusp_metric_density(double log_modulus);

// Distance d >= 0 from the point of injectivity radius r to the collar
// boundary: solves sinh(r) = cosh(L/2) cosh(d) - sinh(d) by bisection on
// [0, half_width] (the right side is strictly decreasing there), absolute
// tolerance 1e-12, at most 200 iterations.  Requires L/2 <= r <=
// boundary_inj(); exact at both endpoints (d = half_width on the core,
// d = 0 at the boundary).
double dist_to_collar_boundary(const CollarGeometry& geom, double r);

}  // namespace wpb
