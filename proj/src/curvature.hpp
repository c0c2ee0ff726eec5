#pragma once

// Weil-Petersson curvature bound assembly for a (genus, punctures, systole)
// query: Ricci / scalar / sectional lower bounds, the scalar upper bound,
// pointwise density bounds, and the holomorphic-curvature envelope.  Every
// query returns the tightest applicable inequality and records which source
// estimate supplied it.

#include <optional>
#include <string>

#include "interval.hpp"

namespace wpb {

struct CurvatureQuery {
  int genus = 0;
  int punctures = 0;
  double systole = 0.0;
};

// Standing hypotheses: 3g + n >= 5, moduli dimension 3g - 3 + n >= 1,
// systole > 0.  Throws std::invalid_argument otherwise.
void validate(const CurvatureQuery& q);

enum class RicMode { Rounded, Sharp };
enum class DensityRegion { Thick, CuspThin, CollarThin };

struct ProvenancedBound {
  double value = 0.0;
  std::string source;  // which inequality supplied the winning value
};

struct CurvatureBounds {
  std::optional<ProvenancedBound> ric_lo;   // always present in practice
  std::optional<ProvenancedBound> sca_lo;   // absent if no estimate applies
  std::optional<ProvenancedBound> sec_lo;   // absent for systole > 2*eps2
  ProvenancedBound sca_hi;
  ProvenancedBound sec_perp_lo;
  std::string regime;  // "thin" (systole <= 2*eps2) or "thick"
};

// Ricci lower bound: max of the thin-part estimate (-4/l rounded, -2*K0/l
// sharp; requires l <= 2*eps2) and the unconditional density estimate
// -2*C(l/2)^2.
double ric_lower(const CurvatureQuery& q, RicMode mode);

// Scalar curvature lower bound: max of the applicable estimates
//   thin (l <= 2*eps2):            -4(3g-3+n)/l
//   thin, closed surfaces (n = 0): -11(g-1)/l
//   thick (l >= eps2, n = 0):      -(6g-6) C(eps2)^2
// Throws std::domain_error when none applies.
double sca_lower(const CurvatureQuery& q);

// Scalar curvature upper bound -3(3g-2)/(4*pi).
double sca_upper(const CurvatureQuery& q);

// Sectional curvature lower bound -4/l; stated only for l <= 2*eps2
// (throws std::domain_error beyond).
double sec_lower(const CurvatureQuery& q);

// Sectional curvature lower bound -4 in directions orthogonal to the
// short-geodesic gradient, with no systole hypothesis.
double sec_perp_lower();

// Holomorphic-curvature envelope [-2*q, -(2/3)*q] with q the quartic
// integral normalized by wp_norm^4.  Throws std::domain_error for
// wp_norm <= 0 or l4 < 0.
Interval holk_envelope(double l4, double wp_norm);

// Pointwise bound on the summed squared density of an orthonormal basis:
// C(eps2)^2 on the thick part and cusp-thin part, K0/l on collar-thin parts
// (requires l <= 2*eps2).
double pointwise_density_bound(DensityRegion region, double systole);

// Sup-norm controls: sqrt(2) for zero-mean (perpendicular) differentials,
// sqrt(2/min(2*eps2, l)) in terms of the systole.
double perp_sup_bound();
double systole_sup_bound(double systole);

// Full assembly for reporting: each bound present iff its hypotheses hold.
CurvatureBounds assemble_bounds(const CurvatureQuery& q, RicMode mode);

}  // namespace wpb
