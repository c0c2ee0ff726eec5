#include "curvature.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "bounds.hpp"

namespace wpb {

namespace {

constexpr double kPi = 3.14159265358979323846;

double k0() {
  return claimed_constants().K0;  // 2 * m0^2, assembled from the certified sup
}

bool thin(double systole) { return systole <= 2.0 * eps2(); }

}  // namespace

void validate(const CurvatureQuery& q) {
  if (q.genus < 0 || q.punctures < 0)
    throw std::invalid_argument("genus and puncture count must be nonnegative");
  if (3 * q.genus + q.punctures < 5)
    throw std::invalid_argument("surface type requires 3*genus + punctures >= 5");
  if (3 * q.genus - 3 + q.punctures < 1)
    throw std::invalid_argument("moduli dimension 3*genus - 3 + punctures must be >= 1");
  if (!(q.systole > 0.0) || !std::isfinite(q.systole))
    throw std::invalid_argument("systole must be positive and finite");
}

double ric_lower(const CurvatureQuery& q, RicMode mode) {
  validate(q);
  const double teo = -2.0 * c_teo(q.systole / 2.0) * c_teo(q.systole / 2.0);
  if (!thin(q.systole)) return teo;
  const double thin_bound =
      mode == RicMode::Rounded ? -4.0 / q.systole : -k0() * 2.0 / q.systole;
  return std::max(thin_bound, teo);
}

double sca_lower(const CurvatureQuery& q) {
  validate(q);
  const double dim = 3.0 * q.genus - 3.0 + q.punctures;
  bool have = false;
  double best = -std::numeric_limits<double>::infinity();
  if (thin(q.systole)) {
    best = std::max(best, -4.0 * dim / q.systole);
    have = true;
    if (q.punctures == 0) best = std::max(best, -11.0 * (q.genus - 1.0) / q.systole);
  }
  if (q.punctures == 0 && q.systole >= eps2()) {
    const double c2 = c_teo(eps2()) * c_teo(eps2());
    best = std::max(best, -(6.0 * q.genus - 6.0) * c2);
    have = true;
  }
  if (!have)
    throw std::domain_error(
        "no scalar-curvature estimate applies (punctured surface outside the thin regime)");
  return best;
}

double sca_upper(const CurvatureQuery& q) {
  validate(q);
  return -3.0 * (3.0 * q.genus - 2.0) / (4.0 * kPi);
}

double sec_lower(const CurvatureQuery& q) {
  validate(q);
  if (!thin(q.systole))
    throw std::domain_error("sectional lower bound is stated only for systole <= 2*eps2");
  return -4.0 / q.systole;
}

double sec_perp_lower() { return -4.0; }

Interval holk_envelope(double l4, double wp_norm) {
  if (!(wp_norm > 0.0)) throw std::domain_error("normalization requires a positive norm");
  if (!(l4 >= 0.0)) throw std::domain_error("quartic integral must be nonnegative");
  const double w2 = wp_norm * wp_norm;
  const double q = l4 / (w2 * w2);
  return Interval{-2.0 * q, -(2.0 / 3.0) * q};
}

double pointwise_density_bound(DensityRegion region, double systole) {
  if (!(systole > 0.0)) throw std::domain_error("systole must be positive");
  switch (region) {
    case DensityRegion::Thick:
    case DensityRegion::CuspThin:
      return c_teo(eps2()) * c_teo(eps2());
    case DensityRegion::CollarThin:
      if (!thin(systole))
        throw std::domain_error("collar-thin density bound requires systole <= 2*eps2");
      return k0() / systole;
  }
  throw std::invalid_argument("unknown density region");
}

double perp_sup_bound() { return std::sqrt(2.0); }

double systole_sup_bound(double systole) {
  if (!(systole > 0.0)) throw std::domain_error("systole must be positive");
  return std::sqrt(2.0 / std::min(2.0 * eps2(), systole));
}

CurvatureBounds assemble_bounds(const CurvatureQuery& q, RicMode mode) {
  validate(q);
  CurvatureBounds out;
  out.regime = thin(q.systole) ? "thin" : "thick";

  {
    const double teo = -2.0 * c_teo(q.systole / 2.0) * c_teo(q.systole / 2.0);
    ProvenancedBound b;
    b.value = ric_lower(q, mode);
    if (!thin(q.systole) || b.value == teo)
      b.source = "density estimate -2*C(l/2)^2";
    else
      b.source = mode == RicMode::Rounded ? "thin-part estimate -4/l"
                                          : "thin-part estimate -2*K0/l";
    out.ric_lo = b;
  }

  try {
    const double v = sca_lower(q);
    ProvenancedBound b;
    b.value = v;
    const double dim = 3.0 * q.genus - 3.0 + q.punctures;
    if (thin(q.systole) && v == -4.0 * dim / q.systole)
      b.source = "thin-part estimate -4*(3g-3+n)/l";
    else if (thin(q.systole) && q.punctures == 0 && v == -11.0 * (q.genus - 1.0) / q.systole)
      b.source = "closed-surface refinement -11*(g-1)/l";
    else
      b.source = "thick-part estimate -(6g-6)*C(eps2)^2";
    out.sca_lo = b;
  } catch (const std::domain_error&) {
    // no applicable scalar lower bound; leave empty
  }

  out.sca_hi = ProvenancedBound{sca_upper(q), "trace estimate -3*(3g-2)/(4*pi)"};

  if (thin(q.systole))
    out.sec_lo = ProvenancedBound{sec_lower(q), "thin-part estimate -4/l"};

  out.sec_perp_lo =
      ProvenancedBound{sec_perp_lower(), "gradient-orthogonal estimate -4"};
  return out;
}

}  // namespace wpb
