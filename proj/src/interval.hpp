#pragma once

// Conservative interval arithmetic on double endpoints.
//
// Soundness model: every operation returns an interval that contains the
// exact mathematical image of its input interval(s).  Endpoint results are
// widened outward with std::nextafter — by ARITH_ULPS for IEEE arithmetic
// (correctly rounded, so 1 ulp per side is already generous) and by
// TRANS_ULPS for libm transcendentals (glibc keeps these within ~2 ulps of
// correctly rounded on the ranges used here; 4 ulps per side is a safety
// margin).  Monotone primitives are evaluated at the appropriate endpoints;
// the trigonometric primitives additionally hull any interior extrema.
//
// Inputs to a domain-restricted primitive are intersected with the closure
// of its natural domain before evaluation.  That is sound in this codebase
// because such inputs are themselves enclosures of quantities that lie in
// the domain by construction (e.g. tanh(x) < 1 feeding acos); a 4-ulp
// overshoot from a previous step must not trigger a spurious error.  Only
// an interval entirely outside the domain throws.
//
// No rounding-mode manipulation (fesetround) is used, so the arithmetic is
// thread-safe and compiler-friendly.  Certified results built on top of
// this module are independently re-validated by dense sampling in the test
// suite.

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace wpb {

inline constexpr int ARITH_ULPS = 1;
inline constexpr int TRANS_ULPS = 4;

inline constexpr double INF = std::numeric_limits<double>::infinity();

inline double nudge_up(double x, int ulps) {
  if (std::isinf(x)) return x;
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, INF);
  return x;
}

inline double nudge_dn(double x, int ulps) {
  if (std::isinf(x)) return x;
  for (int i = 0; i < ulps; ++i) x = std::nextafter(x, -INF);
  return x;
}

struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  Interval() = default;
  Interval(double a, double b) : lo(a), hi(b) {
    if (std::isnan(a) || std::isnan(b) || a > b)
      throw std::invalid_argument("Interval: bad endpoints");
  }

  static Interval point(double x) { return Interval(x, x); }

  double width() const { return hi - lo; }
  double mid() const {
    double m = 0.5 * (lo + hi);
    if (!std::isfinite(m)) m = 0.5 * lo + 0.5 * hi;
    return std::min(std::max(m, lo), hi);
  }
  bool contains(double x) const { return lo <= x && x <= hi; }
  bool contains(const Interval& o) const { return lo <= o.lo && o.hi <= hi; }
  bool is_point() const { return lo == hi; }
};

[[noreturn]] inline void interval_domain_fail(const std::string& what) {
  throw std::domain_error("interval: " + what);
}

inline Interval hull(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo, b.lo), std::max(a.hi, b.hi));
}

inline Interval operator+(const Interval& a, const Interval& b) {
  return Interval(nudge_dn(a.lo + b.lo, ARITH_ULPS), nudge_up(a.hi + b.hi, ARITH_ULPS));
}

inline Interval operator-(const Interval& a) { return Interval(-a.hi, -a.lo); }

inline Interval operator-(const Interval& a, const Interval& b) {
  return Interval(nudge_dn(a.lo - b.hi, ARITH_ULPS), nudge_up(a.hi - b.lo, ARITH_ULPS));
}

inline Interval operator*(const Interval& a, const Interval& b) {
  // A zero-point factor absorbs infinities: [0,0] * anything = [0,0].
  if ((a.lo == 0.0 && a.hi == 0.0) || (b.lo == 0.0 && b.hi == 0.0))
    return Interval(0.0, 0.0);
  const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo, p4 = a.hi * b.hi;
  double lo = std::min(std::min(p1, p2), std::min(p3, p4));
  double hi = std::max(std::max(p1, p2), std::max(p3, p4));
  if (std::isnan(lo) || std::isnan(hi)) interval_domain_fail("0*inf in multiply");
  return Interval(nudge_dn(lo, ARITH_ULPS), nudge_up(hi, ARITH_ULPS));
}

inline Interval operator/(const Interval& a, const Interval& b) {
  if (b.lo <= 0.0 && b.hi >= 0.0) interval_domain_fail("division by interval containing 0");
  const double p1 = a.lo / b.lo, p2 = a.lo / b.hi, p3 = a.hi / b.lo, p4 = a.hi / b.hi;
  double lo = std::min(std::min(p1, p2), std::min(p3, p4));
  double hi = std::max(std::max(p1, p2), std::max(p3, p4));
  if (std::isnan(lo) || std::isnan(hi)) interval_domain_fail("nan in divide");
  return Interval(nudge_dn(lo, ARITH_ULPS), nudge_up(hi, ARITH_ULPS));
}

inline Interval operator+(const Interval& a, double b) { return a + Interval::point(b); }
inline Interval operator+(double a, const Interval& b) { return Interval::point(a) + b; }
inline Interval operator-(const Interval& a, double b) { return a - Interval::point(b); }
inline Interval operator-(double a, const Interval& b) { return Interval::point(a) - b; }
inline Interval operator*(const Interval& a, double b) { return a * Interval::point(b); }
inline Interval operator*(double a, const Interval& b) { return Interval::point(a) * b; }
inline Interval operator/(const Interval& a, double b) { return a / Interval::point(b); }
inline Interval operator/(double a, const Interval& b) { return Interval::point(a) / b; }

inline Interval sqr(const Interval& a) {
  const double alo = std::fabs(a.lo), ahi = std::fabs(a.hi);
  const double big = std::max(alo, ahi);
  double lo = 0.0;
  if (a.lo > 0.0 || a.hi < 0.0) {
    const double small = std::min(alo, ahi);
    lo = nudge_dn(small * small, ARITH_ULPS);
    lo = std::max(lo, 0.0);
  }
  return Interval(lo, nudge_up(big * big, ARITH_ULPS));
}

inline Interval abs(const Interval& a) {
  if (a.lo >= 0.0) return a;
  if (a.hi <= 0.0) return Interval(-a.hi, -a.lo);
  return Interval(0.0, std::max(-a.lo, a.hi));
}

inline Interval min(const Interval& a, const Interval& b) {
  return Interval(std::min(a.lo, b.lo), std::min(a.hi, b.hi));
}

inline Interval max(const Interval& a, const Interval& b) {
  return Interval(std::max(a.lo, b.lo), std::max(a.hi, b.hi));
}

// ---- monotone transcendental helpers ----------------------------------

inline Interval sqrt(const Interval& a) {
  if (a.hi < 0.0) interval_domain_fail("sqrt of negative interval");
  const double lo_in = std::max(a.lo, 0.0);
  double lo = nudge_dn(std::sqrt(lo_in), TRANS_ULPS);
  double hi = nudge_up(std::sqrt(a.hi), TRANS_ULPS);
  return Interval(std::max(lo, 0.0), hi);
}

inline Interval exp(const Interval& a) {
  double lo = nudge_dn(std::exp(a.lo), TRANS_ULPS);
  double hi = nudge_up(std::exp(a.hi), TRANS_ULPS);
  return Interval(std::max(lo, 0.0), hi);
}

inline Interval log(const Interval& a) {
  if (a.hi <= 0.0) interval_domain_fail("log of non-positive interval");
  double lo = (a.lo <= 0.0) ? -INF : nudge_dn(std::log(a.lo), TRANS_ULPS);
  double hi = nudge_up(std::log(a.hi), TRANS_ULPS);
  return Interval(lo, hi);
}

inline Interval sinh(const Interval& a) {
  return Interval(nudge_dn(std::sinh(a.lo), TRANS_ULPS), nudge_up(std::sinh(a.hi), TRANS_ULPS));
}

inline Interval cosh(const Interval& a) {
  const double alo = std::fabs(a.lo), ahi = std::fabs(a.hi);
  const double big = std::max(alo, ahi);
  double hi = nudge_up(std::cosh(big), TRANS_ULPS);
  double lo;
  if (a.lo <= 0.0 && a.hi >= 0.0) {
    lo = 1.0;
  } else {
    const double small = std::min(alo, ahi);
    lo = std::max(nudge_dn(std::cosh(small), TRANS_ULPS), 1.0);
  }
  return Interval(lo, hi);
}

inline Interval tanh(const Interval& a) {
  double lo = std::max(nudge_dn(std::tanh(a.lo), TRANS_ULPS), -1.0);
  double hi = std::min(nudge_up(std::tanh(a.hi), TRANS_ULPS), 1.0);
  return Interval(lo, hi);
}

inline Interval asinh(const Interval& a) {
  return Interval(nudge_dn(std::asinh(a.lo), TRANS_ULPS), nudge_up(std::asinh(a.hi), TRANS_ULPS));
}

inline Interval atanh(const Interval& a) {
  if (a.lo >= 1.0 || a.hi <= -1.0) interval_domain_fail("atanh outside (-1,1)");
  double lo = (a.lo <= -1.0) ? -INF : nudge_dn(std::atanh(a.lo), TRANS_ULPS);
  double hi = (a.hi >= 1.0) ? INF : nudge_up(std::atanh(a.hi), TRANS_ULPS);
  return Interval(lo, hi);
}

inline Interval acos(const Interval& a) {
  if (a.lo > 1.0 || a.hi < -1.0) interval_domain_fail("acos outside [-1,1]");
  const double lo_in = std::max(a.lo, -1.0), hi_in = std::min(a.hi, 1.0);
  // acos is decreasing
  double lo = std::max(nudge_dn(std::acos(hi_in), TRANS_ULPS), 0.0);
  double hi = nudge_up(std::acos(lo_in), TRANS_ULPS);
  return Interval(lo, hi);
}

inline Interval ipi() {
  // M_PI is the nearest double to pi (pi is not representable); one ulp out
  // on each side is a strict enclosure.
  return Interval(nudge_dn(M_PI, 1), nudge_up(M_PI, 1));
}

// Enclosure of cos over [a.lo, a.hi]: hull of the (outward-rounded) endpoint
// values and of the exact extrema +-1 at any multiple of pi that may lie
// inside.  Uncertain extremum membership is resolved conservatively (include).
inline Interval cos(const Interval& a) {
  if (!(std::isfinite(a.lo) && std::isfinite(a.hi)))
    interval_domain_fail("cos of unbounded interval");
  if (a.width() >= 6.3) return Interval(-1.0, 1.0);
  const Interval pi_i = ipi();
  double lo = nudge_dn(std::min(std::cos(a.lo), std::cos(a.hi)), TRANS_ULPS);
  double hi = nudge_up(std::max(std::cos(a.lo), std::cos(a.hi)), TRANS_ULPS);
  const long k_min = static_cast<long>(std::floor(a.lo / M_PI)) - 1;
  const long k_max = static_cast<long>(std::ceil(a.hi / M_PI)) + 1;
  for (long k = k_min; k <= k_max; ++k) {
    const Interval kpi = pi_i * Interval::point(static_cast<double>(k));
    const bool may_intersect = (kpi.hi >= a.lo) && (kpi.lo <= a.hi);
    if (!may_intersect) continue;
    if ((k % 2) == 0) hi = 1.0; else lo = -1.0;
  }
  return Interval(std::max(lo, -1.0), std::min(hi, 1.0));
}

inline Interval sin(const Interval& a) {
  // sin(x) = cos(x - pi/2); the small widening from the pi/2 enclosure is
  // absorbed by cos's conservative extremum handling.
  const Interval half_pi = ipi() * Interval::point(0.5);
  return cos(a - half_pi);
}

inline Interval tan(const Interval& a) {
  const Interval pi_i = ipi();
  const double guard = 0.5 * pi_i.lo;
  if (!(a.lo > -guard && a.hi < guard))
    interval_domain_fail("tan outside (-pi/2, pi/2)");
  return Interval(nudge_dn(std::tan(a.lo), TRANS_ULPS), nudge_up(std::tan(a.hi), TRANS_ULPS));
}

inline Interval pow_int(const Interval& a, int n) {
  if (n < 0) return Interval::point(1.0) / pow_int(a, -n);
  // Odd factor first so even powers go through sqr (tight around 0); the first
  // factor is assigned, not multiplied into 1, so sqr's exact endpoints survive.
  Interval result = Interval::point(1.0);
  bool have = false;
  Interval base = a;
  int m = n;
  if (m % 2 == 1) { result = base; have = true; m -= 1; }
  while (m > 0) {
    base = sqr(base);
    m /= 2;
    if (m % 2 == 1) {
      result = have ? result * base : base;
      have = true;
      m -= 1;
    }
  }
  return result;
}

}  // namespace wpb
