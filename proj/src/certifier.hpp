#pragma once

// Branch-and-bound certification of one-dimensional analytic claims
// (sup bounds, monotonicity, constancy, pointwise inequalities) from
// conservative interval enclosures.  Every "Certified" answer is backed by a
// finite cover of the domain whose enclosures discharge the claim; every
// "Violated" answer carries a point witness whose enclosure refutes it.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "interval.hpp"

namespace wpb {

using IFunc = std::function<Interval(const Interval&)>;

enum class CertStatus { Certified, Violated, Inconclusive };

const char* to_string(CertStatus s);

struct CertResult {
  CertStatus status = CertStatus::Inconclusive;
  // Enclosure of the certified quantity: the sup for certify_sup, the worst
  // margin for inequalities, the value hull for constancy.
  Interval achieved{0.0, 0.0};
  double witness_r = 0.0;  // refuting point when status == Violated
  bool has_witness = false;
  std::int64_t cells = 0;
  int max_depth_reached = 0;
  std::string note;
};

struct CertOpts {
  double width_target = 1e-4;  // sup-enclosure tightening goal
  int max_depth = 42;
  std::int64_t max_cells = 4'000'000;
};

// Is sup_{r in dom} f(r) <= bound?  The claim is discharged cellwise against
// bound.hi, so a bound given as an outward enclosure of an exact constant
// admits certification even when the sup touches the constant itself.
CertResult certify_sup(const IFunc& f, const Interval& dom, const Interval& bound,
                       const CertOpts& opts = {});

enum class Direction { Increasing, Decreasing };

// Strict monotonicity on dom.  When a derivative enclosure is supplied the
// certificate is a sign-definite derivative cover (exact); without one an
// increasing-staircase certificate at finite resolution is attempted and the
// weaker semantics are recorded in `note`.
CertResult certify_monotone(const IFunc& f, const IFunc& df, const Interval& dom,
                            Direction dir, const CertOpts& opts = {});

// |f - p| <= tol everywhere on dom?
CertResult certify_constant(const IFunc& f, const Interval& dom, double p, double tol,
                            const CertOpts& opts = {});

// lhs(r) <= rhs(r) everywhere on dom?
CertResult check_inequality_pair(const IFunc& lhs, const IFunc& rhs, const Interval& dom,
                                 const CertOpts& opts = {});

struct MonotoneSegment {
  double lo = 0.0, hi = 0.0;
  int sign = 0;  // +1 certified increasing, -1 certified decreasing, 0 unresolved
};

// Partition dom into maximal runs of certified derivative sign.
std::vector<MonotoneSegment> discover_monotone(const IFunc& df, const Interval& dom,
                                               int max_depth = 24);

}  // namespace wpb
