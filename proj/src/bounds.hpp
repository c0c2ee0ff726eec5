#pragma once

// The scalar bound functions of the collar/cusp pointwise-norm estimates,
// in both double-precision point form and certified-enclosure form, plus
// the closed-form derivatives used by the monotonicity certifier.
//
// Notation (r, L > 0):
//   c_teo(r)    = (4*pi/3 * (1 - sech^6(r/2)))^(-1/2)
//   h_collar(L) = acos(tanh(L/2))            (collar half-angle)
//   s_collar(L) = 2*pi*h_collar(L)/L         (log-modulus half-extent)
//   c0(L)       = h + sin(2h)/2, h = h_collar(L)
//   f_tail(r)   = e^{pi*sqrt(3)} * c_teo(eps2bar) * e^{-pi/sinh r} / (3 sinh^2 r)
//   g_bound(r)  = 1/sqrt(2 r c0(2r)) + 2 f_tail(r)
//   h_of_g(r)   = g_bound(r) * sqrt(r)  (evaluated in cancellation-free form)
//   k_cusp(r)   = c_teo(eps2) * e^pi * e^{-pi/sinh r} / sinh^2 r
//   m_min       = min(h_of_g, sqrt(r) c_teo)     on (0, eps2bar]
//   m_prime_min = min(2 f_tail, c_teo)           on (0, eps2bar]
//
// The enclosure forms use the identity 1 - sech^6 = tanh^2 (1 + sech^2 +
// sech^4), which avoids catastrophic cancellation near 0 and keeps relative
// enclosure widths at the few-ulp level on the whole working range.

#include "interval.hpp"

namespace wpb {

// Reference values the certifier compares against (printed to four decimals
// in the source the claims come from; m0/mprime0 are claimed upper bounds
// for the two suprema, K0 = 2*m0^2 by definition).
struct ClaimedConstants {
  double eps2;
  double eps2bar;
  double m0;
  double mprime0;
  double K0;
  double c_eps2;
  double c_eps2bar;
};

ClaimedConstants claimed_constants();

double eps2();     // asinh(1)
double eps2bar();  // log(3)/2 = atanh(1/2)
Interval eps2_i();
Interval eps2bar_i();

// ---- point evaluations ------------------------------------------------
double c_teo(double r);
double h_collar(double L);
double s_collar(double L);
double c0(double L);
double f_tail(double r);
double g_bound(double r);
double h_of_g(double r);
double k_cusp(double r);
double sqrt_r_c_teo(double r);
double m_min(double r);
double m_prime_min(double r);

// Smallest r in (0, eps2bar] with h_of_g(r) = (1+eps)/sqrt(pi), scaled by
// 2/pi and capped at 1/(2*pi).  Throws std::domain_error when eps <= 0 or
// the target exceeds h_of_g(eps2bar).
double delta_of_eps(double eps);

// ---- certified enclosures ---------------------------------------------
Interval c_teo(const Interval& r);
Interval h_collar(const Interval& L);
Interval s_collar(const Interval& L);
Interval c0(const Interval& L);
Interval f_tail(const Interval& r);
Interval g_bound(const Interval& r);
Interval h_of_g(const Interval& r);
Interval k_cusp(const Interval& r);
Interval sqrt_r_c_teo(const Interval& r);
Interval m_min(const Interval& r);
Interval m_prime_min(const Interval& r);

// ---- derivative enclosures (monotonicity certificates) ----------------
Interval dc_teo(const Interval& r);      // < 0 on r > 0
Interval dh_collar(const Interval& L);   // = -1/(2 cosh(L/2))
Interval dc0(const Interval& L);         // = -tanh^2(L/2)/cosh(L/2)
Interval df_tail(const Interval& r);     // = f_tail cosh(r)(pi - 2 sinh r)/sinh^2 r
Interval dk_cusp(const Interval& r);
Interval dh_of_g(const Interval& r);     // sum of three sign-definite terms
Interval d_sqrt_r_c_teo(const Interval& r);

}  // namespace wpb
