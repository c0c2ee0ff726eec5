#include "bounds.hpp"

#include <cmath>
#include <stdexcept>

namespace wpb {

namespace {

void require_positive(double x, const char* who) {
  if (!(x > 0.0) || !std::isfinite(x))
    throw std::domain_error(std::string(who) + ": argument must be positive and finite");
}

// 1 - sech^6(r/2) in cancellation-free form.
double big_t(double r) {
  const double s = 1.0 / std::cosh(0.5 * r);
  const double s2 = s * s;
  const double th = std::tanh(0.5 * r);
  return th * th * (1.0 + s2 + s2 * s2);
}

Interval big_t(const Interval& r) {
  const Interval s = 1.0 / cosh(r * 0.5);
  const Interval s2 = sqr(s);
  return sqr(tanh(r * 0.5)) * (1.0 + s2 + sqr(s2));
}

// e^{pi sqrt(3)} * c_teo(eps2bar) / 3, the prefactor of f_tail.
double f_tail_prefactor() {
  static const double value = std::exp(M_PI * std::sqrt(3.0)) * c_teo(eps2bar()) / 3.0;
  return value;
}

const Interval& f_tail_prefactor_i() {
  static const Interval value = exp(ipi() * sqrt(Interval::point(3.0))) * c_teo(eps2bar_i()) / 3.0;
  return value;
}

// c_teo(eps2) * e^pi, the prefactor of k_cusp.
double k_cusp_prefactor() {
  static const double value = c_teo(eps2()) * std::exp(M_PI);
  return value;
}

const Interval& k_cusp_prefactor_i() {
  static const Interval value = c_teo(eps2_i()) * exp(ipi());
  return value;
}

// Loose upper slack so enclosure endpoints a few ulps past eps2bar still
// count as inside the (0, eps2bar] contract domain.
double m_domain_hi() { return nudge_up(eps2bar(), 16); }

}  // namespace

ClaimedConstants claimed_constants() {
  return ClaimedConstants{
      eps2(), eps2bar(), 0.9137, 1.2333, 2.0 * 0.9137 * 0.9137, 0.7439, 1.0917,
  };
}

double eps2() { return std::asinh(1.0); }
double eps2bar() { return 0.5 * std::log(3.0); }

Interval eps2_i() { return asinh(Interval::point(1.0)); }
Interval eps2bar_i() { return log(Interval::point(3.0)) * 0.5; }

// ---- point evaluations ------------------------------------------------

double c_teo(double r) {
  require_positive(r, "c_teo");
  return 1.0 / std::sqrt(4.0 * M_PI / 3.0 * big_t(r));
}

double h_collar(double L) {
  require_positive(L, "h_collar");
  return std::acos(std::tanh(0.5 * L));
}

double s_collar(double L) {
  require_positive(L, "s_collar");
  return 2.0 * M_PI * h_collar(L) / L;
}

double c0(double L) {
  require_positive(L, "c0");
  const double h = h_collar(L);
  return h + 0.5 * std::sin(2.0 * h);
}

double f_tail(double r) {
  require_positive(r, "f_tail");
  const double sh = std::sinh(r);
  return f_tail_prefactor() * std::exp(-M_PI / sh) / (sh * sh);
}

double g_bound(double r) {
  require_positive(r, "g_bound");
  return 1.0 / std::sqrt(2.0 * r * c0(2.0 * r)) + 2.0 * f_tail(r);
}

double h_of_g(double r) {
  require_positive(r, "h_of_g");
  return 1.0 / std::sqrt(2.0 * c0(2.0 * r)) + 2.0 * f_tail(r) * std::sqrt(r);
}

double k_cusp(double r) {
  require_positive(r, "k_cusp");
  const double sh = std::sinh(r);
  return k_cusp_prefactor() * std::exp(-M_PI / sh) / (sh * sh);
}

double sqrt_r_c_teo(double r) {
  require_positive(r, "sqrt_r_c_teo");
  return std::sqrt(r) * c_teo(r);
}

double m_min(double r) {
  require_positive(r, "m_min");
  if (r > m_domain_hi()) throw std::domain_error("m_min: r beyond eps2bar");
  return std::min(h_of_g(r), sqrt_r_c_teo(r));
}

double m_prime_min(double r) {
  require_positive(r, "m_prime_min");
  if (r > m_domain_hi()) throw std::domain_error("m_prime_min: r beyond eps2bar");
  return std::min(2.0 * f_tail(r), c_teo(r));
}

double delta_of_eps(double eps) {
  require_positive(eps, "delta_of_eps");
  const double target = (1.0 + eps) / std::sqrt(M_PI);
  double lo = 1e-14, hi = eps2bar();
  if (h_of_g(hi) < target)
    throw std::domain_error("delta_of_eps: eps too large, no root in (0, eps2bar]");
  // h_of_g is strictly increasing (certified separately); plain bisection.
  for (int i = 0; i < 200 && (hi - lo) > 0.0; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (h_of_g(mid) < target) lo = mid; else hi = mid;
  }
  const double root = 0.5 * (lo + hi);
  return std::min(2.0 / M_PI * root, 1.0 / (2.0 * M_PI));
}

// ---- certified enclosures ---------------------------------------------

Interval c_teo(const Interval& r) {
  if (!(r.lo > 0.0)) interval_domain_fail("c_teo needs r > 0");
  return 1.0 / sqrt(ipi() * (4.0 / 3.0) * big_t(r));
}

Interval h_collar(const Interval& L) {
  if (!(L.lo > 0.0)) interval_domain_fail("h_collar needs L > 0");
  return acos(tanh(L * 0.5));
}

Interval s_collar(const Interval& L) {
  return ipi() * 2.0 * h_collar(L) / L;
}

Interval c0(const Interval& L) {
  const Interval h = h_collar(L);
  return h + sin(h * 2.0) * 0.5;
}

Interval f_tail(const Interval& r) {
  if (!(r.lo > 0.0)) interval_domain_fail("f_tail needs r > 0");
  const Interval sh = sinh(r);
  return f_tail_prefactor_i() * exp(-(ipi() / sh)) / sqr(sh);
}

Interval g_bound(const Interval& r) {
  if (!(r.lo > 0.0)) interval_domain_fail("g_bound needs r > 0");
  return 1.0 / sqrt(r * c0(r * 2.0) * 2.0) + f_tail(r) * 2.0;
}

Interval h_of_g(const Interval& r) {
  if (!(r.lo > 0.0)) interval_domain_fail("h_of_g needs r > 0");
  return 1.0 / sqrt(c0(r * 2.0) * 2.0) + f_tail(r) * sqrt(r) * 2.0;
}

Interval k_cusp(const Interval& r) {
  if (!(r.lo > 0.0)) interval_domain_fail("k_cusp needs r > 0");
  const Interval sh = sinh(r);
  return k_cusp_prefactor_i() * exp(-(ipi() / sh)) / sqr(sh);
}

Interval sqrt_r_c_teo(const Interval& r) {
  return sqrt(r) * c_teo(r);
}

Interval m_min(const Interval& r) {
  if (!(r.lo > 0.0)) interval_domain_fail("m_min needs r > 0");
  if (r.hi > m_domain_hi()) interval_domain_fail("m_min: r beyond eps2bar");
  return min(h_of_g(r), sqrt_r_c_teo(r));
}

Interval m_prime_min(const Interval& r) {
  if (!(r.lo > 0.0)) interval_domain_fail("m_prime_min needs r > 0");
  if (r.hi > m_domain_hi()) interval_domain_fail("m_prime_min: r beyond eps2bar");
  return min(f_tail(r) * 2.0, c_teo(r));
}

// ---- derivative enclosures --------------------------------------------

Interval dc_teo(const Interval& r) {
  const Interval s2 = sqr(1.0 / cosh(r * 0.5));
  const Interval s6 = s2 * sqr(s2);
  return -(c_teo(r) * 1.5 * s6 * tanh(r * 0.5) / big_t(r));
}

Interval dh_collar(const Interval& L) {
  return -(1.0 / (cosh(L * 0.5) * 2.0));
}

Interval dc0(const Interval& L) {
  return -(sqr(tanh(L * 0.5)) / cosh(L * 0.5));
}

Interval df_tail(const Interval& r) {
  const Interval sh = sinh(r);
  return f_tail(r) * cosh(r) * (ipi() - sh * 2.0) / sqr(sh);
}

Interval dk_cusp(const Interval& r) {
  const Interval sh = sinh(r);
  return k_cusp(r) * cosh(r) * (ipi() - sh * 2.0) / sqr(sh);
}

Interval dh_of_g(const Interval& r) {
  // d/dr [ (2 c0(2r))^{-1/2} ] = -2 c0'(2r) (2 c0(2r))^{-3/2}
  //                            = 2 tanh^2(r)/cosh(r) * (2 c0(2r))^{-3/2},
  // written so the enclosure of each term keeps its sign on (0, eps2bar].
  const Interval two_c0 = c0(r * 2.0) * 2.0;
  const Interval term1 = (sqr(tanh(r)) / cosh(r)) * 2.0 / (two_c0 * sqrt(two_c0));
  const Interval sr = sqrt(r);
  const Interval term2 = df_tail(r) * sr * 2.0;
  const Interval term3 = f_tail(r) / sr;
  return term1 + term2 + term3;
}

Interval d_sqrt_r_c_teo(const Interval& r) {
  // d/dr [ sqrt(r) c_teo(r) ] = (c_teo/(2 sqrt r)) * (1 - 3 r sech^6(r/2) /
  // (tanh(r/2) (1 + sech^2 + sech^4))); the second factor's enclosure is
  // sign-definite on (0, eps2] (it stays below -1 + margin there).
  const Interval s2 = sqr(1.0 / cosh(r * 0.5));
  const Interval s6 = s2 * sqr(s2);
  const Interval factor = 1.0 - (r * 3.0 * s6) / (tanh(r * 0.5) * (1.0 + s2 + sqr(s2)));
  return (c_teo(r) / (sqrt(r) * 2.0)) * factor;
}

}  // namespace wpb
