#include "laurent.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bounds.hpp"
#include "quadrature.hpp"

namespace wpb {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kTwoPi = 6.28318530717958647692;
const double kNegInf = -std::numeric_limits<double>::infinity();

// Half-extent in the angular coordinate t for the collar-family regions.
double region_half_extent(double L, const RegionSpec& region) {
  switch (region.kind) {
    case RegionSpec::CollarFull:
      return h_collar(L);
    case RegionSpec::CollarSub:
      if (!(region.t_extent > 0.0) || !(region.t_extent <= kPi / 2 * (1 + 1e-12)))
        throw std::invalid_argument("sub-collar extent must lie in (0, pi/2]");
      return std::min(region.t_extent, kPi / 2);
    case RegionSpec::Ambient:
      return kPi / 2;
    default:
      throw std::invalid_argument("cusp region paired with a collar domain");
  }
}

// Outer log-modulus cutoff beta for the cusp-family regions (|z| < e^{-beta}).
double cusp_region_beta(const RegionSpec& region) {
  switch (region.kind) {
    case RegionSpec::CuspMax:
      return kPi;
    case RegionSpec::CuspDisk:
      return 0.0;
    default:
      throw std::invalid_argument("collar region paired with a cusp domain");
  }
}

double log_sum_exp(const std::vector<double>& xs) {
  double m = kNegInf;
  for (double x : xs) m = std::max(m, x);
  if (!std::isfinite(m)) return m;  // empty or all -inf
  double s = 0.0;
  for (double x : xs) s += std::exp(x - m);
  return m + std::log(s);
}

// Physical Laurent sum f(z) = sum_n a_n z^n at log|z| = u, arg z = theta,
// with each term formed as c_hat_n e^{n u - log w_ref(n)/2}.  The shifted
// exponent stays below ~pi*n + O(log n) over the whole ambient annulus
// (resp. punctured disk), so the terms never overflow for |n| <= 64.
std::complex<double> eval_f(const LaurentQD& phi, double u, double theta) {
  std::complex<double> acc{0.0, 0.0};
  for (int n = phi.n_min(); n <= phi.n_max(); ++n) {
    const std::complex<double> c = phi.unit_coeff(n);
    if (c.real() == 0.0 && c.imag() == 0.0) continue;
    const double mag = std::exp(n * u - 0.5 * phi.log_ref_weight(n));
    const double ang = n * theta;
    acc += c * std::complex<double>(mag * std::cos(ang), mag * std::sin(ang));
  }
  return acc;
}

}  // namespace

// ---- domains -----------------------------------------------------------

QDomain QDomain::collar(double L) {
  if (!(L > 0.0) || !std::isfinite(L))
    throw std::domain_error("collar core length must be positive and finite");
  QDomain d;
  d.is_collar = true;
  d.L = L;
  return d;
}

QDomain QDomain::cusp() {
  QDomain d;
  d.is_collar = false;
  d.L = 0.0;
  return d;
}

// ---- mode weights ------------------------------------------------------

double log_cos2_exp_integral(double a, double h) {
  if (!(a >= 0.0) || !(h > 0.0) || !(h <= kPi / 2 * (1 + 1e-12)))
    throw std::domain_error("cos^2-weighted integral needs a >= 0, 0 < h <= pi/2");
  h = std::min(h, kPi / 2);
  if (a == 0.0) return std::log(h + 0.5 * std::sin(2.0 * h));
  // I(a, h) = e^{ah} [ (1-e^{-2ah})(a^2 cos^2 h + 2)/(a(a^2+4))
  //                   + (1+e^{-2ah}) sin(2h)/(a^2+4) ]
  // Both bracket terms are nonnegative for h <= pi/2: no cancellation.
  const double c = std::cos(h);
  const double q = a * a + 4.0;
  const double em = std::exp(-2.0 * a * h);
  const double bracket =
      (1.0 - em) * (a * a * c * c + 2.0) / (a * q) + std::sin(2.0 * h) * (1.0 + em) / q;
  return a * h + std::log(bracket);
}

double log_mode_weight(const QDomain& domain, int n, const RegionSpec& region) {
  if (domain.is_collar) {
    const double L = domain.L;
    const double h = region_half_extent(L, region);
    const double a = 4.0 * kPi * std::abs(n) / L;
    return std::log(kTwoPi) + 3.0 * std::log(kTwoPi / L) + log_cos2_exp_integral(a, h);
  }
  if (n < 1) throw std::domain_error("cusp modes start at n = 1");
  const double beta = cusp_region_beta(region);
  const double nn = n;
  const double poly =
      beta * beta / (2.0 * nn) + beta / (2.0 * nn * nn) + 1.0 / (4.0 * nn * nn * nn);
  return std::log(kTwoPi) - 2.0 * nn * beta + std::log(poly);
}

ModeWeight mode_weight(const QDomain& domain, int n, const RegionSpec& region) {
  ModeWeight w;
  w.n = n;
  w.log_weight = log_mode_weight(domain, n, region);
  w.weight = std::exp(w.log_weight);  // +inf for very heavy modes, by design
  return w;
}

// ---- LaurentQD ---------------------------------------------------------

LaurentQD LaurentQD::collar(double L, int n_min, int n_max) {
  const QDomain d = QDomain::collar(L);
  if (n_min > n_max || std::abs(n_min) > kMaxModes || std::abs(n_max) > kMaxModes)
    throw std::invalid_argument("collar mode range must satisfy -64 <= n_min <= n_max <= 64");
  LaurentQD qd;
  qd.domain_ = d;
  qd.n_min_ = n_min;
  qd.n_max_ = n_max;
  qd.unit_.assign(static_cast<std::size_t>(n_max - n_min + 1), {0.0, 0.0});
  qd.log_w_ref_.resize(qd.unit_.size());
  const RegionSpec ref = RegionSpec::collar();
  for (int n = n_min; n <= n_max; ++n)
    qd.log_w_ref_[static_cast<std::size_t>(n - n_min)] = log_mode_weight(d, n, ref);
  return qd;
}

LaurentQD LaurentQD::cusp(int n_max) {
  if (n_max < 1 || n_max > kMaxModes)
    throw std::invalid_argument("cusp mode count must satisfy 1 <= n_max <= 64");
  LaurentQD qd;
  qd.domain_ = QDomain::cusp();
  qd.n_min_ = 1;
  qd.n_max_ = n_max;
  qd.unit_.assign(static_cast<std::size_t>(n_max), {0.0, 0.0});
  qd.log_w_ref_.resize(qd.unit_.size());
  const RegionSpec ref = RegionSpec::cusp_max();
  for (int n = 1; n <= n_max; ++n)
    qd.log_w_ref_[static_cast<std::size_t>(n - 1)] = log_mode_weight(qd.domain_, n, ref);
  return qd;
}

double LaurentQD::L() const {
  if (!domain_.is_collar) throw std::logic_error("cusp differential has no core length");
  return domain_.L;
}

std::complex<double> LaurentQD::unit_coeff(int n) const {
  if (!in_mode_range(n)) return {0.0, 0.0};
  return unit_[static_cast<std::size_t>(n - n_min_)];
}

void LaurentQD::set_unit_coeff(int n, std::complex<double> c) {
  if (!in_mode_range(n)) throw std::out_of_range("mode outside the differential's range");
  unit_[static_cast<std::size_t>(n - n_min_)] = c;
}

std::complex<double> LaurentQD::coeff(int n) const {
  if (!in_mode_range(n)) return {0.0, 0.0};
  return unit_coeff(n) * std::exp(-0.5 * log_ref_weight(n));
}

void LaurentQD::set_coeff(int n, std::complex<double> a) {
  if (!in_mode_range(n)) throw std::out_of_range("mode outside the differential's range");
  unit_[static_cast<std::size_t>(n - n_min_)] = a * std::exp(0.5 * log_ref_weight(n));
}

double LaurentQD::log_ref_weight(int n) const {
  if (!in_mode_range(n)) throw std::out_of_range("mode outside the differential's range");
  return log_w_ref_[static_cast<std::size_t>(n - n_min_)];
}

RegionSpec LaurentQD::reference_region() const {
  return domain_.is_collar ? RegionSpec::collar() : RegionSpec::cusp_max();
}

// ---- sampling ----------------------------------------------------------

LaurentQD sample_random(const QDomain& domain, int n_modes, TrialRng& rng) {
  if (domain.is_collar) {
    LaurentQD qd = LaurentQD::collar(domain.L, -n_modes, n_modes);
    for (int n = -n_modes; n <= n_modes; ++n) qd.set_unit_coeff(n, rng.complex_gaussian());
    return qd;
  }
  LaurentQD qd = LaurentQD::cusp(n_modes);
  for (int n = 1; n <= n_modes; ++n) qd.set_unit_coeff(n, rng.complex_gaussian());
  return qd;
}

// ---- mode splits -------------------------------------------------------

void decompose(const LaurentQD& phi, LaurentQD* minus, LaurentQD* zero, LaurentQD* plus) {
  LaurentQD m = phi, z = phi, p = phi;
  for (int n = phi.n_min(); n <= phi.n_max(); ++n) {
    if (n < 0) {
      z.set_unit_coeff(n, {0.0, 0.0});
      p.set_unit_coeff(n, {0.0, 0.0});
    } else if (n == 0) {
      m.set_unit_coeff(n, {0.0, 0.0});
      p.set_unit_coeff(n, {0.0, 0.0});
    } else {
      m.set_unit_coeff(n, {0.0, 0.0});
      z.set_unit_coeff(n, {0.0, 0.0});
    }
  }
  if (minus) *minus = std::move(m);
  if (zero) *zero = std::move(z);
  if (plus) *plus = std::move(p);
}

LaurentQD project_perp(const LaurentQD& phi) {
  LaurentQD out = phi;
  if (out.in_mode_range(0)) out.set_unit_coeff(0, {0.0, 0.0});
  return out;
}

// ---- pointwise norm ----------------------------------------------------

double log_pointwise_norm(const LaurentQD& phi, double log_modulus, double theta) {
  if (phi.is_collar()) {
    const double L = phi.L();
    const double t = (L / kTwoPi) * log_modulus;
    if (!(std::fabs(t) < kPi / 2))
      throw std::domain_error("collar point lies outside the ambient annulus");
    const double af = std::abs(eval_f(phi, log_modulus, theta));
    return std::log(af) + 2.0 * std::log(kTwoPi / L) + 2.0 * std::log(std::cos(t));
  }
  if (!(log_modulus < 0.0))
    throw std::domain_error("cusp point needs 0 < |z| < 1");
  const double af = std::abs(eval_f(phi, log_modulus, theta));
  return std::log(af) + 2.0 * std::log(-log_modulus);
}

double pointwise_norm(const LaurentQD& phi, double log_modulus, double theta) {
  return std::exp(log_pointwise_norm(phi, log_modulus, theta));
}

// ---- L^2 / L^4 ---------------------------------------------------------

double log_l2_norm(const LaurentQD& phi, const RegionSpec& region) {
  std::vector<double> terms;
  terms.reserve(static_cast<std::size_t>(phi.n_max() - phi.n_min() + 1));
  for (int n = phi.n_min(); n <= phi.n_max(); ++n) {
    const double a2 = std::norm(phi.unit_coeff(n));
    if (a2 == 0.0) continue;
    terms.push_back(std::log(a2) + log_mode_weight(phi.domain(), n, region) -
                    phi.log_ref_weight(n));
  }
  return 0.5 * log_sum_exp(terms);
}

double l2_norm(const LaurentQD& phi, const RegionSpec& region) {
  return std::exp(log_l2_norm(phi, region));
}

double l2_norm_quadrature(const LaurentQD& phi, const RegionSpec& region, double rel_tol) {
  if (phi.is_collar()) {
    const double L = phi.L();
    const double h = region_half_extent(L, region);
    // ||phi||^2 dA = pn^2 (L/2pi) sec^2 t  dt dtheta
    auto integrand = [&](double t, double theta) {
      const double u = (kTwoPi / L) * t;
      const double pn = pointwise_norm(phi, u, theta);
      const double ct = std::cos(t);
      return pn * pn * (L / kTwoPi) / (ct * ct);
    };
    const QuadResult r = integrate2d(integrand, -h, h, 0.0, kTwoPi, rel_tol);
    return std::sqrt(std::max(0.0, r.value));
  }
  const double beta = cusp_region_beta(region);
  // ||phi||^2 dA = pn^2 / u^2  du dtheta with u = log|z|; the integrand decays
  // like e^{2u} toward the puncture, so an 80-wide window is exhaustive.  The
  // quadrature nodes are interior, so the u = 0 edge of the full disk is
  // never sampled.
  auto integrand = [&](double u, double theta) {
    const double pn = pointwise_norm(phi, u, theta);
    return pn * pn / (u * u);
  };
  const QuadResult r = integrate2d(integrand, -beta - 80.0, -beta, 0.0, kTwoPi, rel_tol);
  return std::sqrt(std::max(0.0, r.value));
}

double l4_integral(const LaurentQD& phi, const RegionSpec& region, double rel_tol) {
  if (phi.is_collar()) {
    const double L = phi.L();
    const double h = region_half_extent(L, region);
    auto integrand = [&](double t, double theta) {
      const double u = (kTwoPi / L) * t;
      const double pn = pointwise_norm(phi, u, theta);
      const double ct = std::cos(t);
      return pn * pn * pn * pn * (L / kTwoPi) / (ct * ct);
    };
    return integrate2d(integrand, -h, h, 0.0, kTwoPi, rel_tol).value;
  }
  const double beta = cusp_region_beta(region);
  auto integrand = [&](double u, double theta) {
    const double pn = pointwise_norm(phi, u, theta);
    return pn * pn * pn * pn / (u * u);
  };
  return integrate2d(integrand, -beta - 80.0, -beta, 0.0, kTwoPi, rel_tol).value;
}

// ---- sup norm ----------------------------------------------------------

namespace {

struct Purity {
  bool has_neg = false, has_zero = false, has_pos = false;
  bool any() const { return has_neg || has_zero || has_pos; }
};

Purity purity_of(const LaurentQD& phi) {
  Purity p;
  for (int n = phi.n_min(); n <= phi.n_max(); ++n) {
    if (std::norm(phi.unit_coeff(n)) == 0.0) continue;
    if (n < 0) p.has_neg = true;
    else if (n == 0) p.has_zero = true;
    else p.has_pos = true;
  }
  return p;
}

// Dense scan of one circle (fixed log-modulus) followed by golden-section
// refinement of the best angular bracket.
SupEstimate scan_circle(const LaurentQD& phi, double u_fixed) {
  SupEstimate est;
  est.boundary_only = true;
  const int kSamples = 4096;
  double best_log = kNegInf;
  int best_j = 0;
  for (int j = 0; j < kSamples; ++j) {
    const double theta = kTwoPi * j / kSamples;
    const double v = log_pointwise_norm(phi, u_fixed, theta);
    if (v > best_log) {
      best_log = v;
      best_j = j;
    }
  }
  est.samples = kSamples;
  if (!std::isfinite(best_log)) {  // zero differential on this circle
    est.value = 0.0;
    est.resolution = kTwoPi / kSamples;
    return est;
  }
  const double step = kTwoPi / kSamples;
  double lo = (best_j - 1) * step, hi = (best_j + 1) * step;
  const double gr = 0.6180339887498948482;  // 1/golden ratio
  double x1 = hi - gr * (hi - lo), x2 = lo + gr * (hi - lo);
  double f1 = log_pointwise_norm(phi, u_fixed, x1);
  double f2 = log_pointwise_norm(phi, u_fixed, x2);
  est.samples += 2;
  for (int it = 0; it < 80; ++it) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + gr * (hi - lo);
      f2 = log_pointwise_norm(phi, u_fixed, x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - gr * (hi - lo);
      f1 = log_pointwise_norm(phi, u_fixed, x1);
    }
    est.samples += 1;
  }
  best_log = std::max(best_log, std::max(f1, f2));
  est.value = std::exp(best_log);
  est.resolution = hi - lo;
  return est;
}

// 2-D coarse grid plus shrinking-window refinement over
// (x, theta) in [x_lo, x_hi] x [0, 2pi), where x is the radial coordinate
// (t for collars, log|z| for cusps) evaluated through `logpn`.
template <class F>
SupEstimate grid_refine(const F& logpn, double x_lo, double x_hi, int n_theta) {
  SupEstimate est;
  est.boundary_only = false;
  const int nx = 257;
  double best_log = kNegInf, best_x = x_lo, best_th = 0.0;
  for (int i = 0; i < nx; ++i) {
    const double x = x_lo + (x_hi - x_lo) * i / (nx - 1);
    for (int j = 0; j < n_theta; ++j) {
      const double th = kTwoPi * j / n_theta;
      const double v = logpn(x, th);
      if (v > best_log) {
        best_log = v;
        best_x = x;
        best_th = th;
      }
    }
  }
  est.samples = static_cast<std::int64_t>(nx) * n_theta;
  double wx = 2.0 * (x_hi - x_lo) / (nx - 1);
  double wth = 2.0 * kTwoPi / n_theta;
  if (!std::isfinite(best_log)) {
    est.value = 0.0;
    est.resolution = std::max(wx, wth);
    return est;
  }
  const int kSub = 33, kRounds = 10;
  for (int round = 0; round < kRounds; ++round) {
    const double x0 = std::max(x_lo, best_x - wx), x1 = std::min(x_hi, best_x + wx);
    const double t0 = best_th - wth, t1 = best_th + wth;
    for (int i = 0; i < kSub; ++i) {
      const double x = x0 + (x1 - x0) * i / (kSub - 1);
      for (int j = 0; j < kSub; ++j) {
        const double th = t0 + (t1 - t0) * j / (kSub - 1);
        const double v = logpn(x, th);
        if (v > best_log) {
          best_log = v;
          best_x = x;
          best_th = th;
        }
      }
    }
    est.samples += static_cast<std::int64_t>(kSub) * kSub;
    wx = 4.0 * wx / (kSub - 1);
    wth = 4.0 * wth / (kSub - 1);
  }
  est.value = std::exp(best_log);
  est.resolution = std::max(wx, wth);
  return est;
}

}  // namespace

SupEstimate sup_norm(const LaurentQD& phi, const RegionSpec& region) {
  const Purity p = purity_of(phi);
  if (phi.is_collar()) {
    const double L = phi.L();
    const double h = region_half_extent(L, region);
    const bool bounded_region = region.kind != RegionSpec::Ambient;
    if (!p.any()) {
      SupEstimate est;
      est.value = 0.0;
      est.samples = 0;
      est.resolution = 0.0;
      est.boundary_only = bounded_region;
      return est;
    }
    // Pure one-signed parts attain their sup on the outer boundary circle of
    // any closed sub-collar: the angular sup of |f| grows at rate >= 2pi/L
    // while cos^2 t decays at rate <= 2/sinh(L/2) < 2pi/L there.  The open
    // ambient annulus has no boundary circle, so it takes the generic path.
    if (bounded_region && p.has_pos && !p.has_zero && !p.has_neg)
      return scan_circle(phi, (kTwoPi / L) * h);
    if (bounded_region && p.has_neg && !p.has_zero && !p.has_pos)
      return scan_circle(phi, -(kTwoPi / L) * h);
    if (p.has_zero && !p.has_neg && !p.has_pos) {
      // Rotation-invariant norm (2pi/L)^2 cos^2 t |a_0|: the sup sits at t = 0.
      SupEstimate est;
      est.value = pointwise_norm(phi, 0.0, 0.0);
      est.samples = 1;
      est.resolution = 0.0;
      est.boundary_only = false;
      return est;
    }
    const double edge = bounded_region ? 0.0 : 1e-9;
    const double t_hi = h - edge;
    const int max_abs_mode = std::max(std::abs(phi.n_min()), std::abs(phi.n_max()));
    const int n_theta = std::max(256, 8 * max_abs_mode);
    auto logpn = [&](double t, double th) {
      return log_pointwise_norm(phi, (kTwoPi / L) * t, th);
    };
    return grid_refine(logpn, -t_hi, t_hi, n_theta);
  }
  // Cusp: on |z| <= e^{-pi} the radial log-derivative of the angular sup is
  // >= 1 - 2/pi > 0, so the sup sits on the outer circle.  On the full disk
  // the norm vanishes at both ends and peaks near log|z| = -2/n.
  if (!p.any()) {
    SupEstimate est;
    est.value = 0.0;
    est.samples = 0;
    est.resolution = 0.0;
    est.boundary_only = region.kind == RegionSpec::CuspMax;
    return est;
  }
  if (region.kind == RegionSpec::CuspMax) return scan_circle(phi, -kPi);
  const int n_theta = std::max(256, 8 * phi.n_max());
  auto logpn = [&](double u, double th) { return log_pointwise_norm(phi, u, th); };
  return grid_refine(logpn, -60.0, -1e-9, n_theta);
}

// ---- pairings ----------------------------------------------------------

std::complex<double> gardiner_pairing(const LaurentQD& phi) {
  if (!phi.is_collar())
    throw std::domain_error("length-gradient pairing is defined on collar differentials");
  if (!phi.in_mode_range(0)) return {0.0, 0.0};
  return phi.coeff(0) * phi.L();
}

std::complex<double> gardiner_pairing_quadrature(const LaurentQD& phi, double rel_tol) {
  const double L = phi.L();  // throws for cusp domains
  const double h = h_collar(L);
  // The cos^2-weighted angular average isolates a_0:
  //   (1 / (2pi c0(L))) Int_{-h}^{h} Int_0^{2pi} f cos^2 t  dtheta dt = a_0.
  auto real_part = [&](double t, double theta) {
    const double u = (kTwoPi / L) * t;
    const double ct = std::cos(t);
    return eval_f(phi, u, theta).real() * ct * ct;
  };
  auto imag_part = [&](double t, double theta) {
    const double u = (kTwoPi / L) * t;
    const double ct = std::cos(t);
    return eval_f(phi, u, theta).imag() * ct * ct;
  };
  const double scale = L / (kTwoPi * c0(L));
  const QuadResult re = integrate2d(real_part, -h, h, 0.0, kTwoPi, rel_tol);
  const QuadResult im = integrate2d(imag_part, -h, h, 0.0, kTwoPi, rel_tol);
  return {scale * re.value, scale * im.value};
}

// ---- evaluation-functional norms --------------------------------------

namespace {

double log_bromberg(const QDomain& domain, double u, int n_modes, ModeConstraint constraint,
                    const RegionSpec& region) {
  if (n_modes < 0 || n_modes > LaurentQD::kMaxModes)
    throw std::invalid_argument("mode count must satisfy 0 <= n_modes <= 64");
  std::vector<double> terms;
  if (domain.is_collar) {
    if (n_modes == 0 && constraint == ModeConstraint::Perp)
      throw std::invalid_argument("empty admissible mode set");
    const double t = (domain.L / kTwoPi) * u;
    if (!(std::fabs(t) < kPi / 2))
      throw std::domain_error("collar point lies outside the ambient annulus");
    for (int n = -n_modes; n <= n_modes; ++n) {
      if (constraint == ModeConstraint::Perp && n == 0) continue;
      terms.push_back(2.0 * n * u - log_mode_weight(domain, n, region));
    }
    return 4.0 * std::log(kTwoPi / domain.L) + 4.0 * std::log(std::cos(t)) +
           log_sum_exp(terms);
  }
  if (n_modes == 0) throw std::invalid_argument("empty admissible mode set");
  if (!(u < 0.0)) throw std::domain_error("cusp point needs 0 < |z| < 1");
  for (int n = 1; n <= n_modes; ++n)
    terms.push_back(2.0 * n * u - log_mode_weight(domain, n, region));
  return 4.0 * std::log(-u) + log_sum_exp(terms);
}

}  // namespace

double log_extremal_ratio(const QDomain& domain, double log_modulus, int n_modes,
                          ModeConstraint constraint, const RegionSpec& norm_region) {
  return 0.5 * log_bromberg(domain, log_modulus, n_modes, constraint, norm_region);
}

double extremal_ratio(const QDomain& domain, double log_modulus, int n_modes,
                      ModeConstraint constraint, const RegionSpec& norm_region) {
  return std::exp(log_extremal_ratio(domain, log_modulus, n_modes, constraint, norm_region));
}

double bromberg_sum(const QDomain& domain, double log_modulus, int n_modes,
                    const RegionSpec& norm_region) {
  return std::exp(
      log_bromberg(domain, log_modulus, n_modes, ModeConstraint::All, norm_region));
}

}  // namespace wpb
