#pragma once

// Laurent-mode quadratic differentials f(z) dz^2/z^2 on the collar annulus
// and the cusp punctured disk, with closed-form L^2 structure.
//
// Mode-weight scale: the L^2 weight of a single mode reaches e.g. e^{+2800}
// for |n| = 64 on a short collar, far beyond double range.  All internal
// state therefore lives in the unit-weight basis: the stored coefficient is
// c_hat_n = a_n * sqrt(w_n^ref) (reference region: the full collar, resp.
// the maximal cusp), weights are kept as logarithms, and pointwise sums use
// exponent-shifted terms whose magnitude is bounded by e^{pi n}.  The
// random-sampling law "a_n complex Gaussian with variance 1/w_n" is
// realized exactly as c_hat_n ~ CN(0,1).

#include <complex>
#include <cstdint>
#include <vector>

#include "rng.hpp"

namespace wpb {

// L^2 integration regions.  Collar domains: CollarFull is |t| <= h_collar(L),
// CollarSub a symmetric sub-collar |t| <= t_extent, Ambient the whole
// annulus |t| < pi/2.  Cusp domains: CuspMax is 0 < |z| < e^{-pi}, CuspDisk
// the full punctured disk 0 < |z| < 1.
struct RegionSpec {
  enum Kind { CollarFull, CollarSub, Ambient, CuspMax, CuspDisk };
  Kind kind = CollarFull;
  double t_extent = 0.0;  // CollarSub only

  static RegionSpec collar() { return {CollarFull, 0.0}; }
  static RegionSpec sub_collar(double t_extent) { return {CollarSub, t_extent}; }
  static RegionSpec ambient() { return {Ambient, 0.0}; }
  static RegionSpec cusp_max() { return {CuspMax, 0.0}; }
  static RegionSpec cusp_disk() { return {CuspDisk, 0.0}; }
};

struct QDomain {
  bool is_collar = true;
  double L = 0.0;  // collar core length; unused for cusps

  static QDomain collar(double L);
  static QDomain cusp();
};

struct ModeWeight {
  int n = 0;
  double weight = 0.0;      // may overflow to +inf for large |n|; see log_weight
  double log_weight = 0.0;  // always finite
};

// log of the L^2 weight w_n over `region` for the given domain.  Collar
// domains accept any n; cusp domains require n >= 1 (lower modes are not
// square-integrable at the puncture).
double log_mode_weight(const QDomain& domain, int n, const RegionSpec& region);
ModeWeight mode_weight(const QDomain& domain, int n, const RegionSpec& region);

// log of I(a, h) = Integral_{-h}^{h} e^{a t} cos^2 t dt, a >= 0, 0 < h <= pi/2,
// evaluated in a cancellation-free grouping.  Exposed for tests.
double log_cos2_exp_integral(double a, double h);

class LaurentQD {
 public:
  static constexpr int kMaxModes = 64;

  // Collar differential with modes n in [n_min, n_max] (|n| <= kMaxModes).
  static LaurentQD collar(double L, int n_min, int n_max);
  // Cusp differential with modes 1..n_max.
  static LaurentQD cusp(int n_max);

  const QDomain& domain() const { return domain_; }
  bool is_collar() const { return domain_.is_collar; }
  double L() const;
  int n_min() const { return n_min_; }
  int n_max() const { return n_max_; }

  std::complex<double> unit_coeff(int n) const;
  void set_unit_coeff(int n, std::complex<double> c);

  // Raw Laurent coefficient a_n = c_hat_n e^{-log w_n / 2}; harmless for
  // small |n|, under/overflows at large |n| by design (tests use the unit
  // basis there).
  std::complex<double> coeff(int n) const;
  void set_coeff(int n, std::complex<double> a);

  double log_ref_weight(int n) const;
  RegionSpec reference_region() const;

  bool in_mode_range(int n) const { return n >= n_min_ && n <= n_max_; }

 private:
  LaurentQD() = default;
  QDomain domain_;
  int n_min_ = 0, n_max_ = 0;
  std::vector<std::complex<double>> unit_;     // indexed n - n_min
  std::vector<double> log_w_ref_;              // reference-region log weights
};

// ---- sampling ----------------------------------------------------------

// Every admissible mode's unit-basis coefficient drawn iid CN(0,1).
LaurentQD sample_random(const QDomain& domain, int n_modes, TrialRng& rng);

// ---- mode splits -------------------------------------------------------

void decompose(const LaurentQD& phi, LaurentQD* minus, LaurentQD* zero, LaurentQD* plus);
LaurentQD project_perp(const LaurentQD& phi);  // zeroes the n = 0 mode

// ---- pointwise norm ----------------------------------------------------

// log of the metric-invariant pointwise norm |f(z)| / (|z|^2 rho(z)^2) at
// the point with the given log-modulus (any argument angle); -inf for the
// zero differential.  Collar: valid on the ambient annulus |t| < pi/2.
// Cusp: valid for log_modulus < 0.
double log_pointwise_norm(const LaurentQD& phi, double log_modulus, double theta);
double pointwise_norm(const LaurentQD& phi, double log_modulus, double theta);

// ---- L^2 / L^4 ---------------------------------------------------------

double log_l2_norm(const LaurentQD& phi, const RegionSpec& region);
double l2_norm(const LaurentQD& phi, const RegionSpec& region);

// Independent 2-D adaptive-quadrature oracle for l2_norm.  Intended for
// cross-checks; ambient-region use is limited to moderate mode counts
// (the closed form is the production path).
double l2_norm_quadrature(const LaurentQD& phi, const RegionSpec& region,
                          double rel_tol = 1e-10);

// Integral of pointwise_norm^4 over the region (no closed form; adaptive
// 2-D quadrature).
double l4_integral(const LaurentQD& phi, const RegionSpec& region,
                   double rel_tol = 1e-8);

// ---- sup norm ----------------------------------------------------------

struct SupEstimate {
  double value = 0.0;
  std::int64_t samples = 0;
  double resolution = 0.0;  // linear size of the final search window
  bool boundary_only = false;
};

// Certified-from-below sup of the pointwise norm over the region: pure
// one-signed differentials search only the boundary circles (maximum
// principle), mixed ones run dense sampling with local refinement.
SupEstimate sup_norm(const LaurentQD& phi, const RegionSpec& region);

// ---- pairings ----------------------------------------------------------

// Pairing with the core-length gradient: a_0 * L (collar only).
std::complex<double> gardiner_pairing(const LaurentQD& phi);
// Quadrature oracle for the same quantity: extracts the n = 0 mode by
// weighted angular averaging and scales by L.
std::complex<double> gardiner_pairing_quadrature(const LaurentQD& phi,
                                                 double rel_tol = 1e-10);

// ---- evaluation-functional norms --------------------------------------

enum class ModeConstraint { All, Perp };

// sup over nonzero phi (a_0 = 0 under Perp) of pointwise/l2 with the given
// norm region; closed form (the evaluation functional's norm).
double log_extremal_ratio(const QDomain& domain, double log_modulus, int n_modes,
                          ModeConstraint constraint, const RegionSpec& norm_region);
double extremal_ratio(const QDomain& domain, double log_modulus, int n_modes,
                      ModeConstraint constraint, const RegionSpec& norm_region);

// Sum of squared pointwise norms of the orthonormal mode family; equals
// extremal_ratio^2 by construction (tested to high relative accuracy).
double bromberg_sum(const QDomain& domain, double log_modulus, int n_modes,
                    const RegionSpec& norm_region);

}  // namespace wpb
