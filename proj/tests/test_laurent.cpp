#include <cmath>
#include <complex>
#include <stdexcept>

#include "bounds.hpp"
#include "doctest.h"
#include "laurent.hpp"
#include "quadrature.hpp"
#include "rng.hpp"

using namespace wpb;

namespace {

bool rel_close(double a, double b, double rel) {
  return std::fabs(a - b) <= rel * std::max(std::fabs(a), std::fabs(b));
}

double collar_u_of_r(double L, double r) {
  // log-modulus of the circle at injectivity radius r: cos t = sinh(L/2)/sinh(r)
  const double ct = std::min(std::sinh(0.5 * L) / std::sinh(r), 1.0);
  return (2.0 * M_PI / L) * std::acos(ct);
}

}  // namespace

TEST_CASE("collar mode weights") {
  const QDomain dom = QDomain::collar(0.2);
  const ModeWeight w0 = mode_weight(dom, 0, RegionSpec::collar());
  CHECK(rel_close(w0.weight, 305890.71005716036282, 1e-12));
  CHECK(rel_close(w0.log_weight, std::log(305890.71005716036282), 1e-12));

  // the ambient weight differs from the collar weight by (pi/2)/c0(L) at n=0
  const ModeWeight w0a = mode_weight(dom, 0, RegionSpec::ambient());
  CHECK(rel_close(w0a.weight / w0.weight, (M_PI / 2.0) / c0(0.2), 1e-12));

  // a sub-collar cut at the full half-angle is the collar itself
  const double wsub =
      mode_weight(dom, 3, RegionSpec::sub_collar(h_collar(0.2))).log_weight;
  CHECK(rel_close(wsub, mode_weight(dom, 3, RegionSpec::collar()).log_weight, 1e-13));

  // opposite modes carry equal weight
  CHECK(rel_close(log_mode_weight(dom, -5, RegionSpec::collar()),
                  log_mode_weight(dom, 5, RegionSpec::collar()), 1e-14));

  // weights match the explicit integral formula w_n = 2pi (2pi/L)^3 I(a_n, h)
  const double a4 = 4.0 * M_PI * 4.0 / 0.2;
  const double expect = std::log(2.0 * M_PI) + 3.0 * std::log(2.0 * M_PI / 0.2) +
                        log_cos2_exp_integral(a4, h_collar(0.2));
  CHECK(rel_close(log_mode_weight(dom, 4, RegionSpec::collar()), expect, 1e-13));
}

TEST_CASE("cusp mode weights") {
  const QDomain dom = QDomain::cusp();
  CHECK(rel_close(mode_weight(dom, 1, RegionSpec::cusp_max()).weight,
                  0.0792667392111, 1e-11));
  CHECK(rel_close(mode_weight(dom, 2, RegionSpec::cusp_max()).weight,
                  6.33541614249e-5, 1e-11));
  CHECK(rel_close(mode_weight(dom, 3, RegionSpec::cusp_max()).weight,
                  7.48290866825e-8, 1e-11));

  // over the full punctured disk the weight collapses to pi/(2 n^3)
  CHECK(rel_close(mode_weight(dom, 1, RegionSpec::cusp_disk()).weight,
                  M_PI / 2.0, 1e-12));
  CHECK(rel_close(mode_weight(dom, 2, RegionSpec::cusp_disk()).weight,
                  M_PI / 16.0, 1e-12));
  CHECK(rel_close(mode_weight(dom, 3, RegionSpec::cusp_disk()).weight,
                  M_PI / 54.0, 1e-12));

  // modes below n = 1 are not square-integrable at the puncture
  CHECK_THROWS_AS(log_mode_weight(dom, 0, RegionSpec::cusp_max()), std::domain_error);
  CHECK_THROWS_AS(log_mode_weight(dom, -1, RegionSpec::cusp_disk()), std::domain_error);
  // region/domain mismatches are rejected
  CHECK_THROWS_AS(log_mode_weight(dom, 1, RegionSpec::collar()), std::invalid_argument);
  CHECK_THROWS_AS(log_mode_weight(QDomain::collar(0.5), 1, RegionSpec::cusp_max()),
                  std::invalid_argument);
}

TEST_CASE("cos^2-weighted exponential integral") {
  struct Pair {
    double a, h;
  };
  for (const Pair p : {Pair{0.5, 1.0}, Pair{4.0 * M_PI, 1.2}, Pair{40.0, 1.5}}) {
    const QuadResult q = integrate(
        [&](double t) { return std::exp(p.a * t) * std::cos(t) * std::cos(t); },
        -p.h, p.h);
    REQUIRE(q.converged);
    CHECK(rel_close(std::exp(log_cos2_exp_integral(p.a, p.h)), q.value, 1e-10));
  }
  // a = 0 degenerates to the cos^2 mass 2 c0-like form: h + sin(2h)/2
  const double h = h_collar(0.7);
  CHECK(rel_close(std::exp(log_cos2_exp_integral(0.0, h)), c0(0.7), 1e-13));
  CHECK_THROWS_AS(log_cos2_exp_integral(-1.0, 1.0), std::domain_error);
  CHECK_THROWS_AS(log_cos2_exp_integral(1.0, 2.0), std::domain_error);
}

TEST_CASE("construction, coefficients, and mode ranges") {
  LaurentQD qd = LaurentQD::collar(1.0, -8, 8);
  CHECK(qd.is_collar());
  CHECK(qd.L() == 1.0);
  CHECK(qd.n_min() == -8);
  CHECK(qd.n_max() == 8);

  qd.set_unit_coeff(3, {1.5, -0.5});
  CHECK(qd.unit_coeff(3) == std::complex<double>(1.5, -0.5));
  CHECK(qd.unit_coeff(4) == std::complex<double>(0.0, 0.0));
  CHECK(qd.unit_coeff(40) == std::complex<double>(0.0, 0.0));  // out of range reads as 0

  // raw-coefficient round trip at small |n|
  qd.set_coeff(-2, {0.25, 0.125});
  const std::complex<double> back = qd.coeff(-2);
  CHECK(rel_close(back.real(), 0.25, 1e-12));
  CHECK(rel_close(back.imag(), 0.125, 1e-12));

  CHECK_THROWS_AS(qd.set_unit_coeff(9, {1.0, 0.0}), std::out_of_range);
  CHECK_THROWS_AS(qd.set_coeff(-9, {1.0, 0.0}), std::out_of_range);
  CHECK_THROWS_AS(LaurentQD::collar(1.0, -65, 0), std::invalid_argument);
  CHECK_THROWS_AS(LaurentQD::collar(1.0, 2, 1), std::invalid_argument);
  CHECK_THROWS_AS(LaurentQD::collar(0.0, -1, 1), std::domain_error);

  LaurentQD cq = LaurentQD::cusp(6);
  CHECK(!cq.is_collar());
  CHECK(cq.n_min() == 1);
  CHECK(cq.n_max() == 6);
  CHECK(cq.coeff(0) == std::complex<double>(0.0, 0.0));
  CHECK_THROWS_AS(cq.L(), std::logic_error);
  CHECK_THROWS_AS(LaurentQD::cusp(0), std::invalid_argument);
  CHECK_THROWS_AS(LaurentQD::cusp(65), std::invalid_argument);
}

TEST_CASE("random sampling is deterministic per seed and stream") {
  TrialRng rng_a(5, 7), rng_b(5, 7), rng_c(5, 8);
  LaurentQD a = sample_random(QDomain::collar(0.5), 8, rng_a);
  LaurentQD b = sample_random(QDomain::collar(0.5), 8, rng_b);
  LaurentQD c = sample_random(QDomain::collar(0.5), 8, rng_c);
  bool all_equal = true, any_diff = false, all_populated = true;
  for (int n = -8; n <= 8; ++n) {
    if (a.unit_coeff(n) != b.unit_coeff(n)) all_equal = false;
    if (a.unit_coeff(n) != c.unit_coeff(n)) any_diff = true;
    if (std::norm(a.unit_coeff(n)) == 0.0) all_populated = false;
  }
  CHECK(all_equal);
  CHECK(any_diff);
  CHECK(all_populated);
}

TEST_CASE("pointwise norm: closed forms for single modes") {
  // central mode on a short collar: norm = |a_0| (2pi/L)^2 cos^2 t
  LaurentQD phi0 = LaurentQD::collar(0.2, 0, 0);
  phi0.set_coeff(0, {1.0, 0.0});
  CHECK(rel_close(pointwise_norm(phi0, 0.0, 0.0), 986.96044010893586188, 1e-12));
  CHECK(rel_close(pointwise_norm(phi0, 10.0, 1.0), 890.29251503677247263, 1e-12));
  // rotation invariance for a single mode
  CHECK(rel_close(pointwise_norm(phi0, 10.0, 0.25), pointwise_norm(phi0, 10.0, 4.0),
                  1e-13));

  // side mode: norm = |a_n| e^{n u} (2pi/L)^2 cos^2 t
  LaurentQD phi2 = LaurentQD::collar(0.5, -4, 4);
  phi2.set_coeff(2, {0.75, 0.0});
  const double u = 3.0;
  const double t = (0.5 / (2.0 * M_PI)) * u;
  const double expect = 0.75 * std::exp(2.0 * u) *
                        std::pow(2.0 * M_PI / 0.5, 2.0) * std::cos(t) * std::cos(t);
  CHECK(rel_close(pointwise_norm(phi2, u, 0.0), expect, 1e-12));

  // outside the ambient annulus the query is rejected
  const double too_far = (2.0 * M_PI / 0.5) * (M_PI / 2.0) * 1.0000001;
  CHECK_THROWS_AS(pointwise_norm(phi2, too_far, 0.0), std::domain_error);

  // cusp mode 1 with raw coefficient 1 at the maximal-cusp boundary:
  // norm = e^{-pi} pi^2
  LaurentQD psi = LaurentQD::cusp(1);
  psi.set_coeff(1, {1.0, 0.0});
  CHECK(rel_close(pointwise_norm(psi, -M_PI, 0.0), 0.42650427788444241, 1e-12));
  CHECK(rel_close(pointwise_norm(psi, -M_PI, 2.0), 0.42650427788444241, 1e-12));
  CHECK_THROWS_AS(pointwise_norm(psi, 0.5, 0.0), std::domain_error);

  // the zero differential has norm 0 (log form is -inf)
  LaurentQD zero = LaurentQD::collar(0.5, -2, 2);
  CHECK(pointwise_norm(zero, 1.0, 0.0) == 0.0);
  CHECK(std::isinf(log_pointwise_norm(zero, 1.0, 0.0)));
}

TEST_CASE("unit modes have unit L^2 norm over the reference region") {
  for (int n : {-6, -1, 0, 1, 6}) {
    LaurentQD phi = LaurentQD::collar(0.7, -6, 6);
    phi.set_unit_coeff(n, {1.0, 0.0});
    CHECK(rel_close(l2_norm(phi, RegionSpec::collar()), 1.0, 1e-12));
  }
  for (int n : {1, 4}) {
    LaurentQD psi = LaurentQD::cusp(4);
    psi.set_unit_coeff(n, {0.0, 1.0});
    CHECK(rel_close(l2_norm(psi, RegionSpec::cusp_max()), 1.0, 1e-12));
  }
}

TEST_CASE("closed-form L^2 norm matches 2-D quadrature") {
  TrialRng rng(2024, 0);
  LaurentQD phi = sample_random(QDomain::collar(1.0), 8, rng);
  for (const RegionSpec& region : {RegionSpec::collar(), RegionSpec::ambient()}) {
    const double closed = l2_norm(phi, region);
    const double quad = l2_norm_quadrature(phi, region);
    CHECK(rel_close(closed, quad, 1e-8));
  }
  // sub-collar region
  const RegionSpec sub = RegionSpec::sub_collar(0.6 * h_collar(1.0));
  CHECK(rel_close(l2_norm(phi, sub), l2_norm_quadrature(phi, sub), 1e-8));

  LaurentQD psi = sample_random(QDomain::cusp(), 6, rng);
  for (const RegionSpec& region : {RegionSpec::cusp_max(), RegionSpec::cusp_disk()}) {
    const double closed = l2_norm(psi, region);
    const double quad = l2_norm_quadrature(psi, region);
    CHECK(rel_close(closed, quad, 1e-8));
  }
}

TEST_CASE("decompose splits the L^2 mass exactly") {
  TrialRng rng(11, 3);
  LaurentQD phi = sample_random(QDomain::collar(0.8), 10, rng);
  LaurentQD minus = phi, zero = phi, plus = phi;
  decompose(phi, &minus, &zero, &plus);
  for (const RegionSpec& region : {RegionSpec::collar(), RegionSpec::ambient()}) {
    const double whole = l2_norm(phi, region);
    const double m = l2_norm(minus, region);
    const double z = l2_norm(zero, region);
    const double p = l2_norm(plus, region);
    CHECK(rel_close(whole * whole, m * m + z * z + p * p, 1e-12));
  }
  // the pieces carry disjoint mode supports
  CHECK(std::norm(minus.unit_coeff(1)) == 0.0);
  CHECK(std::norm(minus.unit_coeff(0)) == 0.0);
  CHECK(std::norm(zero.unit_coeff(-1)) == 0.0);
  CHECK(std::norm(plus.unit_coeff(0)) == 0.0);
  CHECK(minus.unit_coeff(-3) == phi.unit_coeff(-3));
  CHECK(zero.unit_coeff(0) == phi.unit_coeff(0));
  CHECK(plus.unit_coeff(7) == phi.unit_coeff(7));

  LaurentQD perp = project_perp(phi);
  CHECK(std::norm(perp.unit_coeff(0)) == 0.0);
  CHECK(perp.unit_coeff(5) == phi.unit_coeff(5));
}

TEST_CASE("sup norm routing") {
  // pure central mode: exact closed form at the core circle
  LaurentQD phi0 = LaurentQD::collar(0.3, 0, 0);
  phi0.set_unit_coeff(0, {2.0, 0.0});
  const SupEstimate s0 = sup_norm(phi0, RegionSpec::collar());
  CHECK(s0.samples == 1);
  CHECK(!s0.boundary_only);
  CHECK(rel_close(s0.value, pointwise_norm(phi0, 0.0, 0.0), 1e-15));

  // pure positive part: boundary-circle scan
  LaurentQD plus = LaurentQD::collar(0.3, -2, 2);
  plus.set_unit_coeff(1, {1.0, 0.5});
  plus.set_unit_coeff(2, {-0.25, 0.0});
  const SupEstimate sp = sup_norm(plus, RegionSpec::collar());
  CHECK(sp.boundary_only);
  const double u_edge = (2.0 * M_PI / 0.3) * h_collar(0.3);
  // single angular scan can only produce values attained on that circle
  bool below = sp.value <= pointwise_norm(plus, u_edge, 0.0) * 2.0;
  CHECK(below);
  // and it dominates any individual boundary sample
  CHECK(sp.value >= pointwise_norm(plus, u_edge, 0.0) * (1.0 - 1e-12));
  CHECK(sp.value >= pointwise_norm(plus, u_edge, 1.0) * (1.0 - 1e-12));

  // mixed differential: interior grid search dominates sampled points
  TrialRng rng(21, 0);
  LaurentQD mixed = sample_random(QDomain::collar(0.6), 4, rng);
  const SupEstimate sm = sup_norm(mixed, RegionSpec::collar());
  CHECK(!sm.boundary_only);
  const double s_ext = s_collar(0.6);
  for (double frac : {-0.9, -0.3, 0.0, 0.4, 0.8}) {
    CHECK(sm.value >= pointwise_norm(mixed, frac * s_ext, 0.7) * (1.0 - 1e-12));
  }

  // maximal cusp: outer-circle scan
  LaurentQD psi = LaurentQD::cusp(3);
  psi.set_unit_coeff(1, {1.0, 0.0});
  psi.set_unit_coeff(3, {0.5, 0.5});
  const SupEstimate sc = sup_norm(psi, RegionSpec::cusp_max());
  CHECK(sc.boundary_only);
  CHECK(sc.value >= pointwise_norm(psi, -M_PI, 0.0) * (1.0 - 1e-12));

  // zero differential
  LaurentQD zero = LaurentQD::collar(0.5, -1, 1);
  CHECK(sup_norm(zero, RegionSpec::collar()).value == 0.0);
}

TEST_CASE("length-gradient pairing") {
  LaurentQD phi = LaurentQD::collar(0.7, -4, 4);
  TrialRng rng(8, 1);
  for (int n = -4; n <= 4; ++n) phi.set_unit_coeff(n, rng.complex_gaussian());
  const std::complex<double> closed = gardiner_pairing(phi);
  const std::complex<double> expect = phi.coeff(0) * 0.7;
  CHECK(rel_close(closed.real(), expect.real(), 1e-14));
  CHECK(rel_close(closed.imag(), expect.imag(), 1e-14));

  const std::complex<double> quad = gardiner_pairing_quadrature(phi);
  CHECK(std::abs(quad - closed) <= 1e-8 * std::max(1.0, std::abs(closed)));

  // differentials with no central mode pair to zero
  LaurentQD side = LaurentQD::collar(0.7, 1, 3);
  side.set_unit_coeff(2, {1.0, 0.0});
  CHECK(gardiner_pairing(side) == std::complex<double>(0.0, 0.0));

  LaurentQD psi = LaurentQD::cusp(2);
  CHECK_THROWS_AS(gardiner_pairing(psi), std::domain_error);
}

TEST_CASE("extremal ratio: closed form and dominance") {
  const QDomain dom = QDomain::collar(0.4);

  // N = 0: only the central mode; the ratio is (2pi/L)^2 cos^2 t / sqrt(w_0)
  const double u = 5.0;
  const double t = (0.4 / (2.0 * M_PI)) * u;
  const double w0 = mode_weight(dom, 0, RegionSpec::collar()).weight;
  const double expect =
      std::pow(2.0 * M_PI / 0.4, 2.0) * std::cos(t) * std::cos(t) / std::sqrt(w0);
  CHECK(rel_close(extremal_ratio(dom, u, 0, ModeConstraint::All, RegionSpec::collar()),
                  expect, 1e-12));

  // no admissible modes under Perp with N = 0
  CHECK_THROWS_AS(extremal_ratio(dom, u, 0, ModeConstraint::Perp, RegionSpec::collar()),
                  std::invalid_argument);
  CHECK_THROWS_AS(extremal_ratio(dom, u, 65, ModeConstraint::All, RegionSpec::collar()),
                  std::invalid_argument);

  // the extremal ratio dominates every sampled differential's ratio
  TrialRng rng(303, 0);
  for (int trial = 0; trial < 20; ++trial) {
    LaurentQD phi = sample_random(dom, 16, rng);
    const double log_ratio_all = log_pointwise_norm(phi, u, 1.3) -
                                 log_l2_norm(phi, RegionSpec::collar());
    CHECK(log_ratio_all <=
          log_extremal_ratio(dom, u, 16, ModeConstraint::All, RegionSpec::collar()) +
              1e-9);
    LaurentQD perp = project_perp(phi);
    const double log_ratio_perp =
        log_pointwise_norm(perp, u, 1.3) - log_l2_norm(perp, RegionSpec::ambient());
    CHECK(log_ratio_perp <=
          log_extremal_ratio(dom, u, 16, ModeConstraint::Perp, RegionSpec::ambient()) +
              1e-9);
  }

  // Perp removes mass: the constrained functional norm is no larger
  CHECK(log_extremal_ratio(dom, u, 8, ModeConstraint::Perp, RegionSpec::collar()) <=
        log_extremal_ratio(dom, u, 8, ModeConstraint::All, RegionSpec::collar()) + 1e-15);

  // cusp domain
  const QDomain cdom = QDomain::cusp();
  CHECK_THROWS_AS(extremal_ratio(cdom, 0.5, 4, ModeConstraint::All,
                                 RegionSpec::cusp_max()),
                  std::domain_error);
  CHECK_THROWS_AS(extremal_ratio(cdom, -1.0, 0, ModeConstraint::All,
                                 RegionSpec::cusp_max()),
                  std::invalid_argument);
  CHECK(extremal_ratio(cdom, -4.0, 6, ModeConstraint::All, RegionSpec::cusp_max()) > 0.0);
}

TEST_CASE("second-moment sum equals the squared extremal ratio") {
  const QDomain dom = QDomain::collar(0.3);
  for (double u : {0.0, 7.5, 29.733}) {
    for (const RegionSpec& region : {RegionSpec::collar(), RegionSpec::ambient()}) {
      const double er = extremal_ratio(dom, u, 64, ModeConstraint::All, region);
      const double bs = bromberg_sum(dom, u, 64, region);
      CHECK(rel_close(bs, er * er, 1e-10));
    }
  }
  const QDomain cdom = QDomain::cusp();
  const double erc = extremal_ratio(cdom, -4.0, 8, ModeConstraint::All,
                                    RegionSpec::cusp_max());
  const double bsc = bromberg_sum(cdom, -4.0, 8, RegionSpec::cusp_max());
  CHECK(rel_close(bsc, erc * erc, 1e-10));
}

TEST_CASE("second-moment sums at frozen collar points") {
  const QDomain dom = QDomain::collar(0.3);
  const double u_e2 = collar_u_of_r(0.3, eps2());
  const double u_e2b = collar_u_of_r(0.3, eps2bar());
  const double u_035 = collar_u_of_r(0.3, 0.35);

  CHECK(rel_close(bromberg_sum(dom, u_e2, 64, RegionSpec::collar()),
                  590.3518841, 1e-8));
  CHECK(rel_close(bromberg_sum(dom, u_e2, 64, RegionSpec::ambient()),
                  0.1150352859, 1e-8));
  CHECK(rel_close(bromberg_sum(dom, u_e2b, 64, RegionSpec::collar()),
                  0.1903613817, 1e-8));
  CHECK(rel_close(bromberg_sum(dom, u_e2b, 64, RegionSpec::ambient()),
                  0.01882427937, 1e-8));
  CHECK(rel_close(bromberg_sum(dom, u_035, 64, RegionSpec::collar()),
                  0.06801408886, 1e-8));
  CHECK(rel_close(bromberg_sum(dom, u_035, 64, RegionSpec::ambient()),
                  0.06704133258, 1e-8));
}

TEST_CASE("ambient second moment stays under the thin-part envelope") {
  // For every collar point with injectivity radius r <= eps2, the ambient-norm
  // second-moment sum is bounded by K0/L with K0 = 2 * 0.9137^2.
  const double K0 = 2.0 * 0.9137 * 0.9137;
  for (double L : {0.1, 0.3, 1.0, 1.7}) {
    const QDomain dom = QDomain::collar(L);
    const double r_lo = 0.5 * L * 1.01;
    if (!(r_lo < eps2())) continue;
    for (int k = 0; k <= 12; ++k) {
      const double r = r_lo + (eps2() - r_lo) * k / 12.0;
      const double u = collar_u_of_r(L, r);
      const double sum = bromberg_sum(dom, u, 64, RegionSpec::ambient());
      CHECK(sum <= (K0 / L) * (1.0 + 1e-9));
    }
  }
}

TEST_CASE("extreme mode counts stay finite in the unit basis") {
  TrialRng rng(4242, 0);
  LaurentQD phi = sample_random(QDomain::collar(0.01), 64, rng);
  CHECK(std::isfinite(log_l2_norm(phi, RegionSpec::collar())));
  CHECK(std::isfinite(log_l2_norm(phi, RegionSpec::ambient())));
  CHECK(std::isfinite(l2_norm(phi, RegionSpec::collar())));
  // deep in the annulus where e^{nu} alone would overflow
  const double u = 0.8 * M_PI * M_PI / 0.01 * 0.5;
  CHECK(std::isfinite(log_pointwise_norm(phi, u, 0.3)));
  CHECK(std::isfinite(log_extremal_ratio(QDomain::collar(0.01), u, 64,
                                         ModeConstraint::All, RegionSpec::collar())));
}
