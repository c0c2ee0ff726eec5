#include <cmath>

#include "certifier.hpp"
#include "doctest.h"
#include "interval.hpp"

using namespace wpb;

namespace {

Interval hump(const Interval& x) { return x * (1.0 - x); }  // peak 1/4 at x = 1/2

}  // namespace

TEST_CASE("certify_sup: bound with headroom is certified") {
  const CertResult res =
      certify_sup(hump, Interval(0.0, 1.0), Interval::point(0.26));
  CHECK(res.status == CertStatus::Certified);
  CHECK(res.achieved.contains(0.25));
  CHECK(res.achieved.lo > 0.2499);
  CHECK(res.achieved.width() <= 2e-4);
  CHECK(res.cells > 0);
  CHECK(!res.has_witness);
}

TEST_CASE("certify_sup: bound below the sup is refuted with a witness") {
  const CertResult res =
      certify_sup(hump, Interval(0.0, 1.0), Interval::point(0.24));
  CHECK(res.status == CertStatus::Violated);
  CHECK(res.has_witness);
  CHECK(std::fabs(res.witness_r - 0.5) < 0.1);
  // the achieved enclosure's lower end really beats the bound
  CHECK(res.achieved.lo > 0.24);
}

TEST_CASE("certify_sup: near-exact contact still certifies at full depth") {
  // Bound 1e-9 above the true sup 1/4.  The product form of hump overestimates
  // a cell of width w at distance d from the peak by ~w/2, so every cell with
  // w > 2(d^2 + 1e-9) must be split: the peak neighborhood goes down to width
  // ~2e-9 (depth ~29) before the cover discharges.
  const CertResult res =
      certify_sup(hump, Interval(0.0, 1.0), Interval::point(0.25 + 1e-9));
  CHECK(res.status == CertStatus::Certified);
  CHECK(res.achieved.contains(0.25));
}

TEST_CASE("certify_sup: contact beyond the cell budget is inconclusive, not false") {
  // At headroom 1e-12 the same cover costs ~6M cells, past the default budget.
  // The certifier must give up honestly: inconclusive, with a budget note and
  // a still-valid sup enclosure -- never a false certificate or refutation.
  const CertResult res =
      certify_sup(hump, Interval(0.0, 1.0), Interval::point(0.25 + 1e-12));
  CHECK(res.status == CertStatus::Inconclusive);
  CHECK(res.achieved.contains(0.25));
  CHECK(res.note.find("budget") != std::string::npos);
}

TEST_CASE("certify_sup: depth starvation reports inconclusive, not violated") {
  CertOpts opts;
  opts.max_depth = 10;
  const CertResult res =
      certify_sup(hump, Interval(0.0, 1.0), Interval::point(0.25 + 1e-9), opts);
  CHECK(res.status == CertStatus::Inconclusive);
  CHECK(res.max_depth_reached >= 10);
}

TEST_CASE("certify_monotone: derivative-sign cover") {
  const CertResult res = certify_monotone(
      [](const Interval& x) { return exp(x); },
      [](const Interval& x) { return exp(x); }, Interval(0.0, 1.0),
      Direction::Increasing);
  CHECK(res.status == CertStatus::Certified);
  CHECK(res.note.find("derivative-sign cover") != std::string::npos);

  // x^2 is not increasing on [-1, 1]: the certified-negative derivative on
  // the left half refutes the claim
  const CertResult bad = certify_monotone(
      [](const Interval& x) { return sqr(x); },
      [](const Interval& x) { return 2.0 * x; }, Interval(-1.0, 1.0),
      Direction::Increasing);
  CHECK(bad.status == CertStatus::Violated);
  CHECK(bad.has_witness);
  CHECK(bad.witness_r < 0.0);

  // decreasing direction
  const CertResult dec = certify_monotone(
      [](const Interval& x) { return exp(-x); },
      [](const Interval& x) { return -exp(-x); }, Interval(0.0, 2.0),
      Direction::Decreasing);
  CHECK(dec.status == CertStatus::Certified);
}

TEST_CASE("certify_monotone: staircase fallback carries weaker semantics") {
  // no derivative supplied: grid staircase
  const CertResult res = certify_monotone(
      [](const Interval& x) { return pow_int(x, 3); }, IFunc{},
      Interval(0.0, 1.0), Direction::Increasing);
  CHECK(res.status == CertStatus::Certified);
  CHECK(res.note.find("staircase") != std::string::npos);

  // derivative 3x^2 has a flat point at 0: the sign cover cannot resolve it,
  // and the fallback staircase takes over
  const CertResult flat = certify_monotone(
      [](const Interval& x) { return pow_int(x, 3); },
      [](const Interval& x) { return 3.0 * sqr(x); }, Interval(-1.0, 1.0),
      Direction::Increasing);
  CHECK(flat.status == CertStatus::Certified);
  CHECK(flat.note.find("derivative route inconclusive") != std::string::npos);

  // derivative-only query with an unresolvable flat point stays inconclusive
  const CertResult nof = certify_monotone(
      IFunc{}, [](const Interval& x) { return 3.0 * sqr(x); }, Interval(-1.0, 1.0),
      Direction::Increasing);
  CHECK(nof.status == CertStatus::Inconclusive);

  // a genuine sign change is refuted by the staircase too
  const CertResult bad = certify_monotone(
      [](const Interval& x) { return sqr(x); }, IFunc{}, Interval(-1.0, 1.0),
      Direction::Increasing);
  CHECK(bad.status == CertStatus::Violated);

  // no evaluator at all
  const CertResult none =
      certify_monotone(IFunc{}, IFunc{}, Interval(0.0, 1.0), Direction::Increasing);
  CHECK(none.status == CertStatus::Inconclusive);
}

TEST_CASE("certify_constant") {
  // sin^2 + cos^2 = 1, certified to a tolerance compatible with the cellwise
  // dependency width
  const CertResult ok = certify_constant(
      [](const Interval& x) { return sqr(sin(x)) + sqr(cos(x)); },
      Interval(0.0, 3.0), 1.0, 1e-4);
  CHECK(ok.status == CertStatus::Certified);
  CHECK(ok.achieved.contains(1.0));

  const CertResult bad = certify_constant(
      [](const Interval& x) { return x; }, Interval(0.0, 1.0), 0.5, 0.1);
  CHECK(bad.status == CertStatus::Violated);
  CHECK(bad.has_witness);
  CHECK((bad.witness_r < 0.4 || bad.witness_r > 0.6));
}

TEST_CASE("check_inequality_pair") {
  const CertResult ok = check_inequality_pair(
      [](const Interval& x) { return sin(x); },
      [](const Interval& x) { return x; }, Interval(0.01, 3.0));
  CHECK(ok.status == CertStatus::Certified);

  const CertResult bad = check_inequality_pair(
      [](const Interval& x) { return x; },
      [](const Interval& x) { return sin(x); }, Interval(0.01, 3.0));
  CHECK(bad.status == CertStatus::Violated);
  CHECK(bad.has_witness);

  // exact contact at the left endpoint cannot be separated: honestly
  // inconclusive rather than certified or violated (modest cell budget --
  // the unresolvable corner would otherwise soak up the full default budget)
  CertOpts small;
  small.max_cells = 20000;
  const CertResult touch = check_inequality_pair(
      [](const Interval& x) { return sin(x); },
      [](const Interval& x) { return x; }, Interval(0.0, 1.0), small);
  CHECK(touch.status == CertStatus::Inconclusive);
}

TEST_CASE("discover_monotone partitions by derivative sign") {
  const auto segs = discover_monotone(
      [](const Interval& x) { return 2.0 * (x - 1.0); }, Interval(0.0, 2.0));
  REQUIRE(segs.size() >= 2);
  CHECK(segs.front().lo == 0.0);
  CHECK(segs.back().hi == 2.0);
  CHECK(segs.front().sign == -1);
  CHECK(segs.back().sign == +1);
  // adjacent segments tile the domain
  for (std::size_t i = 1; i < segs.size(); ++i) {
    CHECK(segs[i].lo == doctest::Approx(segs[i - 1].hi).epsilon(1e-15));
  }
  // any unresolved gap around the zero of the derivative is tiny
  for (const auto& s : segs) {
    if (s.sign == 0) CHECK(s.hi - s.lo < 1e-6);
  }

  // a one-signed derivative yields a single segment
  const auto inc = discover_monotone(
      [](const Interval& x) { return exp(x); }, Interval(0.0, 1.0));
  REQUIRE(inc.size() == 1);
  CHECK(inc.front().sign == +1);
}
