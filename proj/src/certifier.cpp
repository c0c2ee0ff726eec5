#include "certifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace wpb {

namespace {

Interval point(double x) { return Interval{x, x}; }

double midpoint(const Interval& c) { return 0.5 * (c.lo + c.hi); }

bool splittable(const Interval& c) {
  const double m = midpoint(c);
  return m > c.lo && m < c.hi;
}

}  // namespace

const char* to_string(CertStatus s) {
  switch (s) {
    case CertStatus::Certified: return "certified";
    case CertStatus::Violated: return "violated";
    default: return "inconclusive";
  }
}

// ---- certify_sup -------------------------------------------------------

namespace {

struct SupCell {
  Interval r;
  Interval F;
  int depth = 0;
};

struct SupWorse {
  bool operator()(const SupCell& x, const SupCell& y) const {
    if (x.F.hi != y.F.hi) return x.F.hi < y.F.hi;
    return x.r.lo > y.r.lo;
  }
};

}  // namespace

CertResult certify_sup(const IFunc& f, const Interval& dom, const Interval& bound,
                       const CertOpts& opts) {
  CertResult out;
  std::priority_queue<SupCell, std::vector<SupCell>, SupWorse> heap;

  double best_lo = -std::numeric_limits<double>::infinity();
  double best_lo_r = dom.lo;
  double discharged_hi = -std::numeric_limits<double>::infinity();

  auto probe = [&](double r) {
    const Interval v = f(point(r));
    if (v.lo > best_lo) {
      best_lo = v.lo;
      best_lo_r = r;
    }
  };

  probe(midpoint(dom));
  heap.push(SupCell{dom, f(dom), 0});
  out.cells = 1;

  bool width_note = false;
  while (!heap.empty()) {
    const SupCell top = heap.top();

    if (best_lo > bound.hi) {
      out.status = CertStatus::Violated;
      out.witness_r = best_lo_r;
      out.has_witness = true;
      out.achieved = Interval{best_lo, std::max(top.F.hi, std::max(discharged_hi, best_lo))};
      out.note = "point evaluation exceeds the bound";
      return out;
    }

    heap.pop();
    out.max_depth_reached = std::max(out.max_depth_reached, top.depth);

    // Retire the cell once it can affect neither the bound claim nor the
    // final sup-enclosure width.
    if (top.F.hi <= bound.hi && top.F.hi <= best_lo + 0.5 * opts.width_target) {
      discharged_hi = std::max(discharged_hi, top.F.hi);
      continue;
    }

    const bool out_of_budget = out.cells >= opts.max_cells || top.depth >= opts.max_depth ||
                               !splittable(top.r);
    if (out_of_budget) {
      if (top.F.hi <= bound.hi) {
        // Bound holds on this cell; only the enclosure width goal is unmet.
        discharged_hi = std::max(discharged_hi, top.F.hi);
        width_note = true;
        continue;
      }
      out.status = CertStatus::Inconclusive;
      out.achieved = Interval{best_lo, std::max(top.F.hi, discharged_hi)};
      out.note = out.cells >= opts.max_cells
                     ? "cell budget exhausted with the enclosure still above the bound"
                     : "enclosure stuck above the bound at depth limit";
      return out;
    }

    const double m = midpoint(top.r);
    const Interval left{top.r.lo, m}, right{m, top.r.hi};
    probe(midpoint(left));
    probe(midpoint(right));
    heap.push(SupCell{left, f(left), top.depth + 1});
    heap.push(SupCell{right, f(right), top.depth + 1});
    out.cells += 2;
  }

  out.status = CertStatus::Certified;
  out.achieved = Interval{std::min(best_lo, discharged_hi), std::max(discharged_hi, best_lo)};
  if (width_note) out.note = "sup enclosure wider than the width target";
  return out;
}

// ---- certify_monotone --------------------------------------------------

namespace {

// Sign-definite derivative cover; returns Certified / Violated / Inconclusive.
CertResult monotone_by_derivative(const IFunc& df, const Interval& dom, Direction dir,
                                  const CertOpts& opts) {
  CertResult out;
  std::vector<SupCell> stack;
  stack.push_back(SupCell{dom, df(dom), 0});
  out.cells = 1;
  Interval margin_hull{0.0, 0.0};
  bool have_margin = false;
  while (!stack.empty()) {
    const SupCell cell = stack.back();
    stack.pop_back();
    out.max_depth_reached = std::max(out.max_depth_reached, cell.depth);
    const bool good = dir == Direction::Increasing ? cell.F.lo > 0.0 : cell.F.hi < 0.0;
    const bool bad = dir == Direction::Increasing ? cell.F.hi < 0.0 : cell.F.lo > 0.0;
    if (good) {
      margin_hull = have_margin ? hull(margin_hull, cell.F) : cell.F;
      have_margin = true;
      continue;
    }
    if (bad) {
      out.status = CertStatus::Violated;
      out.witness_r = midpoint(cell.r);
      out.has_witness = true;
      out.achieved = cell.F;
      out.note = "derivative certified to have the opposite sign";
      return out;
    }
    if (out.cells >= opts.max_cells || cell.depth >= opts.max_depth || !splittable(cell.r)) {
      out.status = CertStatus::Inconclusive;
      out.achieved = cell.F;
      out.note = "derivative sign unresolved at depth limit";
      return out;
    }
    const double m = midpoint(cell.r);
    const Interval left{cell.r.lo, m}, right{m, cell.r.hi};
    stack.push_back(SupCell{right, df(right), cell.depth + 1});
    stack.push_back(SupCell{left, df(left), cell.depth + 1});
    out.cells += 2;
  }
  out.status = CertStatus::Certified;
  out.achieved = have_margin ? margin_hull : Interval{0.0, 0.0};
  out.note = "derivative-sign cover";
  return out;
}

CertResult monotone_by_staircase(const IFunc& f, const Interval& dom, Direction dir) {
  CertResult out;
  const int kSteps = 1024;
  Interval prev = f(point(dom.lo));
  out.cells = 1;
  for (int i = 1; i <= kSteps; ++i) {
    const double x = dom.lo + (dom.hi - dom.lo) * i / kSteps;
    const Interval cur = f(point(x));
    ++out.cells;
    const bool rise_ok = dir == Direction::Increasing ? cur.lo > prev.hi : cur.hi < prev.lo;
    const bool fall = dir == Direction::Increasing ? cur.hi < prev.lo : cur.lo > prev.hi;
    if (fall) {
      out.status = CertStatus::Violated;
      out.witness_r = x;
      out.has_witness = true;
      out.achieved = cur;
      out.note = "staircase found a certified step in the opposite direction";
      return out;
    }
    if (!rise_ok) {
      out.status = CertStatus::Inconclusive;
      out.achieved = hull(prev, cur);
      out.note = "staircase step not separated at resolution " +
                 std::to_string((dom.hi - dom.lo) / kSteps);
      return out;
    }
    prev = cur;
  }
  out.status = CertStatus::Certified;
  out.achieved = prev;
  out.note = "staircase certificate at resolution " +
             std::to_string((dom.hi - dom.lo) / kSteps) +
             " (grid-scale monotonicity, not a derivative certificate)";
  return out;
}

}  // namespace

CertResult certify_monotone(const IFunc& f, const IFunc& df, const Interval& dom,
                            Direction dir, const CertOpts& opts) {
  if (df) {
    CertResult by_df = monotone_by_derivative(df, dom, dir, opts);
    if (by_df.status != CertStatus::Inconclusive || !f) return by_df;
    CertResult fallback = monotone_by_staircase(f, dom, dir);
    fallback.cells += by_df.cells;
    fallback.note = "derivative route inconclusive; " + fallback.note;
    return fallback;
  }
  if (f) return monotone_by_staircase(f, dom, dir);
  CertResult out;
  out.note = "no evaluator supplied";
  return out;
}

// ---- certify_constant --------------------------------------------------

CertResult certify_constant(const IFunc& f, const Interval& dom, double p, double tol,
                            const CertOpts& opts) {
  CertResult out;
  std::vector<SupCell> stack;
  stack.push_back(SupCell{dom, f(dom), 0});
  out.cells = 1;
  Interval value_hull = stack.back().F;
  while (!stack.empty()) {
    const SupCell cell = stack.back();
    stack.pop_back();
    out.max_depth_reached = std::max(out.max_depth_reached, cell.depth);
    value_hull = hull(value_hull, cell.F);
    if (cell.F.lo >= p - tol && cell.F.hi <= p + tol) continue;
    if (cell.F.lo > p + tol || cell.F.hi < p - tol) {
      out.status = CertStatus::Violated;
      out.witness_r = midpoint(cell.r);
      out.has_witness = true;
      out.achieved = cell.F;
      out.note = "cell enclosure lies entirely outside the tolerance band";
      return out;
    }
    if (out.cells >= opts.max_cells || cell.depth >= opts.max_depth || !splittable(cell.r)) {
      out.status = CertStatus::Inconclusive;
      out.achieved = cell.F;
      out.note = "enclosure straddles the tolerance band at depth limit";
      return out;
    }
    const double m = midpoint(cell.r);
    const Interval left{cell.r.lo, m}, right{m, cell.r.hi};
    stack.push_back(SupCell{right, f(right), cell.depth + 1});
    stack.push_back(SupCell{left, f(left), cell.depth + 1});
    out.cells += 2;
  }
  out.status = CertStatus::Certified;
  out.achieved = value_hull;
  return out;
}

// ---- check_inequality_pair --------------------------------------------

namespace {

struct PairCell {
  Interval r;
  Interval lhs, rhs;
  int depth = 0;
};

}  // namespace

CertResult check_inequality_pair(const IFunc& lhs, const IFunc& rhs, const Interval& dom,
                                 const CertOpts& opts) {
  CertResult out;
  std::vector<PairCell> stack;
  stack.push_back(PairCell{dom, lhs(dom), rhs(dom), 0});
  out.cells = 1;
  // Track the thinnest certified margin rhs - lhs seen on a discharged cell.
  double worst_margin = std::numeric_limits<double>::infinity();
  Interval worst_cell_gap{0.0, 0.0};
  bool have_gap = false;
  while (!stack.empty()) {
    const PairCell cell = stack.back();
    stack.pop_back();
    out.max_depth_reached = std::max(out.max_depth_reached, cell.depth);
    const double margin = cell.rhs.lo - cell.lhs.hi;
    if (margin >= 0.0) {
      if (margin < worst_margin) {
        worst_margin = margin;
        worst_cell_gap = cell.rhs - cell.lhs;
        have_gap = true;
      }
      continue;
    }
    const double m = midpoint(cell.r);
    const Interval pl = lhs(point(m)), pr = rhs(point(m));
    if (pl.lo > pr.hi) {
      out.status = CertStatus::Violated;
      out.witness_r = m;
      out.has_witness = true;
      out.achieved = pr - pl;
      out.note = "point evaluation certifies lhs > rhs";
      return out;
    }
    if (out.cells >= opts.max_cells || cell.depth >= opts.max_depth || !splittable(cell.r)) {
      out.status = CertStatus::Inconclusive;
      out.achieved = cell.rhs - cell.lhs;
      out.note = "inequality unresolved at depth limit";
      return out;
    }
    const Interval left{cell.r.lo, m}, right{m, cell.r.hi};
    stack.push_back(PairCell{right, lhs(right), rhs(right), cell.depth + 1});
    stack.push_back(PairCell{left, lhs(left), rhs(left), cell.depth + 1});
    out.cells += 2;
  }
  out.status = CertStatus::Certified;
  out.achieved = have_gap ? worst_cell_gap : Interval{0.0, 0.0};
  return out;
}

// ---- discover_monotone -------------------------------------------------

namespace {

void classify(const IFunc& df, const Interval& dom, int depth, int max_depth,
              std::vector<MonotoneSegment>* segs) {
  const Interval d = df(dom);
  int sign = 0;
  if (d.lo > 0.0) sign = +1;
  else if (d.hi < 0.0) sign = -1;
  if (sign == 0 && depth < max_depth && midpoint(dom) > dom.lo && midpoint(dom) < dom.hi) {
    const double m = midpoint(dom);
    classify(df, Interval{dom.lo, m}, depth + 1, max_depth, segs);
    classify(df, Interval{m, dom.hi}, depth + 1, max_depth, segs);
    return;
  }
  if (!segs->empty() && segs->back().sign == sign && segs->back().hi == dom.lo) {
    segs->back().hi = dom.hi;  // merge with the adjacent run
    return;
  }
  segs->push_back(MonotoneSegment{dom.lo, dom.hi, sign});
}

}  // namespace

std::vector<MonotoneSegment> discover_monotone(const IFunc& df, const Interval& dom,
                                               int max_depth) {
  std::vector<MonotoneSegment> segs;
  classify(df, dom, 0, max_depth, &segs);
  return segs;
}

}  // namespace wpb
