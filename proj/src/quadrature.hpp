#pragma once

// Adaptive Gauss-Kronrod (G7, K15) quadrature, one-dimensional and
// iterated two-dimensional.  The embedded pair supplies the usual
// |K15 - G7| error estimate; adaptivity splits the worst subinterval
// first and is fully deterministic (ties broken by left endpoint).
//
// This is the independent oracle the closed-form norms are checked
// against; it is not itself an interval method.

#include <cmath>
#include <cstdint>
#include <functional>
#include <queue>
#include <vector>

namespace wpb {

namespace gk {

// Kronrod-15 abscissae (non-negative half; symmetric).
inline constexpr double XK[8] = {
    0.0,
    0.2077849550078984676007, 0.4058451513773971669066,
    0.5860872354676911302941, 0.7415311855993944398639,
    0.8648644233597690727897, 0.9491079123427585245262,
    0.9914553711208126392069,
};

// Kronrod-15 weights matching XK.
inline constexpr double WK[8] = {
    0.2094821410847278280130,
    0.2044329400752988924622, 0.1903505780647854099133,
    0.1690047266392679028266, 0.1406532597155259187452,
    0.1047900103222501838399, 0.0630920926299785532907,
    0.0229353220105292249637,
};

// Gauss-7 weights for the Kronrod abscissae with odd index removed
// (i.e. XK[0], XK[2], XK[4], XK[6]).
inline constexpr double WG[4] = {
    0.4179591836734693877551,
    0.3818300505051189449504, 0.2797053914892766679015,
    0.1294849661688696932706,
};

}  // namespace gk

struct QuadResult {
  double value = 0.0;
  double abs_err = 0.0;
  std::int64_t evals = 0;
  bool converged = false;
};

namespace detail {

struct Panel {
  double a, b, value, err;
};

struct PanelWorse {
  bool operator()(const Panel& x, const Panel& y) const {
    if (x.err != y.err) return x.err < y.err;
    return x.a > y.a;
  }
};

template <class F>
Panel eval_panel(const F& f, double a, double b) {
  const double c = 0.5 * (a + b), hw = 0.5 * (b - a);
  const double f0 = f(c);
  double k = gk::WK[0] * f0;
  double g = gk::WG[0] * f0;
  for (int i = 1; i < 8; ++i) {
    const double fp = f(c + hw * gk::XK[i]);
    const double fm = f(c - hw * gk::XK[i]);
    k += gk::WK[i] * (fp + fm);
    if (i % 2 == 0) g += gk::WG[i / 2] * (fp + fm);
  }
  const double value = k * hw;
  const double diff = std::fabs((k - g) * hw);
  // QUADPACK-style sharpened estimate; keep it simple but conservative.
  const double err = diff;
  return Panel{a, b, value, err};
}

}  // namespace detail

// Integrate f over [a, b] until the summed panel error estimate drops below
// max(rel_tol*|integral|, abs_tol) or max_panels panels have been used.
template <class F>
QuadResult integrate(F&& f, double a, double b, double rel_tol = 1e-10,
                     double abs_tol = 0.0, int max_panels = 4000) {
  QuadResult out;
  if (a == b) { out.converged = true; return out; }
  std::priority_queue<detail::Panel, std::vector<detail::Panel>, detail::PanelWorse> heap;
  detail::Panel p0 = detail::eval_panel(f, a, b);
  out.evals += 15;
  heap.push(p0);
  double total = p0.value, total_err = p0.err;
  int panels = 1;
  while (panels < max_panels) {
    if (total_err <= std::max(rel_tol * std::fabs(total), abs_tol)) break;
    detail::Panel worst = heap.top();
    heap.pop();
    const double mid = 0.5 * (worst.a + worst.b);
    if (mid <= worst.a || mid >= worst.b) {  // cannot split further
      heap.push(worst);
      break;
    }
    detail::Panel left = detail::eval_panel(f, worst.a, mid);
    detail::Panel right = detail::eval_panel(f, mid, worst.b);
    out.evals += 30;
    total += left.value + right.value - worst.value;
    total_err += left.err + right.err - worst.err;
    heap.push(left);
    heap.push(right);
    ++panels;
  }
  out.value = total;
  out.abs_err = total_err;
  out.converged = total_err <= std::max(rel_tol * std::fabs(total), abs_tol);
  return out;
}

// Iterated 2-D integral of f(x, y) over [ax,bx] x [ay,by]: an adaptive outer
// pass in x over adaptive inner integrals in y (inner tolerance tightened by
// 10x so the inner noise does not masquerade as outer structure).
template <class F>
QuadResult integrate2d(F&& f, double ax, double bx, double ay, double by,
                       double rel_tol = 1e-10, int max_panels_outer = 800,
                       int max_panels_inner = 800) {
  std::int64_t inner_evals = 0;
  bool inner_ok = true;
  auto outer = [&](double x) {
    QuadResult inner = integrate([&](double y) { return f(x, y); }, ay, by,
                                 0.1 * rel_tol, 0.0, max_panels_inner);
    inner_evals += inner.evals;
    inner_ok = inner_ok && inner.converged;
    return inner.value;
  };
  QuadResult out = integrate(outer, ax, bx, rel_tol, 0.0, max_panels_outer);
  out.evals += inner_evals;
  out.converged = out.converged && inner_ok;
  return out;
}

}  // namespace wpb
