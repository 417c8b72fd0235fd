#pragma once

#include <cmath>
#include <stdexcept>
#include <utility>

namespace geofun {

struct QuadratureOptions {
  double abs_tol = 1e-12;
  int max_depth = 48;
};

namespace detail {

template <typename F>
double simpson_recurse(F& f, double a, double fa, double m, double fm, double b,
                       double fb, double whole, double tol, int depth,
                       int max_depth) {
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double err = (left + right - whole) / 15.0;
  // Second condition stops refinement once the panel correction is below
  // the rounding scale of the panel value itself.
  if (std::abs(err) <= tol || std::abs(err) <= 1e-15 * std::abs(left + right) ||
      depth >= max_depth)
    return left + right + err;
  return simpson_recurse(f, a, fa, lm, flm, m, fm, left, 0.5 * tol, depth + 1,
                         max_depth) +
         simpson_recurse(f, m, fm, rm, frm, b, fb, right, 0.5 * tol, depth + 1,
                         max_depth);
}

}  // namespace detail

/// Adaptive Simpson quadrature of f over [a,b] to the given absolute
/// tolerance. The Richardson term on each accepted panel is folded in, so
/// the realized error is typically well below abs_tol.
template <typename F>
double adaptive_simpson(F&& f, double a, double b, QuadratureOptions opt = {}) {
  if (a == b) return 0.0;
  const double fa = f(a);
  const double fb = f(b);
  const double m = 0.5 * (a + b);
  const double fm = f(m);
  if (!std::isfinite(fa) || !std::isfinite(fm) || !std::isfinite(fb))
    throw std::runtime_error("adaptive_simpson: non-finite integrand");
  const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
  return detail::simpson_recurse(f, a, fa, m, fm, b, fb, whole, opt.abs_tol, 0,
                                 opt.max_depth);
}

}  // namespace geofun
