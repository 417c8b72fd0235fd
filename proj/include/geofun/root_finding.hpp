#pragma once

#include <cmath>
#include <stdexcept>

namespace geofun {

struct InvertOptions {
  double step_tol = 1e-13;
  int max_iter = 200;
};

/// Solve f(x) = target for a strictly increasing f on the bracket
/// [lo, hi], which must satisfy f(lo) <= target <= f(hi). Newton steps
/// use df when supplied (df may return 0 to decline); any step leaving
/// the bracket falls back to bisection.
template <typename F, typename DF>
double invert_increasing(F&& f, DF&& df, double target, double lo, double hi,
                         InvertOptions opt = {}) {
  double flo = f(lo) - target;
  double fhi = f(hi) - target;
  if (flo > 0.0 || fhi < 0.0)
    throw std::runtime_error("invert_increasing: target not bracketed");
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;

  double x = 0.5 * (lo + hi);
  for (int it = 0; it < opt.max_iter; ++it) {
    const double r = f(x) - target;
    if (r == 0.0) return x;
    (r > 0.0 ? hi : lo) = x;

    double next;
    const double d = df(x);
    if (d > 0.0 && std::isfinite(d)) {
      next = x - r / d;
      if (!(next > lo && next < hi)) next = 0.5 * (lo + hi);
    } else {
      next = 0.5 * (lo + hi);
    }
    if (std::abs(next - x) <= opt.step_tol * (1.0 + std::abs(next))) return next;
    x = next;
  }
  throw std::runtime_error("invert_increasing: no convergence");
}

}  // namespace geofun
