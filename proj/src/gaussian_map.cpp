#include "geofun/gaussian_map.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>
#include <vector>

#include "geofun/monotone_cubic.hpp"
#include "geofun/quadrature.hpp"

namespace geofun {

namespace {

double integrand(double t) { return std::exp(0.5 * t * t); }

double segment(double a, double b, double quad_tol) {
  QuadratureOptions q;
  q.abs_tol = quad_tol;
  if (a <= b) return adaptive_simpson(integrand, a, b, q);
  return -adaptive_simpson(integrand, b, a, q);
}

double forward_exact(double alpha, const GaussianOptions& opt) {
  const double x = std::abs(alpha);
  if (x > opt.range)
    throw std::domain_error("gaussian map: |alpha| beyond quadrature range");
  const double v = segment(0.0, x, opt.quad_tol);
  return alpha < 0.0 ? -v : v;
}

double inverse_exact(double y, const GaussianOptions& opt) {
  const bool neg = y < 0.0;
  y = std::abs(y);
  if (y == 0.0) return 0.0;

  // Bracket by doubling, keeping the running integral value.
  double t_lo = 0.0, v_lo = 0.0;
  double t_hi = std::min(1.0, opt.range);
  double v_hi = segment(0.0, t_hi, opt.quad_tol);
  while (v_hi < y) {
    if (t_hi >= opt.range)
      throw std::domain_error("gaussian map: inverse target beyond range");
    t_lo = t_hi;
    v_lo = v_hi;
    const double t_next = std::min(2.0 * t_hi, opt.range);
    v_hi += segment(t_hi, t_next, opt.quad_tol);
    t_hi = t_next;
  }

  double t = (v_hi > v_lo)
                 ? t_lo + (t_hi - t_lo) * (y - v_lo) / (v_hi - v_lo)
                 : 0.5 * (t_lo + t_hi);
  double v = v_lo + segment(t_lo, t, opt.quad_tol);
  for (int it = 0; it < 200; ++it) {
    const double r = v - y;
    if (r > 0.0) {
      t_hi = t;
      v_hi = v;
    } else if (r < 0.0) {
      t_lo = t;
      v_lo = v;
    } else {
      return neg ? -t : t;
    }
    double t_next = t - r / integrand(t);
    if (!(t_next > t_lo && t_next < t_hi)) t_next = 0.5 * (t_lo + t_hi);
    v += segment(t, t_next, opt.quad_tol);
    if (std::abs(t_next - t) <= opt.newton_tol * (1.0 + std::abs(t_next)))
      return neg ? -t_next : t_next;
    t = t_next;
  }
  throw std::runtime_error("gaussian map: inversion did not converge");
}

}  // namespace

OddHomeomorphism gaussian_homeomorphism(GaussianOptions opt) {
  OddHomeomorphism v;
  v.label = "gaussian";
  v.forward_d1 = [](double t) { return std::exp(0.5 * t * t); };
  v.forward_d2 = [](double t) { return t * std::exp(0.5 * t * t); };

  if (!opt.cached) {
    v.forward = [opt](double a) { return forward_exact(a, opt); };
    v.inverse = [opt](double y) { return inverse_exact(y, opt); };
    return v;
  }

  // Cached mode: cumulative quadrature along the node grid, then a
  // monotone cubic in each direction. Queries beyond the cached range
  // fall back to the exact path.
  const int n = opt.cache_points;
  if (n < 2) throw std::domain_error("gaussian map: cache_points must be >= 2");
  std::vector<double> xs(n), ys(n);
  xs[0] = 0.0;
  ys[0] = 0.0;
  for (int i = 1; i < n; ++i) {
    xs[i] = opt.cache_range * static_cast<double>(i) / (n - 1);
    ys[i] = ys[i - 1] + segment(xs[i - 1], xs[i], opt.quad_tol);
  }
  auto fwd = std::make_shared<MonotoneCubic>(xs, ys);
  auto inv = std::make_shared<MonotoneCubic>(ys, xs);
  const double y_max = ys.back();

  v.forward = [fwd, opt](double a) {
    const double x = std::abs(a);
    if (x > opt.cache_range) return forward_exact(a, opt);
    const double val = (*fwd)(x);
    return a < 0.0 ? -val : val;
  };
  v.inverse = [inv, y_max, opt](double y) {
    const double x = std::abs(y);
    if (x > y_max) return inverse_exact(y, opt);
    const double val = (*inv)(x);
    return y < 0.0 ? -val : val;
  };
  return v;
}

}  // namespace geofun
