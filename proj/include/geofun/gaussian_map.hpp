#pragma once

#include "geofun/odd_homeomorphism.hpp"

namespace geofun {

struct GaussianOptions {
  double quad_tol = 1e-12;    // absolute quadrature tolerance per segment
  double newton_tol = 1e-13;  // step tolerance of the inversion
  double range = 8.0;         // |alpha| cap; the integrand grows like e^{x^2/2}
  bool cached = false;        // opt-in monotone-cubic cache for forward/inverse
  double cache_range = 4.0;
  int cache_points = 4097;
};

/// v(alpha) = integral of exp(t^2/2) from 0 to alpha, a smooth odd
/// increasing bijection. Forward values come from adaptive Simpson
/// quadrature; the inverse is a bracketed Newton iteration with the
/// analytic derivative exp(t^2/2), accumulating the integral over the
/// Newton segments instead of restarting from zero.
OddHomeomorphism gaussian_homeomorphism(GaussianOptions opt = {});

}  // namespace geofun
