#pragma once

#include "geofun/odd_homeomorphism.hpp"

namespace geofun {

/// Parameters of the truncated Weierstrass series
///   w(x) = sum_{n<terms} amplitude^n cos(frequency^n pi x)
/// and of the shifted antiderivative built from it. The defaults give
/// amplitude*frequency = 6.5, comfortably above the 1 + 3*pi/2 threshold
/// that Hardy's condition requires for nowhere-differentiability, with
/// kappa above the sup bound 1/(1-amplitude) so that w + kappa > 0.
struct WeierstrassConfig {
  double amplitude = 0.5;  // in (0,1)
  int frequency = 13;      // positive odd integer
  int terms = 40;          // truncation length of the series
  double kappa = 2.5;      // uniform positive shift, > 1/(1-amplitude)
  double series_tol = 1e-10;

  void validate() const;
  double sup_bound() const;  // sum of |amplitude|^n over the truncation
};

/// Truncated Weierstrass series at x. Truncation error is bounded by
/// amplitude^terms / (1 - amplitude).
double weierstrass_w(const WeierstrassConfig& cfg, double x);

/// Antiderivative of w + kappa from 0 to alpha. The series integrates
/// band by band in closed form, which is what makes this map cheap to
/// evaluate; bands above `integral_bands(cfg)` contribute less than
/// 1e-12 and are dropped.
double weierstrass_antiderivative(const WeierstrassConfig& cfg, double alpha);
int integral_bands(const WeierstrassConfig& cfg);

/// Odd increasing C^1 bijection whose *inverse* is the shifted
/// Weierstrass antiderivative. The forward direction is recovered by a
/// bracketed Newton iteration (the derivative of the inverse, w + kappa,
/// is analytic and positive). No second derivative exists anywhere, so
/// the d2 slot stays empty; d1 of the forward map is omitted as well
/// since each evaluation would hide a root-find.
struct WeierstrassMapOptions {
  double newton_tol = 1e-13;
};
OddHomeomorphism weierstrass_homeomorphism(const WeierstrassConfig& cfg,
                                           WeierstrassMapOptions opt = {});

}  // namespace geofun
