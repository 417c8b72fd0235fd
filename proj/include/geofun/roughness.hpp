#pragma once

#include <vector>

#include "geofun/curve.hpp"

namespace geofun {

/// |g(t+h) - 2 g(t) + g(t-h)| / h^2 per step. Converges for twice
/// differentiable curves and grows without bound along curves that obey
/// no second-order equation.
std::vector<double> second_divided_difference_profile(
    const ParamCurve& g, double t, const std::vector<double>& steps);

/// One-sided slopes (g(t+h) - g(t)) / h per step.
std::vector<double> first_difference_profile(const ParamCurve& g, double t,
                                             const std::vector<double>& steps);

/// Steps 2^-k_coarse .. 2^-k_fine (inclusive, halving).
std::vector<double> dyadic_steps(int k_coarse, int k_fine);

/// Aggregated view of both profiles at one probe point. The first
/// differences of a merely-C^1 curve converge with a log-periodically
/// oscillating error, so the Cauchy gaps are compared between blocks of
/// consecutive scales rather than pairwise.
struct RoughnessSummary {
  std::vector<double> steps;
  std::vector<double> second_profile;
  std::vector<double> first_profile;
  std::vector<double> first_gaps;        // |slope(h) - slope(h/2)|
  std::vector<double> gap_block_means;   // coarse -> fine, 3 blocks
  double growth_ratio = 0.0;  // mean of two finest / mean of two coarsest
  bool gaps_decreasing = false;
};

RoughnessSummary roughness_summary(const ParamCurve& g, double t,
                                   const std::vector<double>& steps);

}  // namespace geofun
