#include "geofun/roughness.hpp"

#include <cmath>
#include <stdexcept>

namespace geofun {

namespace {

void require_inside(const ParamCurve& g, double t, double h) {
  if (t - h < g.t_begin || t + h > g.t_end)
    throw std::domain_error("roughness probe: t +/- h leaves the curve domain");
}

}  // namespace

std::vector<double> second_divided_difference_profile(
    const ParamCurve& g, double t, const std::vector<double>& steps) {
  std::vector<double> out;
  out.reserve(steps.size());
  for (double h : steps) {
    if (!(h > 0.0)) throw std::domain_error("roughness probe: step must be > 0");
    require_inside(g, t, h);
    const Vector d = g(t + h) - 2.0 * g(t) + g(t - h);
    out.push_back(d.norm() / (h * h));
  }
  return out;
}

std::vector<double> first_difference_profile(const ParamCurve& g, double t,
                                             const std::vector<double>& steps) {
  std::vector<double> out;
  out.reserve(steps.size());
  for (double h : steps) {
    if (!(h > 0.0)) throw std::domain_error("roughness probe: step must be > 0");
    require_inside(g, t, h);
    out.push_back((g(t + h) - g(t)).norm() / h);
  }
  return out;
}

std::vector<double> dyadic_steps(int k_coarse, int k_fine) {
  if (k_coarse > k_fine) throw std::domain_error("dyadic_steps: bad range");
  std::vector<double> out;
  for (int k = k_coarse; k <= k_fine; ++k) out.push_back(std::ldexp(1.0, -k));
  return out;
}

RoughnessSummary roughness_summary(const ParamCurve& g, double t,
                                   const std::vector<double>& steps) {
  if (steps.size() < 4)
    throw std::domain_error("roughness_summary: need at least 4 steps");
  RoughnessSummary s;
  s.steps = steps;
  s.second_profile = second_divided_difference_profile(g, t, steps);
  s.first_profile = first_difference_profile(g, t, steps);

  const size_t n = steps.size();
  const double coarse = 0.5 * (s.second_profile[0] + s.second_profile[1]);
  const double fine = 0.5 * (s.second_profile[n - 1] + s.second_profile[n - 2]);
  s.growth_ratio = coarse > 0.0 ? fine / coarse : 0.0;

  for (size_t i = 0; i + 1 < n; ++i)
    s.first_gaps.push_back(std::abs(s.first_profile[i] - s.first_profile[i + 1]));

  // Three blocks of consecutive scales, coarse to fine.
  const size_t m = s.first_gaps.size();
  const size_t cut1 = m / 3 + (m % 3 > 0 ? 1 : 0);
  const size_t cut2 = cut1 + m / 3 + (m % 3 > 1 ? 1 : 0);
  auto mean = [&](size_t lo, size_t hi) {
    double acc = 0.0;
    for (size_t i = lo; i < hi; ++i) acc += s.first_gaps[i];
    return acc / static_cast<double>(hi - lo);
  };
  s.gap_block_means = {mean(0, cut1), mean(cut1, cut2), mean(cut2, m)};
  s.gaps_decreasing = s.gap_block_means[0] > s.gap_block_means[1] &&
                      s.gap_block_means[1] > s.gap_block_means[2];
  return s;
}

}  // namespace geofun
