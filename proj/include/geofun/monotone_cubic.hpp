#pragma once

#include <vector>

namespace geofun {

/// Monotone piecewise-cubic Hermite interpolant (Fritsch-Carlson slope
/// limiting) through strictly increasing data. Used as the opt-in cache
/// representation for expensive scalar maps.
class MonotoneCubic {
 public:
  MonotoneCubic(std::vector<double> x, std::vector<double> y);

  double operator()(double t) const;
  double x_min() const { return x_.front(); }
  double x_max() const { return x_.back(); }

 private:
  std::vector<double> x_, y_, slope_;
};

}  // namespace geofun
