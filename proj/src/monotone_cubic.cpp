#include "geofun/monotone_cubic.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace geofun {

MonotoneCubic::MonotoneCubic(std::vector<double> x, std::vector<double> y)
    : x_(std::move(x)), y_(std::move(y)) {
  const size_t n = x_.size();
  if (n < 2 || y_.size() != n)
    throw std::domain_error("MonotoneCubic: need >= 2 samples");
  for (size_t i = 0; i + 1 < n; ++i)
    if (!(x_[i] < x_[i + 1]))
      throw std::domain_error("MonotoneCubic: x must be strictly increasing");

  std::vector<double> d(n - 1);
  for (size_t i = 0; i + 1 < n; ++i) d[i] = (y_[i + 1] - y_[i]) / (x_[i + 1] - x_[i]);

  slope_.resize(n);
  slope_[0] = d[0];
  slope_[n - 1] = d[n - 2];
  for (size_t i = 1; i + 1 < n; ++i)
    slope_[i] = (d[i - 1] * d[i] <= 0.0) ? 0.0 : 0.5 * (d[i - 1] + d[i]);

  // Fritsch-Carlson limiter keeps each cubic piece monotone.
  for (size_t i = 0; i + 1 < n; ++i) {
    if (d[i] == 0.0) {
      slope_[i] = slope_[i + 1] = 0.0;
      continue;
    }
    const double alpha = slope_[i] / d[i];
    const double beta = slope_[i + 1] / d[i];
    const double s = alpha * alpha + beta * beta;
    if (s > 9.0) {
      const double tau = 3.0 / std::sqrt(s);
      slope_[i] = tau * alpha * d[i];
      slope_[i + 1] = tau * beta * d[i];
    }
  }
}

double MonotoneCubic::operator()(double t) const {
  if (t <= x_.front()) t = x_.front();
  if (t >= x_.back()) t = x_.back();
  const auto it = std::upper_bound(x_.begin(), x_.end(), t);
  size_t i = static_cast<size_t>(std::max<std::ptrdiff_t>(it - x_.begin() - 1, 0));
  if (i >= x_.size() - 1) i = x_.size() - 2;
  const double h = x_[i + 1] - x_[i];
  const double u = (t - x_[i]) / h;
  const double u2 = u * u;
  const double u3 = u2 * u;
  const double h00 = 2.0 * u3 - 3.0 * u2 + 1.0;
  const double h10 = u3 - 2.0 * u2 + u;
  const double h01 = -2.0 * u3 + 3.0 * u2;
  const double h11 = u3 - u2;
  return h00 * y_[i] + h10 * h * slope_[i] + h01 * y_[i + 1] + h11 * h * slope_[i + 1];
}

}  // namespace geofun
