#include "geofun/sampling.hpp"

#include <stdexcept>

namespace geofun {

void SampleSpec::validate() const {
  if (n_samples < 1) throw std::domain_error("SampleSpec: n_samples must be >= 1");
  if (!(point_radius > 0.0))
    throw std::domain_error("SampleSpec: point_radius must be positive");
}

double SampleStream::uniform01() {
  return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SampleStream::uniform(double lo, double hi) {
  return lo + (hi - lo) * uniform01();
}

Vector SampleStream::point_in_ball(int dim, double radius) {
  Vector p(dim);
  while (true) {
    for (int i = 0; i < dim; ++i) p[i] = uniform(-radius, radius);
    if (p.squaredNorm() <= radius * radius) return p;
  }
}

std::vector<std::array<double, 3>> corner_triples() {
  static const double levels[5] = {0.0, 0.25, 0.5, 0.75, 1.0};
  std::vector<std::array<double, 3>> out;
  out.reserve(125);
  for (double a : levels)
    for (double b : levels)
      for (double g : levels) out.push_back({a, b, g});
  return out;
}

}  // namespace geofun
