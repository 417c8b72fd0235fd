#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "geofun/space.hpp"

namespace geofun {

/// Deterministic sample plan for property checks. Every stream derived
/// from the same spec yields the same values, independent of platform:
/// uniform doubles are built from the top 53 bits of the engine output
/// and ball points by rejection from the enclosing cube.
struct SampleSpec {
  std::int64_t n_samples = 10000;
  double point_radius = 2.0;
  std::uint64_t seed = 42;
  std::optional<std::vector<std::array<double, 3>>> grid_gammas;  // (alpha,beta,gamma)

  void validate() const;
};

class SampleStream {
 public:
  explicit SampleStream(std::uint64_t seed) : engine_(seed) {}

  double uniform01();
  double uniform(double lo, double hi);
  Vector point_in_ball(int dim, double radius);

 private:
  std::mt19937_64 engine_;
};

/// The corner triples {0, 1/4, 1/2, 3/4, 1}^3, always appended to the
/// random (alpha, beta, gamma) draws of the composition check.
std::vector<std::array<double, 3>> corner_triples();

}  // namespace geofun
