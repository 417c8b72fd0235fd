#pragma once

#include <memory>
#include <string>

#include "geofun/space.hpp"

namespace geofun {

enum class Smoothness { c0, c1, c_inf };
std::string to_string(Smoothness s);

/// Two-point interpolation map f(a, b, gamma) subject to the endpoint
/// and self-composition laws. Evaluation is total on R^n x R^n x [0,1]
/// and pure; implementations must be safe to call concurrently.
class GeodesicSolution {
 public:
  virtual ~GeodesicSolution() = default;

  const SpaceContext& context() const { return ctx_; }
  Smoothness smoothness() const { return smoothness_; }

  virtual Vector eval(const Vector& a, const Vector& b, UnitParam gamma) const = 0;

 protected:
  GeodesicSolution(SpaceContext ctx, Smoothness s)
      : ctx_(std::move(ctx)), smoothness_(s) {}

  SpaceContext ctx_;
  Smoothness smoothness_;
};

/// f(a,b,gamma) = (1-gamma) a + gamma b.
class LinearSolution final : public GeodesicSolution {
 public:
  explicit LinearSolution(SpaceContext ctx)
      : GeodesicSolution(std::move(ctx), Smoothness::c_inf) {}

  Vector eval(const Vector& a, const Vector& b, UnitParam gamma) const override;
};

/// Deliberately wrong fixtures for negative-control tests. The constant
/// map ignores b and gamma; the bump map adds a symmetric gamma(1-gamma)
/// deflection that keeps the endpoints but breaks self-composition.
std::shared_ptr<const GeodesicSolution> make_constant_fixture(SpaceContext ctx);
std::shared_ptr<const GeodesicSolution> make_bump_fixture(SpaceContext ctx);

}  // namespace geofun
