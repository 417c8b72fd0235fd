#include "geofun/solution.hpp"

namespace geofun {

std::string to_string(Smoothness s) {
  switch (s) {
    case Smoothness::c0: return "C0";
    case Smoothness::c1: return "C1";
    case Smoothness::c_inf: return "Cinf";
  }
  return "?";
}

Vector LinearSolution::eval(const Vector& a, const Vector& b, UnitParam gamma) const {
  require_same_dim(a, b);
  const double g = gamma.value();
  return affine_combine(1.0 - g, a, g, b);
}

namespace {

class ConstantFixture final : public GeodesicSolution {
 public:
  explicit ConstantFixture(SpaceContext ctx)
      : GeodesicSolution(std::move(ctx), Smoothness::c0) {}
  Vector eval(const Vector& a, const Vector& b, UnitParam) const override {
    require_same_dim(a, b);
    return a;
  }
};

class BumpFixture final : public GeodesicSolution {
 public:
  explicit BumpFixture(SpaceContext ctx)
      : GeodesicSolution(std::move(ctx), Smoothness::c_inf) {}
  Vector eval(const Vector& a, const Vector& b, UnitParam gamma) const override {
    require_same_dim(a, b);
    const double g = gamma.value();
    Vector out = affine_combine(1.0 - g, a, g, b);
    out.array() += 0.5 * g * (1.0 - g);
    return out;
  }
};

}  // namespace

std::shared_ptr<const GeodesicSolution> make_constant_fixture(SpaceContext ctx) {
  return std::make_shared<ConstantFixture>(std::move(ctx));
}

std::shared_ptr<const GeodesicSolution> make_bump_fixture(SpaceContext ctx) {
  return std::make_shared<BumpFixture>(std::move(ctx));
}

}  // namespace geofun
