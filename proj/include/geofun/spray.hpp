#pragma once

#include <functional>
#include <vector>

#include "geofun/odd_homeomorphism.hpp"
#include "geofun/sampling.hpp"
#include "geofun/space.hpp"

namespace geofun {

/// Quadratic-in-velocity right-hand side of the second-order equation
/// g'' + s(g, g') = 0, together with the scalar profile r it was built
/// from: s(a,b) = r((a,b)/|b|) |b| b for b != 0 and s(a,0) = 0.
struct Spray {
  std::function<Vector(const Vector&, const Vector&)> s;
  std::function<double(double)> r;
};

/// r = v''/v' (central finite difference of v' when v'' is missing);
/// requires v' everywhere positive.
Spray build_spray(const OddHomeomorphism& v, const SpaceContext& ctx,
                  double fd_step = 1e-5);

/// max over samples and lambdas of |s(a, lambda b) - lambda^2 s(a,b)|.
double check_homogeneity(const Spray& spray, int dim, const SampleSpec& spec,
                         const std::vector<double>& lambdas);

}  // namespace geofun
