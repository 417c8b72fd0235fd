#include "geofun/spray.hpp"

#include <cmath>
#include <stdexcept>

namespace geofun {

Spray build_spray(const OddHomeomorphism& v, const SpaceContext& ctx,
                  double fd_step) {
  if (!v.has_d1())
    throw std::domain_error("build_spray: v exposes no first derivative");

  std::function<double(double)> r;
  if (v.has_d2()) {
    auto d1 = v.forward_d1;
    auto d2 = v.forward_d2;
    r = [d1, d2](double t) {
      const double den = d1(t);
      if (!(den > 0.0))
        throw std::runtime_error("build_spray: v' not positive at t=" +
                                 std::to_string(t));
      return d2(t) / den;
    };
  } else {
    auto d1 = v.forward_d1;
    r = [d1, fd_step](double t) {
      const double den = d1(t);
      if (!(den > 0.0))
        throw std::runtime_error("build_spray: v' not positive at t=" +
                                 std::to_string(t));
      return (d1(t + fd_step) - d1(t - fd_step)) / (2.0 * fd_step) / den;
    };
  }

  Spray spray;
  spray.r = r;
  spray.s = [r, ctx](const Vector& a, const Vector& b) -> Vector {
    const double nb = ctx.norm(b);
    if (nb == 0.0) return Vector::Zero(b.size());
    return r(ctx.dot(a, b) / nb) * nb * b;
  };
  return spray;
}

double check_homogeneity(const Spray& spray, int dim, const SampleSpec& spec,
                         const std::vector<double>& lambdas) {
  spec.validate();
  SampleStream rng(spec.seed);
  double worst = 0.0;
  for (std::int64_t i = 0; i < spec.n_samples; ++i) {
    const Vector a = rng.point_in_ball(dim, spec.point_radius);
    const Vector b = rng.point_in_ball(dim, spec.point_radius);
    const Vector base = spray.s(a, b);
    for (double lam : lambdas) {
      const Vector lhs = spray.s(a, lam * b);
      worst = std::max(worst, (lhs - lam * lam * base).norm());
    }
  }
  return worst;
}

}  // namespace geofun
