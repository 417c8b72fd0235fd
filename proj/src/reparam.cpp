#include "geofun/reparam.hpp"

namespace geofun {

ReparamSolution::ReparamSolution(SpaceContext ctx, OddHomeomorphism v,
                                 Smoothness s, double eq_threshold_scale)
    : GeodesicSolution(std::move(ctx), s),
      v_(std::move(v)),
      eq_threshold_scale_(eq_threshold_scale) {
  if (!v_.forward || !v_.inverse)
    throw std::domain_error("ReparamSolution: v needs forward and inverse");
}

Vector ReparamSolution::eval(const Vector& a, const Vector& b, UnitParam gamma) const {
  require_same_dim(a, b);
  const double g = gamma.value();

  const Vector d = a - b;
  const double dist = ctx_.norm(d);
  if (dist <= eq_threshold_scale_ * (1.0 + ctx_.norm(a) + ctx_.norm(b))) return a;

  const Vector e = d / dist;
  const double ae = ctx_.dot(a, e);
  const double be = ctx_.dot(b, e);

  const Vector ta = a + (v_.forward(ae) - ae) * e;
  const Vector tb = b + (v_.forward(be) - be) * e;
  const Vector c = affine_combine(1.0 - g, ta, g, tb);
  const double ce = ctx_.dot(c, e);
  return c + (v_.inverse(ce) - ce) * e;
}

SegmentChecks check_segment_properties(const GeodesicSolution& f,
                                       const SampleSpec& spec) {
  spec.validate();
  const SpaceContext& ctx = f.context();
  const int dim = ctx.dim();
  SegmentChecks out;

  {
    SampleStream rng(spec.seed);
    for (std::int64_t i = 0; i < spec.n_samples; ++i) {
      const Vector a = rng.point_in_ball(dim, spec.point_radius);
      const Vector b = rng.point_in_ball(dim, spec.point_radius);
      const double gamma = rng.uniform01();
      const Vector p = f.eval(a, b, UnitParam(gamma));
      const double defect =
          std::abs(ctx.norm(a - p) + ctx.norm(p - b) - ctx.norm(a - b));
      out.segment_residual = std::max(out.segment_residual, defect);
    }
  }

  {
    SampleStream rng(spec.seed + 1);
    for (std::int64_t i = 0; i < spec.n_samples; ++i) {
      const Vector center = rng.point_in_ball(dim, spec.point_radius);
      const double r = rng.uniform(0.2, spec.point_radius);
      const Vector a = center + rng.point_in_ball(dim, r);
      const Vector b = center + rng.point_in_ball(dim, r);
      const double gamma = rng.uniform01();
      const Vector p = f.eval(a, b, UnitParam(gamma));
      if (ctx.norm(p - center) > r + 1e-9) ++out.ball_violations;
    }
  }

  {
    // Separated parameters and endpoints keep the normalized increment
    // well conditioned.
    SampleStream rng(spec.seed + 2);
    for (std::int64_t i = 0; i < spec.n_samples; ++i) {
      Vector a = rng.point_in_ball(dim, spec.point_radius);
      Vector b = rng.point_in_ball(dim, spec.point_radius);
      while (ctx.norm(a - b) < 0.1) b = rng.point_in_ball(dim, spec.point_radius);
      double alpha = rng.uniform01();
      double beta = rng.uniform01();
      while (std::abs(alpha - beta) < 0.1) beta = rng.uniform01();
      const Vector fa = f.eval(a, b, UnitParam(alpha));
      const Vector fb = f.eval(a, b, UnitParam(beta));
      const Vector inc = fa - fb;
      const double n_inc = ctx.norm(inc);
      if (n_inc == 0.0) {
        out.direction_residual = std::numeric_limits<double>::infinity();
        continue;
      }
      const double sign = beta > alpha ? 1.0 : -1.0;
      const Vector expected = sign * (a - b) / ctx.norm(a - b);
      out.direction_residual =
          std::max(out.direction_residual, ctx.norm(inc / n_inc - expected));
    }
  }
  return out;
}

}  // namespace geofun
