#pragma once

#include <functional>

#include "geofun/space.hpp"

namespace geofun {

/// Discrete curve: a strictly increasing parameter grid and one point per
/// grid node. Row i of `points` is the point at `params[i]`.
struct Curve {
  Vector params;
  Matrix points;

  Curve() = default;
  Curve(Vector params, Matrix points);

  int size() const { return static_cast<int>(params.size()); }
  int dim() const { return static_cast<int>(points.cols()); }
  Vector point(int i) const { return points.row(i).transpose(); }
};

/// Curve as a callable on a closed parameter interval.
struct ParamCurve {
  double t_begin = 0.0;
  double t_end = 1.0;
  std::function<Vector(double)> value;

  Vector operator()(double t) const { return value(t); }
};

ParamCurve as_param_curve(const Curve& c);

/// Arc of g over [alpha, beta], reparametrized onto [0,1]:
/// gamma -> g(alpha + gamma*(beta - alpha)). alpha == beta yields the
/// constant arc at g(alpha); alpha > beta reverses orientation.
ParamCurve restrict_curve(const ParamCurve& g, double alpha, double beta);

}  // namespace geofun
