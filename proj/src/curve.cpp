#include "geofun/curve.hpp"

#include <cmath>

namespace geofun {

Curve::Curve(Vector params_in, Matrix points_in)
    : params(std::move(params_in)), points(std::move(points_in)) {
  if (params.size() != points.rows())
    throw std::domain_error("Curve: params/points size mismatch");
  if (params.size() < 1) throw std::domain_error("Curve: empty grid");
  for (int i = 0; i + 1 < params.size(); ++i)
    if (!(params[i] < params[i + 1]))
      throw std::domain_error("Curve: params must be strictly increasing");
  if (!params.allFinite() || !points.allFinite())
    throw std::domain_error("Curve: non-finite data");
}

ParamCurve as_param_curve(const Curve& c) {
  // Piecewise-linear interpolation between grid nodes.
  Curve copy = c;
  return ParamCurve{
      c.params[0], c.params[c.size() - 1],
      [copy](double t) -> Vector {
        const Vector& p = copy.params;
        if (t <= p[0]) return copy.point(0);
        int k = copy.size() - 1;
        if (t >= p[k]) return copy.point(k);
        int lo = 0, hi = k;
        while (hi - lo > 1) {
          int mid = (lo + hi) / 2;
          (p[mid] <= t ? lo : hi) = mid;
        }
        double u = (t - p[lo]) / (p[lo + 1] - p[lo]);
        return ((1.0 - u) * copy.points.row(lo) + u * copy.points.row(lo + 1))
            .transpose();
      }};
}

ParamCurve restrict_curve(const ParamCurve& g, double alpha, double beta) {
  if (!(alpha >= g.t_begin && alpha <= g.t_end) ||
      !(beta >= g.t_begin && beta <= g.t_end))
    throw std::domain_error("restrict_curve: parameters outside curve domain");
  auto f = g.value;
  return ParamCurve{0.0, 1.0, [f, alpha, beta](double gamma) {
                      return f(blend(alpha, beta, gamma));
                    }};
}

}  // namespace geofun
