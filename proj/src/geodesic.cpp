#include "geofun/geodesic.hpp"

#include <cmath>
#include <stdexcept>

namespace geofun {

double SubdivisionCurve::max_construction_gap() const {
  return (points - midpoints).rowwise().norm().maxCoeff();
}

namespace {

void fill_midpoints(const GeodesicSolution& f, Matrix& grid, int lo, int hi) {
  if (hi - lo < 2) return;
  const int mid = (lo + hi) / 2;
  const Vector u = grid.row(lo).transpose();
  const Vector w = grid.row(hi).transpose();
  grid.row(mid) = f.eval(u, w, UnitParam(0.5)).transpose();
  fill_midpoints(f, grid, lo, mid);
  fill_midpoints(f, grid, mid, hi);
}

}  // namespace

SubdivisionCurve subdivide(const GeodesicSolution& f, const Vector& a,
                           const Vector& b, int depth) {
  if (depth < 1) throw std::domain_error("subdivide: depth must be >= 1");
  if (depth > 24) throw std::domain_error("subdivide: depth too large");
  require_same_dim(a, b);
  const int n = (1 << depth) + 1;
  const int dim = static_cast<int>(a.size());

  SubdivisionCurve c;
  c.depth = depth;
  c.params.resize(n);
  c.points.resize(n, dim);
  c.midpoints.resize(n, dim);
  const double denom = static_cast<double>(1 << depth);
  for (int j = 0; j < n; ++j) {
    const double t = static_cast<double>(j) / denom;
    c.params[j] = t;
    try {
      c.points.row(j) = f.eval(a, b, UnitParam(t)).transpose();
    } catch (const std::exception& e) {
      throw std::runtime_error("subdivide: evaluation failed at grid index " +
                               std::to_string(j) + ": " + e.what());
    }
  }
  c.midpoints.row(0) = a.transpose();
  c.midpoints.row(n - 1) = b.transpose();
  fill_midpoints(f, c.midpoints, 0, n - 1);
  return c;
}

SecondOrderOde ode_from_spray(const Spray& spray) {
  SecondOrderOde ode;
  auto s = spray.s;
  ode.acceleration = [s](const Vector& x, const Vector& v) -> Vector {
    return -s(x, v);
  };
  return ode;
}

SecondOrderOde ode_from_connection(const ConnectionField& field) {
  SecondOrderOde ode;
  auto eval = field.eval;
  ode.acceleration = [eval](const Vector& x, const Vector& v) -> Vector {
    return -eval(x).quadratic(v);
  };
  return ode;
}

Curve integrate(const SecondOrderOde& ode, const Vector& x0, const Vector& v0,
                const Vector& t_grid, double max_step) {
  if (!(max_step > 0.0)) throw std::domain_error("integrate: step must be > 0");
  if (t_grid.size() < 1) throw std::domain_error("integrate: empty grid");
  const int dim = static_cast<int>(x0.size());

  Matrix out(t_grid.size(), dim);
  Vector x = x0, v = v0;
  out.row(0) = x.transpose();
  const auto& acc = ode.acceleration;

  for (Eigen::Index g = 0; g + 1 < t_grid.size(); ++g) {
    const double span = t_grid[g + 1] - t_grid[g];
    const int substeps = std::max(1, static_cast<int>(std::ceil(span / max_step)));
    const double h = span / substeps;
    for (int s = 0; s < substeps; ++s) {
      const Vector k1x = v;
      const Vector k1v = acc(x, v);
      const Vector k2x = v + 0.5 * h * k1v;
      const Vector k2v = acc(x + 0.5 * h * k1x, v + 0.5 * h * k1v);
      const Vector k3x = v + 0.5 * h * k2v;
      const Vector k3v = acc(x + 0.5 * h * k2x, v + 0.5 * h * k2v);
      const Vector k4x = v + h * k3v;
      const Vector k4v = acc(x + h * k3x, v + h * k3v);
      x += (h / 6.0) * (k1x + 2.0 * k2x + 2.0 * k3x + k4x);
      v += (h / 6.0) * (k1v + 2.0 * k2v + 2.0 * k3v + k4v);
      if (!x.allFinite() || !v.allFinite() || x.norm() > ode.blowup_bound)
        throw std::runtime_error(
            "integrate: trajectory escaped at t=" +
            std::to_string(t_grid[g] + (s + 1) * h));
    }
    out.row(g + 1) = x.transpose();
  }
  return Curve(t_grid, out);
}

ShootingResult shoot(const SecondOrderOde& ode, const SubdivisionCurve& path,
                     const Vector& b, double max_step, double tol, int max_iter) {
  const auto dim = path.points.cols();
  const Vector a = path.point(0);
  const double delta = path.params[1] - path.params[0];

  // One-sided slope at t=0; the halving combination cancels the O(delta)
  // term.
  const Vector d1 = (path.point(1) - a) / delta;
  const Vector d2 = (path.point(2) - a) / (2.0 * delta);
  Vector v = 2.0 * d1 - d2;

  Matrix approx_jac = Matrix::Identity(dim, dim);
  Curve traj = integrate(ode, a, v, path.params, max_step);
  Vector miss = traj.point(traj.size() - 1) - b;

  ShootingResult result;
  result.iterations = 0;
  for (int it = 0; it < max_iter && miss.norm() > tol; ++it) {
    const Vector dv = approx_jac.lu().solve(-miss);
    const Vector v_next = v + dv;
    Curve traj_next = integrate(ode, a, v_next, path.params, max_step);
    const Vector miss_next = traj_next.point(traj_next.size() - 1) - b;
    // Rank-one secant update of the endpoint sensitivity.
    approx_jac += (miss_next - miss - approx_jac * dv) * dv.transpose() /
                  dv.squaredNorm();
    v = v_next;
    miss = miss_next;
    traj = std::move(traj_next);
    ++result.iterations;
  }
  if (miss.norm() > tol)
    throw std::runtime_error("shoot: no convergence, terminal miss " +
                             std::to_string(miss.norm()));
  result.v0 = v;
  result.miss = miss.norm();
  result.trajectory = std::move(traj);
  return result;
}

CompareResult compare(const GeodesicSolution& f, const SecondOrderOde& ode,
                      const Vector& a, const Vector& b, int depth,
                      double ode_step) {
  CompareResult result;
  result.subdivision = subdivide(f, a, b, depth);
  result.shooting = shoot(ode, result.subdivision, b, ode_step);
  result.sup_distance =
      (result.subdivision.points - result.shooting.trajectory.points)
          .rowwise()
          .norm()
          .maxCoeff();
  return result;
}

double check_arc_closure(const GeodesicSolution& f, const SubdivisionCurve& g,
                         const SampleSpec& spec) {
  spec.validate();
  const int depth = g.depth;
  const int k1 = depth / 2;       // depth of alpha, beta
  const int k2 = depth - k1;      // depth of gamma
  const std::int64_t n1 = std::int64_t(1) << k1;
  const std::int64_t n2 = std::int64_t(1) << k2;

  SampleStream rng(spec.seed);
  double worst = 0.0;
  auto probe = [&](std::int64_t ia, std::int64_t ib, std::int64_t ig) {
    const double alpha = static_cast<double>(ia) / static_cast<double>(n1);
    const double beta = static_cast<double>(ib) / static_cast<double>(n1);
    const double gamma = static_cast<double>(ig) / static_cast<double>(n2);
    // alpha + gamma*(beta - alpha) lands on the depth grid at this index:
    const std::int64_t idx = ia * n2 + ig * (ib - ia);
    const Vector lhs = g.point(static_cast<int>(idx));
    const Vector rhs = f.eval(g.point(static_cast<int>(ia * n2)),
                              g.point(static_cast<int>(ib * n2)), UnitParam(gamma));
    worst = std::max(worst, (lhs - rhs).norm());
  };

  probe(0, n1, n2 / 2);  // the construction itself
  probe(n1 / 4, n1 / 4, n2 / 2);  // constant arc
  for (std::int64_t i = 0; i < spec.n_samples; ++i) {
    const auto ia = static_cast<std::int64_t>(rng.uniform01() * (n1 + 1)) % (n1 + 1);
    const auto ib = static_cast<std::int64_t>(rng.uniform01() * (n1 + 1)) % (n1 + 1);
    const auto ig = static_cast<std::int64_t>(rng.uniform01() * (n2 + 1)) % (n2 + 1);
    probe(ia, ib, ig);
  }
  return worst;
}

}  // namespace geofun
