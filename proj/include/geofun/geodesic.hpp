#pragma once

#include <functional>
#include <memory>

#include "geofun/connection.hpp"
#include "geofun/curve.hpp"
#include "geofun/sampling.hpp"
#include "geofun/solution.hpp"
#include "geofun/spray.hpp"

namespace geofun {

/// Curve between two points on the dyadic grid j/2^depth. `points`
/// holds the direct evaluations f(a,b,j/2^depth); `midpoints` holds the
/// same grid filled by recursive halving m(u,w) = f(u,w,1/2), which the
/// self-composition law forces to coincide with the direct values.
struct SubdivisionCurve {
  int depth = 0;
  Vector params;
  Matrix points;
  Matrix midpoints;

  int size() const { return static_cast<int>(params.size()); }
  Vector point(int i) const { return points.row(i).transpose(); }
  double max_construction_gap() const;  // sup |points - midpoints|
};

SubdivisionCurve subdivide(const GeodesicSolution& f, const Vector& a,
                           const Vector& b, int depth);

/// g'' = acceleration(g, g'); trajectories whose norm leaves the blow-up
/// bound abort with the escape time in the error message.
struct SecondOrderOde {
  std::function<Vector(const Vector&, const Vector&)> acceleration;
  double blowup_bound = 1e3;
};

SecondOrderOde ode_from_spray(const Spray& spray);
SecondOrderOde ode_from_connection(const ConnectionField& field);

/// Classical 4th-order one-step integration of (g, g'). Output lands
/// exactly on t_grid; each grid interval is cut into equal substeps no
/// longer than max_step.
Curve integrate(const SecondOrderOde& ode, const Vector& x0, const Vector& v0,
                const Vector& t_grid, double max_step);

struct ShootingResult {
  Vector v0;
  int iterations = 0;
  double miss = 0.0;
  Curve trajectory;
};

/// Boundary-value solve: initial velocity seeded by a one-sided divided
/// difference of the subdivision curve (with one halving refinement),
/// then corrected by rank-one secant updates on the terminal miss.
ShootingResult shoot(const SecondOrderOde& ode, const SubdivisionCurve& path,
                     const Vector& b, double max_step, double tol = 1e-10,
                     int max_iter = 20);

struct CompareResult {
  double sup_distance = 0.0;
  ShootingResult shooting;
  SubdivisionCurve subdivision;
};

/// Sup distance over the dyadic grid between the subdivision curve of f
/// and the trajectory of the second-order equation shot from a to b.
CompareResult compare(const GeodesicSolution& f, const SecondOrderOde& ode,
                      const Vector& a, const Vector& b, int depth,
                      double ode_step);

/// Membership test of the constructed curve: for dyadic alpha, beta and
/// gamma (split so the blended parameter stays on the grid),
/// g(alpha + gamma (beta-alpha)) must equal f(g(alpha), g(beta), gamma).
double check_arc_closure(const GeodesicSolution& f, const SubdivisionCurve& g,
                         const SampleSpec& spec);

}  // namespace geofun
