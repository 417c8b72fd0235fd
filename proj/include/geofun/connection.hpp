#pragma once

#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "geofun/chart.hpp"
#include "geofun/solution.hpp"

namespace geofun {

/// Central-difference scheme for the mixed partials of the midpoint
/// interpolant. The 4-point stencil has a double-precision cancellation
/// floor of about 1e-16/h^2, so steps below ~1e-5 only amplify rounding.
struct FDScheme {
  double step = 1e-3;
  bool richardson = false;
};

/// Coefficient array G[i](j,k) of a connection at one point.
struct ConnectionCoeffs {
  std::vector<Matrix> comp;

  static ConnectionCoeffs zero(int dim);
  int dim() const { return static_cast<int>(comp.size()); }
  double max_abs() const;
  double max_abs_diff(const ConnectionCoeffs& other) const;
  double max_asymmetry() const;  // max |G[i](j,k) - G[i](k,j)|
  /// Quadratic form sum_jk G[i](j,k) u_j u_k, one entry per i.
  Vector quadratic(const Vector& u) const;
};

/// Connection coefficients of the interpolation map at a point: minus
/// four times the mixed second partial of f in its two point slots at
/// the midpoint parameter, one 4-point stencil per (j,k).
ConnectionCoeffs extract_gamma(const GeodesicSolution& f, const Vector& a,
                               const FDScheme& scheme);

/// First partials of the midpoint interpolant in each point slot; both
/// must equal half the identity. Returns the two max deviations.
struct FirstDerivativeResiduals {
  double first_slot = 0.0;
  double second_slot = 0.0;
};
FirstDerivativeResiduals check_first_derivative(const GeodesicSolution& f,
                                                const Vector& a,
                                                const FDScheme& scheme);

/// Consistency of the coefficients under a coordinate change. The
/// coefficients on the moved chart come from conjugating f through the
/// chart and re-extracting, so the relation
///   H^i_jk + Gbar^i_lm J^l_j J^m_k = J^i_l G^l_jk
/// is tested as a genuine law rather than by transforming G directly.
double check_transformation_law(std::shared_ptr<const GeodesicSolution> f,
                                const Chart& chart, const Vector& a,
                                const FDScheme& scheme);

/// The solution seen through a chart:
/// (abar, bbar, g) -> chart(f(chart^-1(abar), chart^-1(bbar), g)).
std::shared_ptr<const GeodesicSolution> conjugate_solution(
    std::shared_ptr<const GeodesicSolution> f, const Chart& chart);

/// Field of coefficients, either analytic or extracted on demand.
struct ConnectionField {
  int dim = 0;
  bool symmetric_jk = true;
  std::string provenance;
  std::function<ConnectionCoeffs(const Vector&)> eval;
};

ConnectionField zero_connection(int dim);
ConnectionField extracted_connection(std::shared_ptr<const GeodesicSolution> f,
                                     const FDScheme& scheme);

/// Extraction plus the two-step convergence probe: coefficients at h,
/// h/2 and h/4 must be settling (second difference at most half the
/// first, up to a rounding floor) for the result to count as reliable.
struct ExtractionProbe {
  ConnectionCoeffs gamma;
  bool reliable = false;
  double diff_coarse = 0.0;  // |G_h - G_{h/2}|
  double diff_fine = 0.0;    // |G_{h/2} - G_{h/4}|
};
ExtractionProbe extract_with_reliability(const GeodesicSolution& f,
                                         const Vector& a, const FDScheme& scheme);

}  // namespace geofun
