#pragma once

#include "geofun/odd_homeomorphism.hpp"
#include "geofun/sampling.hpp"
#include "geofun/solution.hpp"

namespace geofun {

/// Interpolation map built from an odd increasing homeomorphism v.
/// For a != b the segment direction e = (a-b)/|a-b| is rescaled through
/// v along e and left untouched orthogonally:
///   f(a,b,gamma) = T^{-1}((1-gamma) T(a) + gamma T(b)),
///   T(c) = c + (v((c,e)) - (c,e)) e,  T^{-1}(c) = c + (v^{-1}((c,e)) - (c,e)) e.
/// Coincident endpoints (within eq_threshold, which scales with the
/// operand norms) short-circuit to a.
class ReparamSolution final : public GeodesicSolution {
 public:
  ReparamSolution(SpaceContext ctx, OddHomeomorphism v, Smoothness s,
                  double eq_threshold_scale = 1e-12);

  Vector eval(const Vector& a, const Vector& b, UnitParam gamma) const override;

  const OddHomeomorphism& map() const { return v_; }

 private:
  OddHomeomorphism v_;
  double eq_threshold_scale_;
};

/// Metric-geometry side effects of the construction: every value lies
/// on the segment between the endpoints, so segment lengths add up,
/// balls are stable, and increments point along (a-b).
struct SegmentChecks {
  double segment_residual = 0.0;   // | |a-f| + |f-b| - |a-b| |
  std::int64_t ball_violations = 0;
  double direction_residual = 0.0;
};

SegmentChecks check_segment_properties(const GeodesicSolution& f,
                                       const SampleSpec& spec);

}  // namespace geofun
