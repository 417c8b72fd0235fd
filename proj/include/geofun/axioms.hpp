#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "geofun/catalog.hpp"
#include "geofun/sampling.hpp"
#include "geofun/solution.hpp"

namespace geofun {

struct Witness {
  Vector a, b;
  double alpha = 0.0, beta = 0.0, gamma = 0.0;
  double residual = 0.0;
};

struct AxiomCheck {
  std::string law;
  double max_residual = 0.0;
  double p99_residual = 0.0;
  std::int64_t n_evaluations = 0;
  std::int64_t eval_failures = 0;
  double tolerance = 0.0;
  bool pass = false;
  Witness worst;
  std::string note;
};

struct AxiomReport {
  std::string solution_id;
  int dim = 0;
  std::uint64_t seed = 0;
  std::vector<AxiomCheck> checks;

  bool all_pass() const;
};

/// Endpoint law: f(a,b,0) = a and f(a,b,1) = b.
AxiomCheck check_boundary(const GeodesicSolution& f, const SampleSpec& spec,
                          double tolerance);

/// Self-composition law:
/// f(a,b,(1-g)al+g be) = f(f(a,b,al), f(a,b,be), g).
/// Random triples are augmented with the corner grid evaluated on a
/// small deterministic set of point pairs.
AxiomCheck check_composition(const GeodesicSolution& f, const SampleSpec& spec,
                             double tolerance);

/// The two specializations of the composition law: f(a,a,g) = a and
/// f(a,b,1-g) = f(b,a,g).
std::vector<AxiomCheck> check_derived(const GeodesicSolution& f,
                                      const SampleSpec& spec,
                                      double tol_diagonal, double tol_reversal);

/// Scalar profile q(g) = <f(0, e1, g), e1> of the linear solution:
/// q(0)=0, q(1)=1, q(1/2)=1/2, the midpoint-averaging identity on the
/// dyadic grid of the given depth, and q(g)=g on that grid.
std::vector<AxiomCheck> check_jensen_characterization(int dim, int depth = 10,
                                                      double tolerance = 1e-12);

/// Full battery for a catalog entry (boundary, composition, diagonal,
/// reversal; plus the scalar-profile checks for the linear solution).
AxiomReport run_axioms(const CatalogEntry& entry, const SampleSpec& spec);

}  // namespace geofun
