#pragma once

#include <memory>
#include <string>
#include <vector>

#include "geofun/gaussian_map.hpp"
#include "geofun/solution.hpp"
#include "geofun/weierstrass.hpp"

namespace geofun {

/// Per-law pass thresholds for a cataloged solution. Exact families get
/// rounding-level thresholds; quadrature-backed families get budgets
/// derived from their quadrature/inversion tolerances.
struct AxiomTolerances {
  double boundary = 1e-12;
  double composition = 1e-12;
  double diagonal = 1e-12;
  double reversal = 1e-12;
};

struct CatalogOptions {
  GaussianOptions gaussian;
  WeierstrassConfig weierstrass;
  WeierstrassMapOptions weierstrass_map;
  Matrix metric;  // empty -> standard dot product
};

struct CatalogEntry {
  std::string id;
  std::shared_ptr<const GeodesicSolution> solution;
  AxiomTolerances tolerances;
  bool broken = false;
};

/// Ids: "linear", "reparam:identity", "reparam:gaussian",
/// "reparam:weierstrass", plus the negative-control fixtures
/// "broken:constant" and "broken:bump" ("broken-fixture" is an alias).
CatalogEntry make_solution(const std::string& id, int dim,
                           const CatalogOptions& opts = {});
bool catalog_has(const std::string& id);
std::vector<std::string> catalog_ids();
std::vector<std::string> fixture_ids();

/// Scalar map behind a catalog id ("linear" and "reparam:identity" both
/// use the identity map). Fixtures have none.
OddHomeomorphism catalog_map(const std::string& id, const CatalogOptions& opts = {});

}  // namespace geofun
