#include "geofun/catalog.hpp"

#include <stdexcept>

#include "geofun/reparam.hpp"

namespace geofun {

namespace {

SpaceContext make_context(int dim, const CatalogOptions& opts) {
  if (opts.metric.size() == 0) return SpaceContext::standard(dim);
  if (opts.metric.rows() != dim)
    throw std::domain_error("catalog: metric dimension mismatch");
  return SpaceContext::with_metric(opts.metric);
}

AxiomTolerances exact_tolerances() { return AxiomTolerances{}; }

AxiomTolerances quadrature_tolerances() {
  AxiomTolerances t;
  t.boundary = 1e-9;
  t.composition = 1e-8;
  t.diagonal = 1e-8;
  t.reversal = 1e-8;
  return t;
}

std::string canonical_id(const std::string& id) {
  return id == "broken-fixture" ? "broken:bump" : id;
}

}  // namespace

CatalogEntry make_solution(const std::string& raw_id, int dim,
                           const CatalogOptions& opts) {
  const std::string id = canonical_id(raw_id);
  SpaceContext ctx = make_context(dim, opts);

  CatalogEntry entry;
  entry.id = id;
  if (id == "linear") {
    entry.solution = std::make_shared<LinearSolution>(std::move(ctx));
    entry.tolerances = exact_tolerances();
  } else if (id == "reparam:identity") {
    entry.solution = std::make_shared<ReparamSolution>(
        std::move(ctx), identity_homeomorphism(), Smoothness::c_inf);
    entry.tolerances = exact_tolerances();
  } else if (id == "reparam:gaussian") {
    entry.solution = std::make_shared<ReparamSolution>(
        std::move(ctx), gaussian_homeomorphism(opts.gaussian), Smoothness::c_inf);
    entry.tolerances = quadrature_tolerances();
  } else if (id == "reparam:weierstrass") {
    entry.solution = std::make_shared<ReparamSolution>(
        std::move(ctx),
        weierstrass_homeomorphism(opts.weierstrass, opts.weierstrass_map),
        Smoothness::c1);
    entry.tolerances = quadrature_tolerances();
  } else if (id == "broken:constant") {
    entry.solution = make_constant_fixture(std::move(ctx));
    entry.tolerances = exact_tolerances();
    entry.broken = true;
  } else if (id == "broken:bump") {
    entry.solution = make_bump_fixture(std::move(ctx));
    entry.tolerances = exact_tolerances();
    entry.broken = true;
  } else {
    throw std::invalid_argument("unknown solution id: " + raw_id);
  }
  return entry;
}

bool catalog_has(const std::string& id) {
  const std::string c = canonical_id(id);
  for (const auto& known : catalog_ids())
    if (known == c) return true;
  for (const auto& known : fixture_ids())
    if (known == c) return true;
  return false;
}

std::vector<std::string> catalog_ids() {
  return {"linear", "reparam:identity", "reparam:gaussian", "reparam:weierstrass"};
}

std::vector<std::string> fixture_ids() {
  return {"broken:constant", "broken:bump"};
}

OddHomeomorphism catalog_map(const std::string& id, const CatalogOptions& opts) {
  if (id == "linear" || id == "reparam:identity") return identity_homeomorphism();
  if (id == "reparam:gaussian") return gaussian_homeomorphism(opts.gaussian);
  if (id == "reparam:weierstrass")
    return weierstrass_homeomorphism(opts.weierstrass, opts.weierstrass_map);
  throw std::invalid_argument("no scalar map for solution id: " + id);
}

}  // namespace geofun
