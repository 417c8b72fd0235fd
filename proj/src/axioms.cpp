#include "geofun/axioms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace geofun {

namespace {

constexpr int kCornerPairs = 20;

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t lane) {
  // splitmix64 step keeps the per-law substreams decorrelated.
  std::uint64_t z = seed + (lane + 1) * 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

class ResidualTracker {
 public:
  void add(double r, const Witness& w) {
    residuals_.push_back(r);
    if (r > worst_.residual || residuals_.size() == 1) {
      worst_ = w;
      worst_.residual = r;
    }
  }

  void finalize(AxiomCheck& check) const {
    check.n_evaluations = static_cast<std::int64_t>(residuals_.size());
    if (residuals_.empty()) return;
    std::vector<double> sorted = residuals_;
    std::sort(sorted.begin(), sorted.end());
    check.max_residual = sorted.back();
    const size_t idx =
        static_cast<size_t>(std::ceil(0.99 * static_cast<double>(sorted.size()))) - 1;
    check.p99_residual = sorted[std::min(idx, sorted.size() - 1)];
    check.worst = worst_;
  }

 private:
  std::vector<double> residuals_;
  Witness worst_;
};

template <typename Body>
void guarded(AxiomCheck& check, ResidualTracker& tracker, const Witness& w,
             Body&& body) {
  try {
    body();
  } catch (const std::exception& e) {
    ++check.eval_failures;
    if (check.note.empty()) check.note = std::string("evaluation failure: ") + e.what();
    Witness bad = w;
    tracker.add(std::numeric_limits<double>::infinity(), bad);
  }
}

}  // namespace

bool AxiomReport::all_pass() const {
  for (const auto& c : checks)
    if (!c.pass) return false;
  return true;
}

AxiomCheck check_boundary(const GeodesicSolution& f, const SampleSpec& spec,
                          double tolerance) {
  spec.validate();
  AxiomCheck check;
  check.law = "boundary";
  check.tolerance = tolerance;
  const int dim = f.context().dim();
  SampleStream rng(derive_seed(spec.seed, 0));
  ResidualTracker tracker;
  for (std::int64_t i = 0; i < spec.n_samples; ++i) {
    Witness w;
    w.a = rng.point_in_ball(dim, spec.point_radius);
    w.b = rng.point_in_ball(dim, spec.point_radius);
    guarded(check, tracker, w, [&] {
      const double r0 = (f.eval(w.a, w.b, UnitParam(0.0)) - w.a).norm();
      const double r1 = (f.eval(w.a, w.b, UnitParam(1.0)) - w.b).norm();
      w.gamma = r0 >= r1 ? 0.0 : 1.0;
      tracker.add(std::max(r0, r1), w);
    });
  }
  tracker.finalize(check);
  check.pass = check.eval_failures == 0 && check.max_residual <= tolerance;
  return check;
}

AxiomCheck check_composition(const GeodesicSolution& f, const SampleSpec& spec,
                             double tolerance) {
  spec.validate();
  AxiomCheck check;
  check.law = "composition";
  check.tolerance = tolerance;
  const int dim = f.context().dim();
  SampleStream rng(derive_seed(spec.seed, 1));
  ResidualTracker tracker;

  auto probe = [&](const Vector& a, const Vector& b, double alpha, double beta,
                   double gamma) {
    Witness w;
    w.a = a;
    w.b = b;
    w.alpha = alpha;
    w.beta = beta;
    w.gamma = gamma;
    guarded(check, tracker, w, [&] {
      const double prm = blend(alpha, beta, gamma);
      const Vector lhs = f.eval(a, b, UnitParam(prm));
      const Vector fa = f.eval(a, b, UnitParam(alpha));
      const Vector fb = f.eval(a, b, UnitParam(beta));
      const Vector rhs = f.eval(fa, fb, UnitParam(gamma));
      tracker.add((lhs - rhs).norm(), w);
    });
  };

  if (spec.grid_gammas.has_value()) {
    for (const auto& t : *spec.grid_gammas) {
      const Vector a = rng.point_in_ball(dim, spec.point_radius);
      const Vector b = rng.point_in_ball(dim, spec.point_radius);
      probe(a, b, t[0], t[1], t[2]);
    }
  } else {
    for (std::int64_t i = 0; i < spec.n_samples; ++i) {
      const Vector a = rng.point_in_ball(dim, spec.point_radius);
      const Vector b = rng.point_in_ball(dim, spec.point_radius);
      probe(a, b, rng.uniform01(), rng.uniform01(), rng.uniform01());
    }
  }

  // Corner triples catch branch bugs at the parameter boundary that
  // random draws rarely hit.
  const auto corners = corner_triples();
  for (int p = 0; p < kCornerPairs; ++p) {
    const Vector a = rng.point_in_ball(dim, spec.point_radius);
    const Vector b = rng.point_in_ball(dim, spec.point_radius);
    for (const auto& t : corners) probe(a, b, t[0], t[1], t[2]);
  }

  tracker.finalize(check);
  check.pass = check.eval_failures == 0 && check.max_residual <= tolerance;
  return check;
}

std::vector<AxiomCheck> check_derived(const GeodesicSolution& f,
                                      const SampleSpec& spec, double tol_diagonal,
                                      double tol_reversal) {
  spec.validate();
  const int dim = f.context().dim();

  AxiomCheck diag;
  diag.law = "diagonal";
  diag.tolerance = tol_diagonal;
  {
    SampleStream rng(derive_seed(spec.seed, 2));
    ResidualTracker tracker;
    for (std::int64_t i = 0; i < spec.n_samples; ++i) {
      Witness w;
      w.a = rng.point_in_ball(dim, spec.point_radius);
      w.b = w.a;
      w.gamma = rng.uniform01();
      guarded(diag, tracker, w, [&] {
        tracker.add((f.eval(w.a, w.a, UnitParam(w.gamma)) - w.a).norm(), w);
      });
    }
    tracker.finalize(diag);
    diag.pass = diag.eval_failures == 0 && diag.max_residual <= tol_diagonal;
  }

  AxiomCheck rev;
  rev.law = "reversal";
  rev.tolerance = tol_reversal;
  {
    SampleStream rng(derive_seed(spec.seed, 3));
    ResidualTracker tracker;
    for (std::int64_t i = 0; i < spec.n_samples; ++i) {
      Witness w;
      w.a = rng.point_in_ball(dim, spec.point_radius);
      w.b = rng.point_in_ball(dim, spec.point_radius);
      w.gamma = rng.uniform01();
      guarded(rev, tracker, w, [&] {
        const Vector lhs = f.eval(w.a, w.b, UnitParam(1.0 - w.gamma));
        const Vector rhs = f.eval(w.b, w.a, UnitParam(w.gamma));
        tracker.add((lhs - rhs).norm(), w);
      });
    }
    tracker.finalize(rev);
    rev.pass = rev.eval_failures == 0 && rev.max_residual <= tol_reversal;
  }

  return {diag, rev};
}

std::vector<AxiomCheck> check_jensen_characterization(int dim, int depth,
                                                      double tolerance) {
  LinearSolution linear(SpaceContext::standard(dim));
  Vector zero = Vector::Zero(dim);
  Vector e1 = Vector::Zero(dim);
  e1[0] = 1.0;
  auto q = [&](double gamma) {
    return linear.eval(zero, e1, UnitParam(gamma)).dot(e1);
  };

  const std::int64_t n = std::int64_t(1) << depth;

  AxiomCheck ends;
  ends.law = "jensen:endpoints";
  ends.tolerance = tolerance;
  {
    ResidualTracker tracker;
    auto at = [&](double gamma, double expected) {
      Witness w;
      w.gamma = gamma;
      tracker.add(std::abs(q(gamma) - expected), w);
    };
    at(0.0, 0.0);
    at(1.0, 1.0);
    at(0.5, 0.5);
    tracker.finalize(ends);
    ends.pass = ends.max_residual <= tolerance;
  }

  AxiomCheck mid;
  mid.law = "jensen:midpoint";
  mid.tolerance = tolerance;
  {
    ResidualTracker tracker;
    for (std::int64_t i = 0; i <= n; ++i) {
      for (std::int64_t j = i; j <= n; j += std::max<std::int64_t>(1, n / 64)) {
        const double alpha = static_cast<double>(i) / static_cast<double>(n);
        const double beta = static_cast<double>(j) / static_cast<double>(n);
        Witness w;
        w.alpha = alpha;
        w.beta = beta;
        const double lhs = q(0.5 * (alpha + beta));
        const double rhs = 0.5 * (q(alpha) + q(beta));
        tracker.add(std::abs(lhs - rhs), w);
      }
    }
    tracker.finalize(mid);
    mid.pass = mid.max_residual <= tolerance;
  }

  AxiomCheck ident;
  ident.law = "jensen:identity-profile";
  ident.tolerance = tolerance;
  {
    // The midpoint recursion pinned at q(0)=0, q(1)=1 reproduces the
    // dyadic rationals exactly; the profile must match it node by node.
    std::vector<double> expected(static_cast<size_t>(n) + 1, 0.0);
    expected[static_cast<size_t>(n)] = 1.0;
    for (std::int64_t step = n; step >= 2; step /= 2)
      for (std::int64_t i = step / 2; i <= n; i += step)
        expected[static_cast<size_t>(i)] =
            0.5 * (expected[static_cast<size_t>(i - step / 2)] +
                   expected[static_cast<size_t>(i + step / 2)]);
    ResidualTracker tracker;
    for (std::int64_t i = 0; i <= n; ++i) {
      const double gamma = static_cast<double>(i) / static_cast<double>(n);
      Witness w;
      w.gamma = gamma;
      tracker.add(std::abs(q(gamma) - expected[static_cast<size_t>(i)]), w);
    }
    tracker.finalize(ident);
    ident.pass = ident.max_residual <= tolerance;
  }

  return {ends, mid, ident};
}

AxiomReport run_axioms(const CatalogEntry& entry, const SampleSpec& spec) {
  AxiomReport report;
  report.solution_id = entry.id;
  report.dim = entry.solution->context().dim();
  report.seed = spec.seed;
  const auto& tol = entry.tolerances;
  report.checks.push_back(check_boundary(*entry.solution, spec, tol.boundary));
  report.checks.push_back(check_composition(*entry.solution, spec, tol.composition));
  for (auto& c : check_derived(*entry.solution, spec, tol.diagonal, tol.reversal))
    report.checks.push_back(std::move(c));
  if (entry.id == "linear") {
    for (auto& c : check_jensen_characterization(report.dim))
      report.checks.push_back(std::move(c));
  }
  return report;
}

}  // namespace geofun
