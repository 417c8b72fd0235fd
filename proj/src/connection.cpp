#include "geofun/connection.hpp"

#include <cmath>
#include <stdexcept>

namespace geofun {

ConnectionCoeffs ConnectionCoeffs::zero(int dim) {
  ConnectionCoeffs g;
  g.comp.assign(static_cast<size_t>(dim), Matrix::Zero(dim, dim));
  return g;
}

double ConnectionCoeffs::max_abs() const {
  double m = 0.0;
  for (const auto& c : comp) m = std::max(m, c.cwiseAbs().maxCoeff());
  return m;
}

double ConnectionCoeffs::max_abs_diff(const ConnectionCoeffs& other) const {
  double m = 0.0;
  for (size_t i = 0; i < comp.size(); ++i)
    m = std::max(m, (comp[i] - other.comp[i]).cwiseAbs().maxCoeff());
  return m;
}

double ConnectionCoeffs::max_asymmetry() const {
  double m = 0.0;
  for (const auto& c : comp)
    m = std::max(m, (c - c.transpose()).cwiseAbs().maxCoeff());
  return m;
}

Vector ConnectionCoeffs::quadratic(const Vector& u) const {
  Vector out(dim());
  for (int i = 0; i < dim(); ++i) out[i] = u.dot(comp[static_cast<size_t>(i)] * u);
  return out;
}

namespace {

ConnectionCoeffs extract_raw(const GeodesicSolution& f, const Vector& a, double h) {
  const int n = f.context().dim();
  const UnitParam half(0.5);
  ConnectionCoeffs g = ConnectionCoeffs::zero(n);
  for (int j = 0; j < n; ++j) {
    Vector aj_p = a, aj_m = a;
    aj_p[j] += h;
    aj_m[j] -= h;
    for (int k = 0; k < n; ++k) {
      Vector ak_p = a, ak_m = a;
      ak_p[k] += h;
      ak_m[k] -= h;
      const Vector f_pp = f.eval(aj_p, ak_p, half);
      const Vector f_pm = f.eval(aj_p, ak_m, half);
      const Vector f_mp = f.eval(aj_m, ak_p, half);
      const Vector f_mm = f.eval(aj_m, ak_m, half);
      const Vector stencil = (f_pp - f_pm) - (f_mp - f_mm);
      if (!stencil.allFinite())
        throw std::runtime_error(
            "extract_gamma: non-finite stencil value near coordinate pair (" +
            std::to_string(j) + "," + std::to_string(k) + ")");
      // -4 * stencil / (4 h^2)
      const Vector gamma_jk = -stencil / (h * h);
      for (int i = 0; i < n; ++i) g.comp[static_cast<size_t>(i)](j, k) = gamma_jk[i];
    }
  }
  return g;
}

ConnectionCoeffs richardson_combine(const ConnectionCoeffs& coarse,
                                    const ConnectionCoeffs& fine) {
  ConnectionCoeffs out = ConnectionCoeffs::zero(coarse.dim());
  for (size_t i = 0; i < out.comp.size(); ++i)
    out.comp[i] = (4.0 * fine.comp[i] - coarse.comp[i]) / 3.0;
  return out;
}

}  // namespace

ConnectionCoeffs extract_gamma(const GeodesicSolution& f, const Vector& a,
                               const FDScheme& scheme) {
  if (!(scheme.step > 0.0)) throw std::domain_error("extract_gamma: step must be > 0");
  require_finite(a, "extract_gamma");
  const ConnectionCoeffs coarse = extract_raw(f, a, scheme.step);
  if (!scheme.richardson) return coarse;
  const ConnectionCoeffs fine = extract_raw(f, a, 0.5 * scheme.step);
  return richardson_combine(coarse, fine);
}

namespace {

Matrix first_slot_partials(const GeodesicSolution& f, const Vector& a, double h) {
  const int n = f.context().dim();
  const UnitParam half(0.5);
  Matrix d(n, n);
  for (int j = 0; j < n; ++j) {
    Vector ap = a, am = a;
    ap[j] += h;
    am[j] -= h;
    d.col(j) = (f.eval(ap, a, half) - f.eval(am, a, half)) / (2.0 * h);
  }
  return d;
}

Matrix second_slot_partials(const GeodesicSolution& f, const Vector& a, double h) {
  const int n = f.context().dim();
  const UnitParam half(0.5);
  Matrix d(n, n);
  for (int j = 0; j < n; ++j) {
    Vector ap = a, am = a;
    ap[j] += h;
    am[j] -= h;
    d.col(j) = (f.eval(a, ap, half) - f.eval(a, am, half)) / (2.0 * h);
  }
  return d;
}

}  // namespace

FirstDerivativeResiduals check_first_derivative(const GeodesicSolution& f,
                                                const Vector& a,
                                                const FDScheme& scheme) {
  const int n = f.context().dim();
  Matrix dy = first_slot_partials(f, a, scheme.step);
  Matrix dz = second_slot_partials(f, a, scheme.step);
  if (scheme.richardson) {
    dy = (4.0 * first_slot_partials(f, a, 0.5 * scheme.step) - dy) / 3.0;
    dz = (4.0 * second_slot_partials(f, a, 0.5 * scheme.step) - dz) / 3.0;
  }
  const Matrix half_id = 0.5 * Matrix::Identity(n, n);
  return FirstDerivativeResiduals{(dy - half_id).cwiseAbs().maxCoeff(),
                                  (dz - half_id).cwiseAbs().maxCoeff()};
}

namespace {

class ConjugatedSolution final : public GeodesicSolution {
 public:
  ConjugatedSolution(std::shared_ptr<const GeodesicSolution> f, Chart chart)
      : GeodesicSolution(f->context(), f->smoothness()),
        f_(std::move(f)),
        chart_(std::move(chart)) {}

  Vector eval(const Vector& a, const Vector& b, UnitParam gamma) const override {
    return chart_.forward(f_->eval(chart_.inverse(a), chart_.inverse(b), gamma));
  }

 private:
  std::shared_ptr<const GeodesicSolution> f_;
  Chart chart_;
};

}  // namespace

std::shared_ptr<const GeodesicSolution> conjugate_solution(
    std::shared_ptr<const GeodesicSolution> f, const Chart& chart) {
  return std::make_shared<ConjugatedSolution>(std::move(f), chart);
}

double check_transformation_law(std::shared_ptr<const GeodesicSolution> f,
                                const Chart& chart, const Vector& a,
                                const FDScheme& scheme) {
  const int n = f->context().dim();
  const ConnectionCoeffs gamma = extract_gamma(*f, a, scheme);

  // Re-extract on the moved chart by conjugating the map itself.
  auto conj = conjugate_solution(std::move(f), chart);
  const Vector a_bar = chart.forward(a);
  const ConnectionCoeffs gamma_bar = extract_gamma(*conj, a_bar, scheme);

  const Matrix jac = chart.jacobian(a);
  const auto hess = chart.hessian(a);

  double residual = 0.0;
  for (int i = 0; i < n; ++i) {
    // Gbar^i_lm J^l_j J^m_k, contracted over l and m.
    const Matrix pulled = jac.transpose() * gamma_bar.comp[static_cast<size_t>(i)] * jac;
    Matrix rhs = Matrix::Zero(n, n);
    for (int l = 0; l < n; ++l) rhs += jac(i, l) * gamma.comp[static_cast<size_t>(l)];
    const Matrix defect = hess[static_cast<size_t>(i)] + pulled - rhs;
    residual = std::max(residual, defect.cwiseAbs().maxCoeff());
  }
  return residual;
}

ConnectionField zero_connection(int dim) {
  ConnectionField field;
  field.dim = dim;
  field.symmetric_jk = true;
  field.provenance = "analytic:zero";
  field.eval = [dim](const Vector&) { return ConnectionCoeffs::zero(dim); };
  return field;
}

ConnectionField extracted_connection(std::shared_ptr<const GeodesicSolution> f,
                                     const FDScheme& scheme) {
  ConnectionField field;
  field.dim = f->context().dim();
  field.symmetric_jk = true;
  field.provenance = "extracted(h=" + std::to_string(scheme.step) +
                     (scheme.richardson ? ",richardson" : "") + ")";
  field.eval = [f, scheme](const Vector& a) { return extract_gamma(*f, a, scheme); };
  return field;
}

ExtractionProbe extract_with_reliability(const GeodesicSolution& f, const Vector& a,
                                         const FDScheme& scheme) {
  ExtractionProbe probe;
  const ConnectionCoeffs g_h = extract_raw(f, a, scheme.step);
  const ConnectionCoeffs g_h2 = extract_raw(f, a, 0.5 * scheme.step);
  const ConnectionCoeffs g_h4 = extract_raw(f, a, 0.25 * scheme.step);
  probe.diff_coarse = g_h.max_abs_diff(g_h2);
  probe.diff_fine = g_h2.max_abs_diff(g_h4);
  probe.gamma = scheme.richardson ? richardson_combine(g_h, g_h2) : g_h;
  const double floor = 1e-8 * (1.0 + probe.gamma.max_abs());
  probe.reliable = probe.diff_fine <= std::max(0.5 * probe.diff_coarse, floor);
  return probe;
}

}  // namespace geofun
