#include "geofun/chart.hpp"

#include <cmath>
#include <stdexcept>

namespace geofun {

Chart identity_chart(int dim) {
  Chart c;
  c.label = "identity";
  c.forward = [](const Vector& p) { return p; };
  c.inverse = [](const Vector& p) { return p; };
  c.jacobian = [dim](const Vector&) { return Matrix::Identity(dim, dim); };
  c.hessian = [dim](const Vector&) {
    return std::vector<Matrix>(dim, Matrix::Zero(dim, dim));
  };
  return c;
}

std::vector<Matrix> quadratic_chart_coeffs(int dim) {
  std::vector<Matrix> c(dim, Matrix::Zero(dim, dim));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j)
      for (int k = 0; k < dim; ++k) {
        // Symmetric in (j,k), entries in {0.1, 0.2, 0.3}.
        const int key = (i + j * k + j + k) % 3;
        c[i](j, k) = 0.1 * (1 + key);
      }
  return c;
}

Chart quadratic_chart(int dim, double eps) {
  if (!(eps >= 0.0 && eps <= 0.1))
    throw std::domain_error("quadratic_chart: eps must lie in [0, 0.1]");
  auto coeffs = quadratic_chart_coeffs(dim);

  auto fwd = [coeffs, eps, dim](const Vector& x) {
    Vector out = x;
    for (int i = 0; i < dim; ++i) out[i] += eps * x.dot(coeffs[i] * x);
    return out;
  };
  auto jac = [coeffs, eps, dim](const Vector& x) {
    Matrix j = Matrix::Identity(dim, dim);
    for (int i = 0; i < dim; ++i) j.row(i) += 2.0 * eps * (coeffs[i] * x).transpose();
    return j;
  };

  Chart c;
  c.label = "quadratic(eps=" + std::to_string(eps) + ")";
  c.forward = fwd;
  c.jacobian = jac;
  c.hessian = [coeffs, eps, dim](const Vector&) {
    std::vector<Matrix> h(dim);
    for (int i = 0; i < dim; ++i) h[i] = 2.0 * eps * coeffs[i];
    return h;
  };
  c.inverse = [fwd, jac](const Vector& y) {
    Vector x = y;
    for (int it = 0; it < 50; ++it) {
      const Vector r = fwd(x) - y;
      const Vector dx = jac(x).lu().solve(r);
      x -= dx;
      if (dx.norm() <= 1e-14 * (1.0 + y.norm())) return x;
    }
    throw std::runtime_error("quadratic_chart: inverse Newton did not converge");
  };
  return c;
}

}  // namespace geofun
