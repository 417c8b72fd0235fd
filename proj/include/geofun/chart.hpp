#pragma once

#include <functional>
#include <string>
#include <vector>

#include "geofun/space.hpp"

namespace geofun {

/// Global coordinate change on R^n: a diffeomorphism with its inverse
/// and the first two derivative arrays. hessian(p)[i](j,k) is the
/// second partial of forward^i, symmetric in (j,k).
struct Chart {
  std::string label;
  std::function<Vector(const Vector&)> forward;
  std::function<Vector(const Vector&)> inverse;
  std::function<Matrix(const Vector&)> jacobian;
  std::function<std::vector<Matrix>(const Vector&)> hessian;
};

Chart identity_chart(int dim);

/// x_bar^i = x^i + eps * sum_jk c^i_jk x^j x^k with fixed bounded
/// symmetric coefficients. Invertible (Newton) for ||x|| <= 1 and
/// eps <= 0.1.
Chart quadratic_chart(int dim, double eps);

/// The coefficient array used by quadratic_chart, c[i](j,k).
std::vector<Matrix> quadratic_chart_coeffs(int dim);

}  // namespace geofun
