#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace geofun {

using Vector = Eigen::VectorXd;
using Matrix = Eigen::MatrixXd;

/// Ambient space: R^n together with a symmetric positive-definite
/// scalar product. The default product is the standard dot product.
class SpaceContext {
 public:
  static SpaceContext standard(int dim);
  static SpaceContext with_metric(Matrix metric);

  int dim() const { return dim_; }
  bool is_standard() const { return standard_; }
  const Matrix& metric() const { return metric_; }

  double dot(const Vector& a, const Vector& b) const;
  double norm(const Vector& a) const;

 private:
  SpaceContext(int dim, Matrix metric, bool standard);

  int dim_;
  Matrix metric_;
  bool standard_;
};

/// Curve parameter confined to [0,1]. Values within one part in 1e12 of
/// the interval are snapped onto it; anything further out is rejected.
class UnitParam {
 public:
  explicit UnitParam(double v);
  double value() const { return value_; }

 private:
  double value_;
};

bool all_finite(const Vector& a);
void require_finite(const Vector& a, const char* what);
void require_same_dim(const Vector& a, const Vector& b);

double norm(const SpaceContext& ctx, const Vector& a);

/// alpha*a + beta*b, componentwise.
template <typename DA, typename DB>
auto affine_combine(double alpha, const Eigen::MatrixBase<DA>& a, double beta,
                    const Eigen::MatrixBase<DB>& b) {
  if (a.size() != b.size())
    throw std::domain_error("affine_combine: dimension mismatch");
  return alpha * a + beta * b;
}

/// Affine blend alpha + gamma*(beta - alpha). Equivalent to
/// (1-gamma)*alpha + gamma*beta but exact when alpha == beta.
inline double blend(double alpha, double beta, double gamma) {
  return alpha + gamma * (beta - alpha);
}

}  // namespace geofun
