#include "geofun/space.hpp"

#include <cmath>

namespace geofun {

SpaceContext::SpaceContext(int dim, Matrix metric, bool standard)
    : dim_(dim), metric_(std::move(metric)), standard_(standard) {}

SpaceContext SpaceContext::standard(int dim) {
  if (dim < 1) throw std::domain_error("SpaceContext: dim must be >= 1");
  return SpaceContext(dim, Matrix::Identity(dim, dim), true);
}

SpaceContext SpaceContext::with_metric(Matrix metric) {
  if (metric.rows() != metric.cols() || metric.rows() < 1)
    throw std::domain_error("SpaceContext: metric must be square, dim >= 1");
  if (!metric.isApprox(metric.transpose(), 1e-12))
    throw std::domain_error("SpaceContext: metric must be symmetric");
  Eigen::LLT<Matrix> llt(metric);
  if (llt.info() != Eigen::Success)
    throw std::domain_error("SpaceContext: metric must be positive definite");
  if (metric.isIdentity(0.0))
    return SpaceContext(static_cast<int>(metric.rows()), std::move(metric), true);
  return SpaceContext(static_cast<int>(metric.rows()), std::move(metric), false);
}

double SpaceContext::dot(const Vector& a, const Vector& b) const {
  if (a.size() != dim_ || b.size() != dim_)
    throw std::domain_error("SpaceContext::dot: dimension mismatch");
  if (standard_) return a.dot(b);
  return a.dot(metric_ * b);
}

double SpaceContext::norm(const Vector& a) const {
  if (standard_) {
    if (a.size() != dim_)
      throw std::domain_error("SpaceContext::norm: dimension mismatch");
    return a.norm();
  }
  return std::sqrt(dot(a, a));
}

UnitParam::UnitParam(double v) {
  constexpr double slack = 1e-12;
  if (!(v >= -slack && v <= 1.0 + slack))
    throw std::domain_error("UnitParam: value outside [0,1]: " + std::to_string(v));
  value_ = v < 0.0 ? 0.0 : (v > 1.0 ? 1.0 : v);
}

bool all_finite(const Vector& a) { return a.allFinite(); }

void require_finite(const Vector& a, const char* what) {
  if (!a.allFinite())
    throw std::domain_error(std::string(what) + ": non-finite input");
}

void require_same_dim(const Vector& a, const Vector& b) {
  if (a.size() != b.size())
    throw std::domain_error("dimension mismatch between points");
}

double norm(const SpaceContext& ctx, const Vector& a) {
  require_finite(a, "norm");
  return ctx.norm(a);
}

}  // namespace geofun
