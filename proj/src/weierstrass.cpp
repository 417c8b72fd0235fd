#include "geofun/weierstrass.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "geofun/root_finding.hpp"

namespace geofun {

namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kHardyThreshold = 1.0 + 1.5 * kPi;
}  // namespace

void WeierstrassConfig::validate() const {
  if (!(amplitude > 0.0 && amplitude < 1.0))
    throw std::domain_error("weierstrass: amplitude must lie in (0,1)");
  if (frequency < 1 || frequency % 2 == 0)
    throw std::domain_error("weierstrass: frequency must be a positive odd integer");
  if (terms < 1) throw std::domain_error("weierstrass: terms must be >= 1");
  if (!(amplitude * frequency > kHardyThreshold))
    throw std::domain_error(
        "weierstrass: amplitude*frequency must exceed 1 + 3*pi/2 = " +
        std::to_string(kHardyThreshold));
  if (!(kappa > 1.0 / (1.0 - amplitude)))
    throw std::domain_error("weierstrass: kappa must exceed 1/(1-amplitude)");
  const double tail = std::pow(amplitude, terms) / (1.0 - amplitude);
  if (!(tail <= series_tol))
    throw std::domain_error("weierstrass: series truncation tail " +
                            std::to_string(tail) + " above tolerance");
}

double WeierstrassConfig::sup_bound() const {
  return (1.0 - std::pow(amplitude, terms)) / (1.0 - amplitude);
}

double weierstrass_w(const WeierstrassConfig& cfg, double x) {
  double an = 1.0;
  double bn = kPi * x;
  double sum = 0.0;
  for (int n = 0; n < cfg.terms; ++n) {
    sum += an * std::cos(bn);
    an *= cfg.amplitude;
    bn *= cfg.frequency;
  }
  return sum;
}

int integral_bands(const WeierstrassConfig& cfg) {
  // Band n contributes at most (a/b)^n / pi to the integral; cap where
  // the remaining tail drops below 1e-12.
  const double q = cfg.amplitude / cfg.frequency;
  int n = 1;
  double term = q;
  double tail = term / (1.0 - q);
  while (n < cfg.terms && tail / kPi > 1e-12) {
    term *= q;
    tail = term / (1.0 - q);
    ++n;
  }
  return n;
}

double weierstrass_antiderivative(const WeierstrassConfig& cfg, double alpha) {
  const int bands = integral_bands(cfg);
  double qn = 1.0;  // (a/b)^n
  double bn = kPi * alpha;
  double sum = 0.0;
  for (int n = 0; n < bands; ++n) {
    sum += qn * std::sin(bn);
    qn *= cfg.amplitude / cfg.frequency;
    bn *= cfg.frequency;
  }
  return cfg.kappa * alpha + sum / kPi;
}

OddHomeomorphism weierstrass_homeomorphism(const WeierstrassConfig& cfg,
                                           WeierstrassMapOptions opt) {
  cfg.validate();
  const double sup = cfg.sup_bound();
  const double slope_lo = cfg.kappa - sup;
  const double slope_hi = cfg.kappa + sup;

  OddHomeomorphism v;
  v.label = "weierstrass";
  v.inverse = [cfg](double alpha) { return weierstrass_antiderivative(cfg, alpha); };
  v.inverse_d1 = [cfg](double x) { return weierstrass_w(cfg, x) + cfg.kappa; };
  v.forward = [cfg, opt, slope_lo, slope_hi](double y) {
    const bool neg = y < 0.0;
    const double z = std::abs(y);
    if (z == 0.0) return 0.0;
    // The derivative of the inverse lies in [slope_lo, slope_hi], both
    // positive, which brackets the root of F(t) = z.
    InvertOptions io;
    io.step_tol = opt.newton_tol;
    const double t = invert_increasing(
        [&cfg](double x) { return weierstrass_antiderivative(cfg, x); },
        [&cfg](double x) { return weierstrass_w(cfg, x) + cfg.kappa; }, z,
        z / slope_hi, z / slope_lo, io);
    return neg ? -t : t;
  };
  return v;
}

}  // namespace geofun
