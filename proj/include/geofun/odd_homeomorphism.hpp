#pragma once

#include <functional>
#include <string>

namespace geofun {

/// Strictly increasing homeomorphism v of the real line with
/// v(-x) = -v(x). Derivative slots may be left empty when the map
/// does not have them (or when they are too expensive to expose);
/// inverse_d1 is the derivative of the inverse map where available.
struct OddHomeomorphism {
  std::string label;
  std::function<double(double)> forward;
  std::function<double(double)> inverse;
  std::function<double(double)> forward_d1;
  std::function<double(double)> forward_d2;
  std::function<double(double)> inverse_d1;

  bool has_d1() const { return static_cast<bool>(forward_d1); }
  bool has_d2() const { return static_cast<bool>(forward_d2); }
};

OddHomeomorphism identity_homeomorphism();

}  // namespace geofun
