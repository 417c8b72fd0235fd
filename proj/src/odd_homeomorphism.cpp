#include "geofun/odd_homeomorphism.hpp"

namespace geofun {

OddHomeomorphism identity_homeomorphism() {
  OddHomeomorphism v;
  v.label = "identity";
  v.forward = [](double x) { return x; };
  v.inverse = [](double x) { return x; };
  v.forward_d1 = [](double) { return 1.0; };
  v.forward_d2 = [](double) { return 0.0; };
  v.inverse_d1 = [](double) { return 1.0; };
  return v;
}

}  // namespace geofun
