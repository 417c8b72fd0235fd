#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "geofun/axioms.hpp"
#include "geofun/connection.hpp"
#include "geofun/curve.hpp"
#include "geofun/geodesic.hpp"
#include "geofun/roughness.hpp"

namespace geofun {

using json = nlohmann::json;

json to_json(const Vector& v);
json to_json(const Witness& w);
json to_json(const AxiomCheck& c);
json to_json(const AxiomReport& r);
json to_json(const ConnectionCoeffs& g);  // nested arrays, index order [i][j][k]
json to_json(const RoughnessSummary& s);

/// Full-precision decimal rendering (17 significant digits) so that a
/// reread reproduces the exact double.
std::string format_full(double x);

std::string curve_to_csv(const Curve& c);
std::string subdivision_to_csv(const SubdivisionCurve& c);
std::string profile_to_csv(const std::vector<double>& steps,
                           const std::vector<double>& values);

/// Write via a temp file in the same directory plus rename.
void write_text_atomic(const std::filesystem::path& path, const std::string& text);
void write_json_atomic(const std::filesystem::path& path, const json& j);

}  // namespace geofun
