#include "geofun/report_io.hpp"

#include <cstdio>
#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace geofun {

json to_json(const Vector& v) {
  json arr = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

json to_json(const Witness& w) {
  json j;
  j["a"] = to_json(w.a);
  j["b"] = to_json(w.b);
  j["alpha"] = w.alpha;
  j["beta"] = w.beta;
  j["gamma"] = w.gamma;
  j["residual"] = w.residual;
  return j;
}

json to_json(const AxiomCheck& c) {
  json j;
  j["law"] = c.law;
  j["max_residual"] = c.max_residual;
  j["p99_residual"] = c.p99_residual;
  j["n_evaluations"] = c.n_evaluations;
  j["eval_failures"] = c.eval_failures;
  j["tolerance"] = c.tolerance;
  j["pass"] = c.pass;
  j["witness"] = to_json(c.worst);
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

json to_json(const AxiomReport& r) {
  json j;
  j["solution"] = r.solution_id;
  j["dim"] = r.dim;
  j["seed"] = r.seed;
  j["pass"] = r.all_pass();
  json checks = json::array();
  for (const auto& c : r.checks) checks.push_back(to_json(c));
  j["checks"] = checks;
  return j;
}

json to_json(const ConnectionCoeffs& g) {
  json out = json::array();
  for (const auto& mat : g.comp) {
    json rows = json::array();
    for (Eigen::Index j = 0; j < mat.rows(); ++j) {
      json row = json::array();
      for (Eigen::Index k = 0; k < mat.cols(); ++k) row.push_back(mat(j, k));
      rows.push_back(row);
    }
    out.push_back(rows);
  }
  return out;
}

json to_json(const RoughnessSummary& s) {
  json j;
  j["steps"] = s.steps;
  j["second_profile"] = s.second_profile;
  j["first_profile"] = s.first_profile;
  j["first_gaps"] = s.first_gaps;
  j["gap_block_means"] = s.gap_block_means;
  j["growth_ratio"] = s.growth_ratio;
  j["gaps_decreasing"] = s.gaps_decreasing;
  return j;
}

std::string format_full(double x) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.17g", x);
  return buf;
}

std::string curve_to_csv(const Curve& c) {
  std::string out = "t";
  for (int i = 1; i <= c.dim(); ++i) out += ",x" + std::to_string(i);
  out += "\n";
  for (int r = 0; r < c.size(); ++r) {
    out += format_full(c.params[r]);
    for (int i = 0; i < c.dim(); ++i) out += "," + format_full(c.points(r, i));
    out += "\n";
  }
  return out;
}

std::string subdivision_to_csv(const SubdivisionCurve& c) {
  return curve_to_csv(Curve(c.params, c.points));
}

std::string profile_to_csv(const std::vector<double>& steps,
                           const std::vector<double>& values) {
  if (steps.size() != values.size())
    throw std::domain_error("profile_to_csv: size mismatch");
  std::string out = "h,value\n";
  for (size_t i = 0; i < steps.size(); ++i)
    out += format_full(steps[i]) + "," + format_full(values[i]) + "\n";
  return out;
}

void write_text_atomic(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path())
    std::filesystem::create_directories(path.parent_path());
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + tmp.string());
    out << text;
    if (!out) throw std::runtime_error("write failed: " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

void write_json_atomic(const std::filesystem::path& path, const json& j) {
  write_text_atomic(path, j.dump(2) + "\n");
}

}  // namespace geofun
