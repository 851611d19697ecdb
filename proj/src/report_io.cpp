#include "matchstat/report_io.hpp"

#include <cstdio>
#include <cstdlib>

namespace matchstat {

double round12(double x) {
  char buffer[32];
  std::snprintf(buffer, sizeof buffer, "%.12g", x);
  return std::strtod(buffer, nullptr);
}

nlohmann::json to_json(const MomentReport& report) {
  nlohmann::json out;
  out["n"] = report.n;
  for (const auto& field : moment_fields()) {
    out[std::string(field.name)] = to_string(report.*field.value);
  }
  out["joint_adjacent_valid"] = report.joint_adjacent_valid;
  out["joint_nonadjacent_valid"] = report.joint_nonadjacent_valid;
  out["variance_valid"] = report.variance_valid;
  return out;
}

nlohmann::json to_json(const CltReport& report) {
  return {
      {"n", report.n},
      {"num_samples", report.num_samples},
      {"seed", report.seed},
      {"sample_mean_W", round12(report.sample_mean_W)},
      {"sample_var_W", round12(report.sample_var_W)},
      {"ks_distance", round12(report.ks_distance)},
      {"target_var", round12(report.target_var)},
  };
}

nlohmann::json to_json(const MgfReport& report) {
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& e : report.entries) {
    entries.push_back({
        {"n", e.n},
        {"s", round12(e.s)},
        {"mgf_value", round12(e.mgf_value)},
        {"target", round12(e.target)},
        {"abs_error", round12(e.abs_error)},
    });
  }
  return {{"entries", entries}, {"max_evenness_gap", round12(report.max_evenness_gap)},
          {"evenness_ok", report.evenness_ok}};
}

nlohmann::json to_json(const DescentPolynomial& poly) {
  nlohmann::json coeffs = nlohmann::json::array();
  for (const auto& c : poly.coeffs) coeffs.push_back(c.get_str());
  return {{"n", poly.n}, {"coeffs", coeffs}, {"total", poly.total().get_str()}};
}

std::string to_csv(const DescentPolynomial& poly) {
  // c_0 is always zero and is omitted.
  std::string out = "m,count\n";
  for (std::size_t m = 1; m < poly.coeffs.size(); ++m) {
    out += std::to_string(m) + "," + poly.coeffs[m].get_str() + "\n";
  }
  return out;
}

}  // namespace matchstat
