#include "simplexft/report.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <nlohmann/json.hpp>

namespace simplexft {

ParamList& ParamList::add(std::string key, const MultiIndex& n) {
  std::vector<std::int64_t> v(n.entries().begin(), n.entries().end());
  return add(std::move(key), ParamValue(std::move(v)));
}

double relative_scale(Complex lhs, Complex rhs) noexcept {
  return std::max({std::abs(lhs), std::abs(rhs), std::numeric_limits<double>::min()});
}

VerificationReport make_report(std::string identity_id, ParamList parameters, Complex lhs,
                               Complex rhs, double tolerance, std::optional<double> scale) {
  VerificationReport rep;
  rep.identity_id = std::move(identity_id);
  rep.parameters = std::move(parameters);
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.abs_residual = std::abs(lhs - rhs);
  rep.scale = scale.value_or(std::max(1.0, std::abs(rhs)));
  rep.rel_residual = rep.abs_residual / rep.scale;
  rep.tolerance = tolerance;
  rep.passed = std::isfinite(rep.rel_residual) && rep.rel_residual <= tolerance;
  return rep;
}

std::string to_json_line(const VerificationReport& report, bool include_runtime) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [key, value] : report.parameters.items()) {
    std::visit([&, k = key](const auto& v) { params[k] = v; }, value);
  }
  nlohmann::ordered_json j;
  j["identity_id"] = report.identity_id;
  j["parameters"] = std::move(params);
  j["lhs"] = {report.lhs.real(), report.lhs.imag()};
  j["rhs"] = {report.rhs.real(), report.rhs.imag()};
  j["abs_residual"] = report.abs_residual;
  j["rel_residual"] = report.rel_residual;
  j["scale"] = report.scale;
  j["tolerance"] = report.tolerance;
  j["passed"] = report.passed;
  if (include_runtime && report.runtime_ms) {
    j["runtime_ms"] = *report.runtime_ms;
  }
  if (!report.note.empty()) {
    j["note"] = report.note;
  }
  return j.dump();
}

} // namespace simplexft
