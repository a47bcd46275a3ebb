#ifndef SIMPLEXFT_REPORT_HPP
#define SIMPLEXFT_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "simplexft/indices.hpp"
#include "simplexft/numerics.hpp"

namespace simplexft {

using ParamValue = std::variant<double, std::int64_t, std::string, std::vector<double>,
                                std::vector<std::int64_t>>;

/// Ordered key/value list; insertion order is preserved in JSON output.
class ParamList {
public:
  ParamList& add(std::string key, ParamValue value) {
    items_.emplace_back(std::move(key), std::move(value));
    return *this;
  }
  ParamList& add(std::string key, double value) { return add(std::move(key), ParamValue(value)); }
  ParamList& add(std::string key, int value) { return add(std::move(key), ParamValue(static_cast<std::int64_t>(value))); }
  ParamList& add(std::string key, unsigned value) {
    return add(std::move(key), ParamValue(static_cast<std::int64_t>(value)));
  }
  ParamList& add(std::string key, const char* value) { return add(std::move(key), ParamValue(std::string(value))); }
  ParamList& add(std::string key, const MultiIndex& n);
  ParamList& add(std::string key, const ParamVector& v) { return add(std::move(key), ParamValue(v.entries())); }

  const std::vector<std::pair<std::string, ParamValue>>& items() const noexcept { return items_; }

private:
  std::vector<std::pair<std::string, ParamValue>> items_;
};

/// One identity check.
///
/// rel_residual = abs_residual / scale and passed <=> rel_residual <= tolerance.
/// The default scale max(1, |rhs|) makes the test absolute for |rhs| < 1.
struct VerificationReport {
  std::string identity_id;
  ParamList parameters;
  Complex lhs;
  Complex rhs;
  double abs_residual = 0.0;
  double rel_residual = 0.0;
  double scale = 1.0;
  double tolerance = 0.0;
  bool passed = false;
  std::optional<double> runtime_ms;
  std::string note;
};

/// Builds a report from both sides; `scale` defaults to max(1, |rhs|).
VerificationReport make_report(std::string identity_id, ParamList parameters, Complex lhs,
                               Complex rhs, double tolerance,
                               std::optional<double> scale = std::nullopt);

/// Scale for identities between two closed-form values: max(|lhs|, |rhs|).
double relative_scale(Complex lhs, Complex rhs) noexcept;

/// Single-line JSON rendering; runtime_ms is included only when requested.
std::string to_json_line(const VerificationReport& report, bool include_runtime = false);

} // namespace simplexft

#endif // SIMPLEXFT_REPORT_HPP
