#pragma once

#include <string>
#include <string_view>

#include "json.hpp"
#include "superfed/chart_spec.hpp"
#include "superfed/kernel_suite.hpp"

namespace superfed {

using Json = nlohmann::ordered_json;

inline constexpr std::string_view report_schema = "superfed-report";
inline constexpr int report_schema_version = 1;

/// {"schema", "schema_version", "command"}; sections are appended by callers.
Json report_header(std::string_view command);

/// Echo of the parsed spec file: coordinates, omega entries and the optional
/// connection and cochain entries as written.
Json spec_echo(const ChartSpec& spec);

/// Form checks of a (possibly invalid) two-form. `passed` is false when any
/// check fails.
struct FormValidation {
  Json json;
  bool passed = true;
};
FormValidation validate_form(const Chart& chart, const BilinearForm& omega);

/// Nonzero entries of a (2,1) table keyed "(i,j,k)" for the k-th component
/// at (d_i, d_j), the same keys the spec format uses for connections.
Json table21_json(const Chart& chart, const Table21& t);

/// Nonzero entries of a 3-index table keyed "(i,j,k)".
Json table3_json(const Chart& chart, const Table3& t);

/// Summary counts per identity; with `residuals` set every check is listed.
Json verification_json(const Chart& chart, const VerificationReport& report, bool residuals);

Json kernel_suite_json(const KernelSuiteResult& result);

/// Serialization used for every report file: two-space indent, trailing newline.
std::string dump(const Json& j);

}  // namespace superfed
