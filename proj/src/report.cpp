#include "superfed/report.hpp"

#include <map>

#include "superfed/errors.hpp"

namespace superfed {

Json report_header(std::string_view command) {
  Json j;
  j["schema"] = report_schema;
  j["schema_version"] = report_schema_version;
  j["command"] = command;
  return j;
}

namespace {

Json entries_json(const std::vector<SpecEntry>& entries) {
  Json out = Json::object();
  for (const auto& e : entries) out[e.key] = e.expression;
  return out;
}

Json violations_json(const Chart& chart, const std::vector<IndexedResidual>& v) {
  Json out = Json::array();
  for (const auto& r : v) {
    out.push_back({{"indices", index_key(chart, r.indices)}, {"residual", chart.format(r.residual)}});
  }
  return out;
}

}  // namespace

Json spec_echo(const ChartSpec& spec) {
  Json j;
  Json coords = Json::array();
  for (const auto& c : spec.coordinates) {
    coords.push_back({{"name", c.name}, {"parity", to_string(c.parity)}});
  }
  j["coordinates"] = std::move(coords);
  j["omega"] = {{"parity", to_string(spec.omega_parity)}, {"entries", entries_json(spec.omega)}};
  j["connection"] = spec.connection ? entries_json(*spec.connection) : Json(nullptr);
  j["cochain"] = spec.cochain ? entries_json(*spec.cochain) : Json(nullptr);
  return j;
}

FormValidation validate_form(const Chart& chart, const BilinearForm& omega) {
  FormValidation v;
  Json& j = v.json;

  const auto parity = parity_violations(chart, omega);
  j["parity"] = {{"passed", parity.empty()}, {"violations", violations_json(chart, parity)}};

  const auto anti = antisymmetry_violations(chart, omega);
  j["antisymmetry"] = {{"passed", anti.empty()}, {"violations", violations_json(chart, anti)}};

  const ClosednessCheck closed = is_closed(chart, omega);
  j["closedness"] = {{"passed", closed.closed},
                     {"residuals", table3_json(chart, closed.residuals)}};

  const RationalFunction det = body_determinant(chart, omega);
  bool nondegenerate = true;
  std::string reason;
  try {
    OmegaSolver solver(chart, omega);
  } catch (const degenerate_form_error& e) {
    nondegenerate = false;
    reason = e.what();
  }
  Json nd = {{"passed", nondegenerate},
             {"body_determinant", det.to_string(chart.even_names())},
             {"locus_of_validity", det.is_zero() ? std::string("empty")
                                                 : det.to_string(chart.even_names()) + " != 0"}};
  if (!nondegenerate) nd["reason"] = reason;
  j["nondegeneracy"] = std::move(nd);

  v.passed = parity.empty() && anti.empty() && closed.closed && nondegenerate;
  j["passed"] = v.passed;
  return v;
}

Json table21_json(const Chart& chart, const Table21& t) {
  Json out = Json::object();
  const std::size_t n = chart.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Superfunction& f = t(k, i, j);
        if (!f.is_zero()) out[index_key(chart, std::array{i, j, k})] = chart.format(f);
      }
    }
  }
  return out;
}

Json table3_json(const Chart& chart, const Table3& t) {
  Json out = Json::object();
  const std::size_t n = chart.dimension();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        const Superfunction& f = t(i, j, k);
        if (!f.is_zero()) out[index_key(chart, std::array{i, j, k})] = chart.format(f);
      }
    }
  }
  return out;
}

Json verification_json(const Chart& chart, const VerificationReport& report, bool residuals) {
  // Identities in order of first appearance.
  std::vector<std::string> order;
  std::map<std::string, std::pair<std::size_t, std::size_t>> counts;
  for (const auto& c : report.checks()) {
    auto [it, inserted] = counts.try_emplace(c.identity, 0, 0);
    if (inserted) order.push_back(c.identity);
    ++it->second.first;
    if (!c.passed) ++it->second.second;
  }
  Json summary = Json::object();
  for (const auto& name : order) {
    const auto [checks, failures] = counts[name];
    summary[name] = {{"checks", checks}, {"failures", failures}, {"passed", failures == 0}};
  }
  Json j = {{"passed", report.passed()},
            {"checks", report.checks().size()},
            {"failures", report.failures()},
            {"identities", std::move(summary)}};
  if (residuals) {
    Json list = Json::array();
    for (const auto& c : report.checks()) {
      list.push_back({{"identity", c.identity},
                      {"indices", index_key(chart, c.indices)},
                      {"residual", chart.format(c.residual)}});
    }
    j["residuals"] = std::move(list);
  } else if (const Check* f = report.first_failure()) {
    j["first_failure"] = {{"identity", f->identity},
                          {"indices", index_key(chart, f->indices)},
                          {"residual", chart.format(f->residual)}};
  }
  return j;
}

Json kernel_suite_json(const KernelSuiteResult& result) {
  Json props = Json::array();
  for (const auto& p : result.properties) {
    Json e = {{"name", p.name}, {"cases", p.cases}, {"failures", p.failures}};
    if (!p.first_failure.empty()) e["first_failure"] = p.first_failure;
    props.push_back(std::move(e));
  }
  return {{"passed", result.passed()},
          {"cases", result.cases()},
          {"failures", result.failures()},
          {"properties", std::move(props)}};
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace superfed
