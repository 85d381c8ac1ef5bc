#include "geomul/report.hpp"

#include "geomul/trace_json.hpp"

namespace geomul {

std::string_view to_string(Verdict v) noexcept { return v == Verdict::pass ? "pass" : "fail"; }

nlohmann::json report_to_json(const TheoremReport& report) {
  nlohmann::json doc = trace_to_json(report.trace);
  doc["op"] = report.theorem_id;
  doc["inputs"] = report.inputs;
  doc["verdict"] = to_string(report.verdict);
  doc["detail"] = report.detail;
  nlohmann::json values = nlohmann::json::array();
  for (const Rational& v : report.values) values.push_back(v.to_string());
  doc["values"] = std::move(values);
  return doc;
}

}  // namespace geomul
