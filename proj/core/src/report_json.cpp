#include <json.hpp>

#include "tourney/io.hpp"

namespace tourney {

std::string report_to_json(const paper36::VerificationReport& report) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["schema"] = "tourney.verification-report";
  doc["version"] = 1;
  doc["order"] = report.order;
  doc["passed"] = report.passed();
  ordered_json checks = ordered_json::array();
  for (const paper36::CheckResult& c : report.checks) {
    ordered_json entry;
    entry["name"] = c.name;
    entry["status"] = paper36::to_string(c.status);
    entry["passed"] = c.passed();
    entry["detail"] = c.detail;
    ordered_json witness = ordered_json::object();
    for (const auto& [key, value] : c.witness) {
      std::visit([&](const auto& v) { witness[key] = v; }, value);
    }
    entry["witness"] = std::move(witness);
    checks.push_back(std::move(entry));
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

}  // namespace tourney
