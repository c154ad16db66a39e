#include "hartop/report.hpp"

#include <json.hpp>

namespace hartop {

CheckReport& CheckReport::param(const std::string& key, std::string value) {
  for (auto& [k, v] : params_) {
    if (k == key) {
      v = std::move(value);
      return *this;
    }
  }
  params_.emplace_back(key, std::move(value));
  return *this;
}

void CheckReport::fail(Counterexample witness) {
  if (!counterexample_) counterexample_ = std::move(witness);
}

void CheckReport::merge(const CheckReport& other) {
  cases_ += other.cases_;
  if (other.counterexample_) fail(*other.counterexample_);
}

std::string to_json(const CheckReport& report, const std::optional<std::string>& timestamp) {
  nlohmann::ordered_json doc;
  doc["check"] = report.check();
  auto params = nlohmann::ordered_json::object();
  for (const auto& [k, v] : report.params()) params[k] = v;
  doc["params"] = std::move(params);
  doc["status"] = report.passed() ? "pass" : "fail";
  doc["cases"] = report.cases();
  if (const auto& ce = report.counterexample()) {
    doc["counterexample"] = {{"input", ce->input}, {"expected", ce->expected}, {"actual", ce->actual}};
  }
  if (timestamp) doc["timestamp"] = *timestamp;
  return doc.dump();
}

std::string to_text(const CheckReport& report) {
  std::string s = report.passed() ? "PASS " : "FAIL ";
  s += report.check() + " (" + std::to_string(report.cases()) + " cases)";
  for (const auto& [k, v] : report.params()) s += " " + k + "=" + v;
  if (const auto& ce = report.counterexample()) {
    s += "\n  input:    " + ce->input;
    s += "\n  expected: " + ce->expected;
    s += "\n  actual:   " + ce->actual;
  }
  return s;
}

}  // namespace hartop
