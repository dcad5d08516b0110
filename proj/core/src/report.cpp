#include "tpn/report.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace tpn {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "fail";
    case Verdict::WindowNegative: return "window-negative";
    case Verdict::Frontier: return "frontier";
    case Verdict::Skipped: return "skipped";
  }
  return "?";
}

void CheckReport::add(std::string name, Verdict v, std::string witness, std::string details) {
  entries.push_back(CheckEntry{std::move(name), v, std::move(witness), std::move(details)});
}

void CheckReport::pass(std::string name, std::string details) {
  add(std::move(name), Verdict::Pass, "", std::move(details));
}

void CheckReport::fail(std::string name, std::string witness, std::string details) {
  add(std::move(name), Verdict::Fail, std::move(witness), std::move(details));
}

void CheckReport::merge(const CheckReport& other, const std::string& prefix) {
  for (const auto& e : other.entries)
    entries.push_back(CheckEntry{prefix + e.name, e.verdict, e.witness, e.details});
}

bool CheckReport::ok() const { return failures() == 0; }

int CheckReport::failures() const {
  int n = 0;
  for (const auto& e : entries)
    if (e.verdict == Verdict::Fail) ++n;
  return n;
}

int CheckReport::warnings() const {
  int n = 0;
  for (const auto& e : entries)
    if (e.verdict == Verdict::WindowNegative || e.verdict == Verdict::Frontier) ++n;
  return n;
}

nlohmann::json CheckReport::to_json() const {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& e : entries) {
    nlohmann::json j{{"name", e.name}, {"verdict", to_string(e.verdict)}};
    if (!e.witness.empty()) j["witness"] = e.witness;
    if (!e.details.empty()) j["details"] = e.details;
    checks.push_back(std::move(j));
  }
  return nlohmann::json{{"subject", subject}, {"pass", ok()}, {"checks", std::move(checks)}};
}

std::string CheckReport::to_text() const {
  std::ostringstream os;
  os << (ok() ? "PASS" : "FAIL") << " " << subject << "\n";
  for (const auto& e : entries) {
    os << "  [" << to_string(e.verdict) << "] " << e.name;
    if (!e.witness.empty()) os << "  witness: " << e.witness;
    if (!e.details.empty()) os << "  (" << e.details << ")";
    os << "\n";
  }
  return os.str();
}

}  // namespace tpn
