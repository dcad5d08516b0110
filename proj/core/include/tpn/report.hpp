#pragma once

#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace tpn {

// Verdict of a single law/theorem/property check.
//
// WindowNegative marks a search that came up empty relative to the declared
// window: it is *not* a mathematical nonexistence claim. Frontier marks an
// element whose status could flip at a larger window and which is therefore
// excluded from hard verdicts. Both count as warnings, not failures.
enum class Verdict { Pass, Fail, WindowNegative, Frontier, Skipped };

std::string to_string(Verdict v);

struct CheckEntry {
  std::string name;
  Verdict verdict = Verdict::Pass;
  std::string witness;  // replayable counterexample description, empty on pass
  std::string details;
};

struct CheckReport {
  std::string subject;
  std::vector<CheckEntry> entries;

  void add(std::string name, Verdict v, std::string witness = "",
           std::string details = "");
  void pass(std::string name, std::string details = "");
  void fail(std::string name, std::string witness, std::string details = "");
  void merge(const CheckReport& other, const std::string& prefix = "");

  bool ok() const;          // no Fail entries
  int failures() const;
  int warnings() const;     // WindowNegative + Frontier

  nlohmann::json to_json() const;
  std::string to_text() const;
};

}  // namespace tpn
