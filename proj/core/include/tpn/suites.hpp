#pragma once

#include <nlohmann/json_fwd.hpp>

#include "tpn/caps.hpp"
#include "tpn/report.hpp"
#include "tpn/zoo.hpp"

namespace tpn {

struct ZooSelection {
  std::string name;
  ZooParams params;
  int window = -1;  // -1: entry's recommended window
};

struct RunConfig {
  std::vector<std::string> suites;
  std::vector<ZooSelection> zoo;  // empty: per-suite defaults
  std::uint64_t seed = 17;
  Caps caps;
  std::string format = "text";  // "text" | "json"
  std::string out_path;
  std::string commutation_fixtures;  // optional fixture file

  static const std::vector<std::string>& known_suites();
};

// Deterministic: identical config (including seed) reproduces the identical
// JSON report byte for byte. Timing is text-output-only for that reason.
struct RunReport {
  nlohmann::json config_echo() const;
  std::vector<CheckReport> suite_reports;
  std::vector<std::string> suite_names;
  std::uint64_t seed = 0;
  std::vector<std::string> requested_suites;

  bool pass() const;
  int failures() const;
  int warnings() const;
  nlohmann::json to_json() const;
  std::string to_text() const;
};

RunReport run(const RunConfig& config);

// Individual suites; `sel` empty means the suite's default fixture set.
CheckReport suite_classification(const std::vector<ZooSelection>& sel, std::uint64_t seed,
                                 const Caps& caps);
CheckReport suite_boundary(const std::vector<ZooSelection>& sel, std::uint64_t seed,
                           const Caps& caps);
CheckReport suite_poles(const std::vector<ZooSelection>& sel, std::uint64_t seed, const Caps& caps);
CheckReport suite_kernel(const std::vector<ZooSelection>& sel, std::uint64_t seed, const Caps& caps);
CheckReport suite_quantification(const std::vector<ZooSelection>& sel, std::uint64_t seed,
                                 const Caps& caps);
CheckReport suite_exchange(const std::vector<ZooSelection>& sel, std::uint64_t seed,
                           const Caps& caps);
CheckReport suite_elimination(const std::vector<ZooSelection>& sel, std::uint64_t seed,
                              const Caps& caps);
CheckReport suite_adjunction(const std::vector<ZooSelection>& sel, std::uint64_t seed,
                             const Caps& caps);
CheckReport suite_commutation(std::uint64_t seed, const Caps& caps,
                              const std::string& fixture_path);
CheckReport suite_modalities(std::uint64_t seed, const Caps& caps);
CheckReport suite_spooky(std::uint64_t seed, const Caps& caps);

}  // namespace tpn
