#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace tpn {

// Hard limits for exhaustive enumeration. Every window materialization and
// every backtracking search honors these; exceeding one throws LimitExceeded.
struct Caps {
  int max_objects = 64;
  int max_morphisms = 4096;
  std::int64_t max_compositions = 1'000'000;
  std::int64_t max_search_nodes = 4'000'000;  // backtracking node budget
  std::int64_t max_hom_results = 200'000;     // presheaf-morphism enumeration cap

  // Parses "objects=64,morphisms=4096,compositions=1000000,search=...,homs=..."
  // as used by the TRANSPENSION_CAPS environment variable.
  static Caps parse(const std::string& spec);
};

struct LimitExceeded : std::runtime_error {
  explicit LimitExceeded(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

struct WindowEscape : std::runtime_error {
  explicit WindowEscape(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace tpn
