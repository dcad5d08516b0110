#pragma once

#include <map>
#include <memory>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

#include "tpn/family.hpp"

namespace tpn {

struct ZooParams {
  std::map<std::string, int> kv;
  int get(const std::string& key, int dflt) const {
    auto it = kv.find(key);
    return it == kv.end() ? dflt : it->second;
  }
  static ZooParams parse(const std::string& spec);  // "k=2,d=1"
  std::string to_string() const;
};

// Tri-state classification matching the multiplier property lists: structure
// flags are declared-and-verified, the rest are checked properties.
struct Classification {
  bool endo = false;
  bool semicartesian = false;
  bool three_quarter = false;
  bool cartesian = false;
  bool cancellative = false;
  bool affine = false;
  bool connection_free = false;
  bool quantifiable = false;
  bool spooky_category = false;
  bool spooky_multiplier = false;

  bool operator==(const Classification&) const = default;
  nlohmann::json to_json() const;
  static Classification from_json(const nlohmann::json& j);
  std::string diff(const Classification& other) const;  // human-readable mismatch list
};

struct ZooEntry {
  std::string name;
  std::string summary;
  ZooParams params;
  std::shared_ptr<const CatFamily> src_family;
  std::shared_ptr<const CatFamily> tgt_family;  // == src_family when endo
  std::shared_ptr<const MultFamily> mult;
  int recommended_window = 2;
  Classification expected;
  bool elimination_in_scope = false;
  std::string scope_note;  // set when a suite must skip this entry
};

// Builders for the fixture families. Throws ConfigError on unknown names or
// bad parameters. Parameters:
//   identity          (base: affine cubes k=2)
//   affine-cubes      k (constants, default 2), inv (0/1)
//   cartesian-cubes   k, inv
//   clocks            K (max clock bound, default 1), u (multiplied bound, default K)
//   twisted-cubes     —
//   erasure           d (chain length, default 2), u (multiplied object, default 0)
//   embargoes         k (inner cartesian-cube arity, default 2)
//   enhanced-embargoes k (inner affine-cube arity, default 2)
//   depth-cubes       d (max depth, default 1), u (multiplied depth, default d)
ZooEntry zoo_build(const std::string& name, const ZooParams& params);
std::vector<std::string> zoo_names();
std::string zoo_describe(const std::string& name, const ZooParams& params);

// Individual family constructors (exposed for tests and composition).
enum class CubeKind { Affine, Cartesian, Clock, Depth };
std::shared_ptr<CatFamily> make_cube_family(CubeKind kind, int consts, int max_sort,
                                            bool involution);
std::shared_ptr<MultFamily> make_cube_multiplier(std::shared_ptr<const CatFamily> cubes,
                                                 int mult_sort);
std::shared_ptr<CatFamily> make_twisted_family();
std::shared_ptr<MultFamily> make_twisted_multiplier(std::shared_ptr<const CatFamily> tw);
std::shared_ptr<CatFamily> make_erasure_family(int d);
std::shared_ptr<MultFamily> make_erasure_multiplier(std::shared_ptr<const CatFamily> chain, int u);
std::shared_ptr<CatFamily> make_arrow_product_family(std::shared_ptr<const CatFamily> base);
std::shared_ptr<MultFamily> make_embargo_multiplier(std::shared_ptr<const CatFamily> base,
                                                    std::shared_ptr<const CatFamily> product);
std::shared_ptr<CatFamily> make_comma_family(std::shared_ptr<const CatFamily> base,
                                             const std::string& base_top);
std::shared_ptr<MultFamily> make_enhanced_embargo_multiplier(
    std::shared_ptr<const CatFamily> comma, std::shared_ptr<const MultFamily> inner);

}  // namespace tpn
