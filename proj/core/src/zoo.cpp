#include "tpn/zoo.hpp"

#include <sstream>

#include <nlohmann/json.hpp>

namespace tpn {

using nlohmann::json;

ZooParams ZooParams::parse(const std::string& spec) {
  ZooParams p;
  if (spec.empty()) return p;
  std::stringstream ss(spec);
  std::string part;
  while (std::getline(ss, part, ',')) {
    auto eq = part.find('=');
    if (eq == std::string::npos) throw ConfigError("bad parameter '" + part + "', expected k=v");
    try {
      p.kv[part.substr(0, eq)] = std::stoi(part.substr(eq + 1));
    } catch (const std::exception&) {
      throw ConfigError("bad parameter value in '" + part + "'");
    }
  }
  return p;
}

std::string ZooParams::to_string() const {
  std::string out;
  for (const auto& [k, v] : kv) {
    if (!out.empty()) out += ",";
    out += k + "=" + std::to_string(v);
  }
  return out;
}

json Classification::to_json() const {
  return json{{"endo", endo},
              {"semicartesian", semicartesian},
              {"three_quarter", three_quarter},
              {"cartesian", cartesian},
              {"cancellative", cancellative},
              {"affine", affine},
              {"connection_free", connection_free},
              {"quantifiable", quantifiable},
              {"spooky_category", spooky_category},
              {"spooky_multiplier", spooky_multiplier}};
}

Classification Classification::from_json(const json& j) {
  Classification c;
  c.endo = j.value("endo", false);
  c.semicartesian = j.value("semicartesian", false);
  c.three_quarter = j.value("three_quarter", false);
  c.cartesian = j.value("cartesian", false);
  c.cancellative = j.value("cancellative", false);
  c.affine = j.value("affine", false);
  c.connection_free = j.value("connection_free", false);
  c.quantifiable = j.value("quantifiable", false);
  c.spooky_category = j.value("spooky_category", false);
  c.spooky_multiplier = j.value("spooky_multiplier", false);
  return c;
}

std::string Classification::diff(const Classification& other) const {
  std::string out;
  auto cmp = [&](const char* n, bool a, bool b) {
    if (a != b) out += std::string(n) + ": " + (a ? "true" : "false") + " vs " +
                       (b ? "true" : "false") + "; ";
  };
  cmp("endo", endo, other.endo);
  cmp("semicartesian", semicartesian, other.semicartesian);
  cmp("three_quarter", three_quarter, other.three_quarter);
  cmp("cartesian", cartesian, other.cartesian);
  cmp("cancellative", cancellative, other.cancellative);
  cmp("affine", affine, other.affine);
  cmp("connection_free", connection_free, other.connection_free);
  cmp("quantifiable", quantifiable, other.quantifiable);
  cmp("spooky_category", spooky_category, other.spooky_category);
  cmp("spooky_multiplier", spooky_multiplier, other.spooky_multiplier);
  return out;
}

namespace {
Classification classify(bool endo, bool semi, bool tq, bool cart, bool canc, bool aff, bool cf,
                        bool quant, bool spooky_cat, bool spooky_mult) {
  Classification c;
  c.endo = endo;
  c.semicartesian = semi;
  c.three_quarter = tq;
  c.cartesian = cart;
  c.cancellative = canc;
  c.affine = aff;
  c.connection_free = cf;
  c.quantifiable = quant;
  c.spooky_category = spooky_cat;
  c.spooky_multiplier = spooky_mult;
  return c;
}
}  // namespace

ZooEntry zoo_build(const std::string& name, const ZooParams& params) {
  ZooEntry e;
  e.name = name;
  e.params = params;
  if (name == "identity") {
    auto base = make_cube_family(CubeKind::Affine, params.get("k", 2), 0, params.get("inv", 0));
    e.src_family = base;
    e.tgt_family = base;
    e.mult = identity_mult_family(base, "I0");
    e.recommended_window = 2;
    e.summary = "identity multiplier W⋉⊤ = W over affine cubes";
    e.expected = classify(true, true, true, true, true, true, true, true, false, false);
    e.elimination_in_scope = true;
  } else if (name == "affine-cubes") {
    int k = params.get("k", 2);
    bool inv = params.get("inv", 0) != 0;
    auto base = make_cube_family(CubeKind::Affine, k, 0, inv);
    e.src_family = base;
    e.tgt_family = base;
    e.mult = make_cube_multiplier(base, 0);
    e.recommended_window = 2;
    e.summary = "affine non-symmetric " + std::to_string(k) + "-ary cubes with ⋉I";
    bool spooky = k == 0;
    e.expected = classify(true, true, false, false, true, true, true, true, spooky, spooky);
    e.elimination_in_scope = true;
  } else if (name == "cartesian-cubes") {
    int k = params.get("k", 2);
    bool inv = params.get("inv", 0) != 0;
    auto base = make_cube_family(CubeKind::Cartesian, k, 0, inv);
    e.src_family = base;
    e.tgt_family = base;
    e.mult = make_cube_multiplier(base, 0);
    e.recommended_window = 2;
    e.summary = "cartesian non-symmetric " + std::to_string(k) + "-ary cubes with ×I";
    bool spooky = k == 0;
    e.expected = classify(true, true, true, true, true, false, true, true, spooky, spooky);
    e.elimination_in_scope = false;
    e.scope_note = "cartesian cubes have connections at slice level (the diagonal)";
  } else if (name == "clocks") {
    int maxk = params.get("K", 1);
    int u = params.get("u", maxk);
    if (u < 0 || u > maxk) throw ConfigError("clocks: u out of range");
    auto base = make_cube_family(CubeKind::Clock, 0, maxk, false);
    e.src_family = base;
    e.tgt_family = base;
    e.mult = make_cube_multiplier(base, u);
    e.recommended_window = 2;
    e.summary = "clock contexts with ×(i:clk_" + std::to_string(u) + ")";
    e.expected = classify(true, true, true, true, true, false, true, true, true, true);
    e.elimination_in_scope = false;
    e.scope_note = "the diagonal-free clock variant is out of the fixture zoo";
  } else if (name == "twisted-cubes") {
    auto base = make_twisted_family();
    e.src_family = base;
    e.tgt_family = base;
    e.mult = make_twisted_multiplier(base);
    e.recommended_window = 2;
    e.summary = "twisted cubes (chains of length 2^n) with the twisted prism ⋉I";
    e.expected = classify(true, false, false, false, true, true, true, true, false, false);
    e.elimination_in_scope = true;
  } else if (name == "erasure") {
    int d = params.get("d", 2);
    int u = params.get("u", 0);
    auto base = make_erasure_family(d);
    e.src_family = base;
    e.tgt_family = base;
    e.mult = make_erasure_multiplier(base, u);
    e.recommended_window = d + 1;
    e.summary = "erasure chain of length " + std::to_string(d) + " with ×" + std::to_string(u);
    e.expected = classify(true, true, true, true, true, false, true, true, true, true);
    e.elimination_in_scope = false;
    e.scope_note = "erasure is cartesian, not affine";
  } else if (name == "embargoes") {
    int k = params.get("k", 2);
    auto base = make_cube_family(CubeKind::Cartesian, k, 0, false);
    auto prod = make_arrow_product_family(base);
    e.src_family = base;
    e.tgt_family = prod;
    e.mult = make_embargo_multiplier(base, prod);
    e.recommended_window = 2;
    e.summary = "embargo multiplier (Id,⊤): W → W×↑ for ! = (⊤,⊤)";
    bool spooky_base = k == 0;
    e.expected =
        classify(false, false, false, false, true, true, true, true, spooky_base, spooky_base);
    e.elimination_in_scope = true;
  } else if (name == "enhanced-embargoes") {
    int k = params.get("k", 2);
    auto base = make_cube_family(CubeKind::Affine, k, 0, false);
    auto inner = make_cube_multiplier(base, 0);
    auto comma = make_comma_family(base, "I0");
    e.src_family = comma;
    e.tgt_family = comma;
    e.mult = make_enhanced_embargo_multiplier(comma, inner);
    e.recommended_window = 2;
    e.summary = "comma category B_⊥/B with ⋉(!√I) over affine cubes";
    e.expected = classify(true, true, false, false, true, true, false, true, true, true);
    e.elimination_in_scope = false;
    e.scope_note = "not connection-free: dimensionally split slices include non-fresh arrows";
  } else if (name == "depth-cubes") {
    int d = params.get("d", 1);
    int u = params.get("u", d);
    if (u < 0 || u > d) throw ConfigError("depth-cubes: u out of range");
    auto base = make_cube_family(CubeKind::Depth, 2, d, false);
    e.src_family = base;
    e.tgt_family = base;
    e.mult = make_cube_multiplier(base, u);
    e.recommended_window = 2;
    e.summary = "depth-" + std::to_string(d) + " cubes with ×(i:(" + std::to_string(u) + "))";
    e.expected = classify(true, true, true, true, true, false, true, true, false, false);
    e.elimination_in_scope = false;
    e.scope_note = "cartesian therefore not affine";
  } else {
    throw ConfigError("UnknownEntry: no zoo entry named '" + name + "'");
  }
  return e;
}

std::vector<std::string> zoo_names() {
  return {"identity",      "affine-cubes", "cartesian-cubes",    "clocks",      "twisted-cubes",
          "erasure",       "embargoes",    "enhanced-embargoes", "depth-cubes"};
}

std::string zoo_describe(const std::string& name, const ZooParams& params) {
  ZooEntry e = zoo_build(name, params);
  std::ostringstream os;
  os << e.name << (e.params.kv.empty() ? "" : " (" + e.params.to_string() + ")") << "\n";
  os << "  " << e.summary << "\n";
  os << "  base: " << e.src_family->name();
  if (e.tgt_family != e.src_family) os << " -> " << e.tgt_family->name();
  os << ", recommended window " << e.recommended_window << "\n";
  os << "  expected classification: " << e.expected.to_json().dump() << "\n";
  if (!e.scope_note.empty()) os << "  note: " << e.scope_note << "\n";
  return os.str();
}

}  // namespace tpn
