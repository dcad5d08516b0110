#include "tpn/json_io.hpp"

#include <fstream>
#include <map>

#include <nlohmann/json.hpp>

namespace tpn {

using nlohmann::json;

FinCat category_from_json(const json& j, const Caps& caps) {
  FinCat c;
  c.name = j.value("name", "category");
  std::map<std::string, ObjId> objs;
  std::map<std::string, MorId> mors;
  if (!j.contains("objects") || !j.contains("morphisms") || !j.contains("identities") ||
      !j.contains("composition"))
    throw ConfigError("category json: missing one of objects/morphisms/identities/composition");
  for (const auto& o : j.at("objects")) {
    std::string name = o.get<std::string>();
    if (objs.count(name)) throw ConfigError("category json: duplicate object " + name);
    objs[name] = c.add_object(name);
  }
  for (const auto& m : j.at("morphisms")) {
    std::string name = m.at("name").get<std::string>();
    std::string dom = m.at("dom").get<std::string>();
    std::string cod = m.at("cod").get<std::string>();
    if (mors.count(name)) throw ConfigError("category json: duplicate morphism " + name);
    if (!objs.count(dom) || !objs.count(cod))
      throw ConfigError("category json: morphism " + name + " references unknown object");
    mors[name] = c.add_morphism(name, objs[dom], objs[cod]);
  }
  for (const auto& [obj, mor] : j.at("identities").items()) {
    if (!objs.count(obj) || !mors.count(mor.get<std::string>()))
      throw ConfigError("category json: bad identity entry for " + obj);
    c.set_identity(objs[obj], mors[mor.get<std::string>()]);
  }
  for (const auto& e : j.at("composition")) {
    std::string g = e.at("g").get<std::string>();
    std::string f = e.at("f").get<std::string>();
    std::string gf = e.at("gf").get<std::string>();
    if (!mors.count(g) || !mors.count(f) || !mors.count(gf))
      throw ConfigError("category json: composition entry references unknown morphism");
    c.set_compose(mors[g], mors[f], mors[gf]);
  }
  c.finalize();
  CheckReport rep = check_category_laws(c, caps);
  if (!rep.ok()) {
    const CheckEntry* bad = nullptr;
    for (const auto& e : rep.entries)
      if (e.verdict == Verdict::Fail) bad = &e;
    throw ConfigError("category json rejected: " + (bad ? bad->name + " (" + bad->witness + ")" : ""));
  }
  return c;
}

json category_to_json(const FinCat& c) {
  json objs = json::array();
  for (const auto& o : c.objects) objs.push_back(o);
  json mors = json::array();
  for (const auto& m : c.mors)
    mors.push_back(json{{"name", m.name}, {"dom", c.objects[m.dom]}, {"cod", c.objects[m.cod]}});
  json ids = json::object();
  for (ObjId o = 0; o < c.num_objects(); ++o) ids[c.objects[o]] = c.mors[c.id(o)].name;
  json comp = json::array();
  for (MorId f = 0; f < c.num_morphisms(); ++f)
    for (MorId g = 0; g < c.num_morphisms(); ++g) {
      if (!c.composable(g, f)) continue;
      comp.push_back(json{{"g", c.mors[g].name}, {"f", c.mors[f].name},
                          {"gf", c.mors[c.compose(g, f)].name}});
    }
  return json{{"name", c.name},
              {"objects", std::move(objs)},
              {"morphisms", std::move(mors)},
              {"identities", std::move(ids)},
              {"composition", std::move(comp)}};
}

Presheaf presheaf_from_json(const json& j, const FinCat& c) {
  Presheaf g;
  g.base = &c;
  g.name = j.value("name", "presheaf");
  g.cell_names.resize(c.num_objects());
  std::map<std::string, ObjId> objs;
  for (ObjId o = 0; o < c.num_objects(); ++o) objs[c.objects[o]] = o;
  std::map<std::string, MorId> mors;
  for (MorId m = 0; m < c.num_morphisms(); ++m) mors[c.mors[m].name] = m;
  std::vector<std::map<std::string, int>> cell_index(c.num_objects());
  for (const auto& [obj, cells] : j.at("cells").items()) {
    if (!objs.count(obj)) throw ConfigError("presheaf json: unknown object " + obj);
    for (const auto& cell : cells) {
      std::string cn = cell.get<std::string>();
      cell_index[objs[obj]][cn] = static_cast<int>(g.cell_names[objs[obj]].size());
      g.cell_names[objs[obj]].push_back(cn);
    }
  }
  g.restr.resize(c.num_morphisms());
  for (MorId m = 0; m < c.num_morphisms(); ++m)
    g.restr[m].assign(g.cells(c.cod(m)), -1);
  for (const auto& [mor, mapping] : j.at("restrictions").items()) {
    if (!mors.count(mor)) throw ConfigError("presheaf json: unknown morphism " + mor);
    MorId m = mors[mor];
    for (const auto& [from, to] : mapping.items()) {
      auto& ci_cod = cell_index[c.cod(m)];
      auto& ci_dom = cell_index[c.dom(m)];
      if (!ci_cod.count(from) || !ci_dom.count(to.get<std::string>()))
        throw ConfigError("presheaf json: bad restriction cell in " + mor);
      g.restr[m][ci_cod[from]] = ci_dom[to.get<std::string>()];
    }
  }
  for (MorId m = 0; m < c.num_morphisms(); ++m)
    for (int i = 0; i < g.cells(c.cod(m)); ++i)
      if (g.restr[m][i] < 0)
        throw ConfigError("presheaf json: restriction for " + c.mors[m].name + " is partial");
  CheckReport rep = check_presheaf_laws(g);
  if (!rep.ok()) throw ConfigError("presheaf json rejected: functoriality fails");
  return g;
}

json presheaf_to_json(const Presheaf& g) {
  const FinCat& c = *g.base;
  json cells = json::object();
  for (ObjId o = 0; o < c.num_objects(); ++o) {
    json arr = json::array();
    for (const auto& n : g.cell_names[o]) arr.push_back(n);
    cells[c.objects[o]] = std::move(arr);
  }
  json restr = json::object();
  for (MorId m = 0; m < c.num_morphisms(); ++m) {
    json mapping = json::object();
    for (int i = 0; i < g.cells(c.cod(m)); ++i)
      mapping[g.cell_names[c.cod(m)][i]] = g.cell_names[c.dom(m)][g.act(m, i)];
    restr[c.mors[m].name] = std::move(mapping);
  }
  return json{{"name", g.name}, {"cells", std::move(cells)}, {"restrictions", std::move(restr)}};
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open " + path);
  json j;
  in >> j;
  return j;
}

void write_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write " + path);
  out << j.dump(2) << "\n";
}

json report_schema() {
  json check = {
      {"type", "object"},
      {"required", json::array({"name", "verdict"})},
      {"properties",
       {{"name", {{"type", "string"}}},
        {"verdict",
         {{"type", "string"},
          {"enum", json::array({"pass", "fail", "window-negative", "frontier", "skipped"})}}},
        {"witness", {{"type", "string"}}},
        {"details", {{"type", "string"}}}}}};
  json suite = {
      {"type", "object"},
      {"required", json::array({"subject", "pass", "checks"})},
      {"properties",
       {{"subject", {{"type", "string"}}},
        {"pass", {{"type", "boolean"}}},
        {"checks", {{"type", "array"}, {"items", check}}}}}};
  return json{
      {"$schema", "https://json-schema.org/draft/2020-12/schema"},
      {"title", "transpension verification report"},
      {"type", "object"},
      {"required", json::array({"config", "suites", "pass"})},
      {"properties",
       {{"config",
         {{"type", "object"},
          {"required", json::array({"seed", "suites"})},
          {"properties",
           {{"seed", {{"type", "integer"}}},
            {"suites", {{"type", "array"}, {"items", {{"type", "string"}}}}},
            {"zoo", {{"type", "array"}}},
            {"window", {{"type", "integer"}}},
            {"caps", {{"type", "object"}}}}}}},
        {"suites", {{"type", "array"}, {"items", suite}}},
        {"pass", {{"type", "boolean"}}},
        {"failures", {{"type", "integer"}}},
        {"warnings", {{"type", "integer"}}}}}};
}

namespace {
bool type_matches(const json& doc, const std::string& t) {
  if (t == "object") return doc.is_object();
  if (t == "array") return doc.is_array();
  if (t == "string") return doc.is_string();
  if (t == "boolean") return doc.is_boolean();
  if (t == "integer") return doc.is_number_integer();
  if (t == "number") return doc.is_number();
  return true;
}
}  // namespace

bool validate_against_schema(const json& doc, const json& schema, std::string* error) {
  auto fail = [&](const std::string& msg) {
    if (error) *error = msg;
    return false;
  };
  if (schema.contains("type") && !type_matches(doc, schema.at("type").get<std::string>()))
    return fail("expected type " + schema.at("type").get<std::string>());
  if (schema.contains("enum")) {
    bool ok = false;
    for (const auto& v : schema.at("enum"))
      if (v == doc) ok = true;
    if (!ok) return fail("value not in enum: " + doc.dump());
  }
  if (schema.contains("required"))
    for (const auto& key : schema.at("required"))
      if (!doc.contains(key.get<std::string>()))
        return fail("missing required key " + key.get<std::string>());
  if (schema.contains("properties") && doc.is_object())
    for (const auto& [key, sub] : schema.at("properties").items())
      if (doc.contains(key)) {
        std::string suberr;
        if (!validate_against_schema(doc.at(key), sub, &suberr))
          return fail(key + ": " + suberr);
      }
  if (schema.contains("items") && doc.is_array())
    for (const auto& item : doc) {
      std::string suberr;
      if (!validate_against_schema(item, schema.at("items"), &suberr))
        return fail("item: " + suberr);
    }
  return true;
}

}  // namespace tpn
