#pragma once

#include <string>

#include <nlohmann/json_fwd.hpp>

#include "tpn/fincat.hpp"
#include "tpn/presheaf.hpp"

namespace tpn {

// Interchange format:
//   { "objects": [names],
//     "morphisms": [{"name","dom","cod"}],
//     "identities": {obj: name},
//     "composition": [{"g","f","gf"}] }
// The loader runs check_category_laws and rejects invalid tables.
FinCat category_from_json(const nlohmann::json& j, const Caps& caps);
nlohmann::json category_to_json(const FinCat& c);

// { "category": name, "cells": {obj: [names]}, "restrictions": {mor: {cell: cell}} }
Presheaf presheaf_from_json(const nlohmann::json& j, const FinCat& c);
nlohmann::json presheaf_to_json(const Presheaf& g);

nlohmann::json load_json_file(const std::string& path);
void write_json_file(const std::string& path, const nlohmann::json& j);

// JSON schema for run reports (shipped contract, printed by `schema`).
nlohmann::json report_schema();

// Minimal structural validator for the subset of JSON Schema used above.
bool validate_against_schema(const nlohmann::json& doc, const nlohmann::json& schema,
                             std::string* error);

}  // namespace tpn
