// Command-line surface for the finite-window transpension checker.
//
// Subcommands:
//   verify  run verification suites        (exit 0 pass, 1 fail, 2 config, 3 caps)
//   check   validate a category file or a multiplier against an expectation
//   zoo     list/describe the fixture families
//   schema  print the JSON schema of the run report

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "tpn/json_io.hpp"
#include "tpn/multiplier.hpp"
#include "tpn/suites.hpp"
#include "tpn/transpension.hpp"

using nlohmann::json;

namespace {

tpn::Caps caps_from_env() {
  const char* env = std::getenv("TRANSPENSION_CAPS");
  return env ? tpn::Caps::parse(env) : tpn::Caps{};
}

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw tpn::ConfigError("cannot write " + out_path);
  out << text;
}

int run_verify(const tpn::RunConfig& config) {
  auto t0 = std::chrono::steady_clock::now();
  tpn::RunReport report = tpn::run(config);
  auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                std::chrono::steady_clock::now() - t0)
                .count();
  if (config.format == "json") {
    emit(report.to_json().dump(2) + "\n", config.out_path);
  } else {
    emit(report.to_text() + "elapsed: " + std::to_string(ms) + " ms\n", config.out_path);
  }
  return report.pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite-window verification toolkit for multiplier and transpension semantics"};
  app.require_subcommand(1);

  tpn::RunConfig config;
  config.caps = caps_from_env();
  std::string zoo_name, params_spec, expect_path, input_path;
  int window = -1;
  std::uint64_t seed = 17;

  auto* verify = app.add_subcommand("verify", "run verification suites");
  std::vector<std::string> suites;
  verify->add_option("--suite", suites, "suite names (or 'all')")->required();
  verify->add_option("--zoo", zoo_name, "restrict to one zoo entry");
  verify->add_option("--params", params_spec, "zoo parameters, e.g. k=2,inv=1");
  verify->add_option("--window", window, "window bound (default: recommended)");
  verify->add_option("--seed", seed, "sample seed");
  verify->add_option("--format", config.format, "text|json")->check(CLI::IsMember({"text", "json"}));
  verify->add_option("--out", config.out_path, "output path (default stdout)");
  verify->add_option("--fixtures", config.commutation_fixtures, "commutation fixture file");

  auto* check = app.add_subcommand("check", "validate inputs");
  auto* check_cat = check->add_subcommand("category", "load and law-check a category JSON file");
  check_cat->add_option("--input", input_path, "category JSON file")->required();
  auto* check_mult = check->add_subcommand("multiplier", "compare a property report to an expectation");
  check_mult->add_option("--zoo", zoo_name, "zoo entry")->required();
  check_mult->add_option("--params", params_spec, "zoo parameters");
  check_mult->add_option("--window", window, "window bound");
  check_mult->add_option("--expect", expect_path, "expected classification JSON");
  check_mult->add_option("--format", config.format, "text|json");
  check_mult->add_option("--out", config.out_path, "output path");

  auto* zoo_cmd = app.add_subcommand("zoo", "fixture families");
  auto* zoo_list = zoo_cmd->add_subcommand("list", "list zoo entries");
  auto* zoo_desc = zoo_cmd->add_subcommand("describe", "describe one zoo entry");
  zoo_desc->add_option("name", zoo_name, "zoo entry")->required();
  zoo_desc->add_option("--params", params_spec, "zoo parameters");

  auto* schema_cmd = app.add_subcommand("schema", "print the report JSON schema");

  CLI11_PARSE(app, argc, argv);

  try {
    if (verify->parsed()) {
      config.seed = seed;
      if (suites.size() == 1 && suites[0] == "all")
        config.suites = tpn::RunConfig::known_suites();
      else
        config.suites = suites;
      if (!zoo_name.empty())
        config.zoo.push_back({zoo_name, tpn::ZooParams::parse(params_spec), window});
      return run_verify(config);
    }
    if (check_cat->parsed()) {
      tpn::FinCat c = tpn::category_from_json(tpn::load_json_file(input_path), config.caps);
      std::cout << "ok: " << c.name << " (" << c.num_objects() << " objects, "
                << c.num_morphisms() << " morphisms)\n";
      return 0;
    }
    if (check_mult->parsed()) {
      tpn::ZooParams params = tpn::ZooParams::parse(params_spec);
      tpn::ZooEntry entry = tpn::zoo_build(zoo_name, params);
      int w = window > 0 ? window : entry.recommended_window;
      tpn::PropertyResult pr = tpn::property_report(*entry.mult, w, config.caps);
      tpn::Classification expected =
          expect_path.empty() ? entry.expected
                              : tpn::Classification::from_json(tpn::load_json_file(expect_path));
      bool match = pr.detail.ok() && pr.observed == expected;
      if (config.format == "json") {
        json j{{"zoo", zoo_name},
               {"window", w},
               {"observed", pr.observed.to_json()},
               {"expected", expected.to_json()},
               {"match", match},
               {"detail", pr.detail.to_json()}};
        emit(j.dump(2) + "\n", config.out_path);
      } else {
        std::ostringstream os;
        os << (match ? "MATCH " : "MISMATCH ") << zoo_name << " @ window " << w << "\n";
        if (!match) os << "  " << pr.observed.diff(expected) << "\n";
        os << pr.detail.to_text();
        emit(os.str(), config.out_path);
      }
      return match ? 0 : 1;
    }
    if (zoo_list->parsed()) {
      for (const auto& n : tpn::zoo_names()) std::cout << n << "\n";
      return 0;
    }
    if (zoo_desc->parsed()) {
      std::cout << tpn::zoo_describe(zoo_name, tpn::ZooParams::parse(params_spec));
      return 0;
    }
    if (schema_cmd->parsed()) {
      std::cout << tpn::report_schema().dump(2) << "\n";
      return 0;
    }
  } catch (const tpn::LimitExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << "\n";
    return 3;
  } catch (const tpn::ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
