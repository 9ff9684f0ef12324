#include <fstream>
#include <iostream>

#include "CLI11.hpp"

#include "hw/checks.hpp"
#include "hw/parse.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "verify: exact checks for the characteristic-2 counterexample constructions\n"
      "(quotient-ring arithmetic, elementary certificates, Steinberg words,\n"
      "Witt forms, and Milnor patching)"};

  std::string selector = "all";
  std::string field_spec = "f2-rational";
  std::string json_path;
  hw::VerifyConfig config;

  app.add_option("selector", selector, "check id or 'all'")->capture_default_str();
  app.add_option("--field", field_spec, "f2-rational or gf2:<n>:<modulus-bits>")
      ->capture_default_str();
  app.add_option("--u", config.u_expr, "the distinguished unit, e.g. u, u+1, w")
      ->capture_default_str();
  app.add_option("--degree", config.degree, "sampling degree bound D")->capture_default_str();
  app.add_option("--trials", config.trials, "random trials for sampled relations")
      ->capture_default_str();
  app.add_option("--seed", config.seed, "RNG seed")->capture_default_str();
  app.add_option("--json", json_path, "write the JSON report to this path");
  app.add_flag("--timings", config.timings, "include measured ms in the JSON report");

  CLI11_PARSE(app, argc, argv);

  try {
    config.field = hw::parse_field_spec(field_spec);
    hw::Report report = hw::run_checks(selector, config);
    std::cout << hw::report_text(report);
    if (!json_path.empty()) {
      std::string payload = hw::report_json(report);
      if (json_path == "-") {
        std::cout << payload;
      } else {
        std::ofstream out(json_path, std::ios::binary);
        if (!out) {
          std::cerr << "IO_ERROR: cannot write " << json_path << "\n";
          return 2;
        }
        out << payload;
      }
    }
    return report.all_passed() ? 0 : 1;
  } catch (const hw::Error& e) {
    std::cerr << e.what() << "\n";
    return 2;
  }
}
