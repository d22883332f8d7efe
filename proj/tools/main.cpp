// Command-line driver: `wiman verify [sections...]` and `wiman cusp <p> <q>`.

#include "wiman/errors.hpp"
#include "wiman/qring.hpp"
#include "wiman/report.hpp"
#include "wiman/sympmono.hpp"

#include <CLI11.hpp>

#include <iostream>

namespace {

constexpr int kUsage = 2;

int verify(const std::vector<std::string>& sections, const wiman::RunConfig& base, bool json) {
  wiman::RunConfig config = base;
  config.sections = sections;
  try {
    config.sections = wiman::resolve_sections(sections);
  } catch (const std::invalid_argument& e) {
    std::cerr << "usage error: " << e.what() << "\nsections: all";
    for (const auto& s : wiman::section_names()) std::cerr << " " << s;
    std::cerr << "\n";
    return kUsage;
  }
  const wiman::RunReport report = wiman::run(config);
  std::cout << (json ? wiman::to_json(report) + "\n" : wiman::to_text(report));
  return wiman::exit_code(report);
}

int cusp(const std::string& p_text, const std::string& q_text) {
  wiman::OrderElement p, q;
  try {
    p = wiman::parse_order_element(p_text);
    q = wiman::parse_order_element(q_text);
  } catch (const wiman::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kUsage;
  }
  try {
    std::cout << wiman::to_string(wiman::classify_cusp(p, q)) << "\n";
  } catch (const wiman::ZeroVector& e) {
    std::cerr << "error ZeroVector: " << e.what() << "\n";
    return 1;
  } catch (const wiman::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the icosahedral pencil monodromy computations"};
  app.require_subcommand(1);

  auto* verify_cmd = app.add_subcommand("verify", "Run verification sections");
  std::vector<std::string> sections;
  bool json = false;
  wiman::RunConfig config;
  verify_cmd->add_option("sections", sections, "all, algebra, group, lattice, graphs, monodromy, congruence, character");
  verify_cmd->add_flag("--json", json, "Print the report as JSON");
  verify_cmd->add_option("--modulus", config.moduli, "Extra modulus n for an exploratory O0/nO0 image (repeatable)")
      ->check(CLI::Range(2, 255));
  verify_cmd->add_option("--orbit-budget", config.orbit_budget, "Orbit enumeration budget")->check(CLI::PositiveNumber);
  verify_cmd->add_option("--scan-bound", config.scan_bound, "Coefficient bound for the classification scan")
      ->check(CLI::Range(1, 1000));

  auto* cusp_cmd = app.add_subcommand("cusp", "Classify the cusp of a primitive vector (p, q) in O0^2");
  std::string p_text, q_text;
  cusp_cmd->add_option("p", p_text, "first coordinate, e.g. 2")->required();
  cusp_cmd->add_option("q", q_text, "second coordinate, e.g. 2X")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  if (*verify_cmd) return verify(sections, config, json);
  return cusp(p_text, q_text);
}
