#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>

#include "CLI11.hpp"
#include "netcalc/harness.hpp"

using namespace netcalc;

int main(int argc, char** argv) {
  CLI::App app{"desk-scale limit checks for nets, matrices of nets, and function nets"};
  app.require_subcommand(1);

  ExperimentConfig cfg;
  std::string out_path;
  std::string format = "json";
  auto* run = app.add_subcommand("run", "run a named check suite");
  run->add_option("suite", cfg.suite, "suite name, see list-suites")->required();
  run->add_option("--tolerance", cfg.tol_detect, "limit detector acceptance tolerance");
  run->add_option("--budget", cfg.budget, "refinement level budget");
  run->add_option("--depth", cfg.depth, "truncation depth of the natural index");
  run->add_option("--grid", cfg.grid, "grid resolution on [0,1]");
  run->add_option("--seed", cfg.seed, "battery seed");
  run->add_option("--out", out_path, "write the report here instead of stdout");
  run->add_option("--format", format, "report format")
      ->check(CLI::IsMember({"json", "csv"}));

  auto* ls = app.add_subcommand("list-suites", "print the available suite names");

  std::string space_file;
  auto* vs = app.add_subcommand("validate-space", "check a finite topology description");
  vs->add_option("file", space_file, "JSON file with 'points' and 'opens'")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 3;
  }

  if (ls->parsed()) {
    for (const auto& s : suite_names()) std::cout << s << "\n";
    return 0;
  }

  if (vs->parsed()) {
    std::ifstream in(space_file);
    if (!in) {
      std::cerr << "cannot read " << space_file << "\n";
      return 3;
    }
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    try {
      FiniteSpace space = space_from_json(text);
      auto v = space.validate();
      std::cout << space.describe() << "\n";
      for (const auto& p : v.problems) std::cout << "problem: " << p.what << "\n";
      if (v.ok) {
        auto h = space.hausdorff();
        std::cout << "valid topology, " << (h.hausdorff ? "separated" : "not separated")
                  << "\n";
        return 0;
      }
      return 1;
    } catch (const std::invalid_argument& e) {
      std::cerr << "bad space description: " << e.what() << "\n";
      return 3;
    }
  }

  if (out_path.empty()) {
    if (const char* env = std::getenv("NETCALC_OUT")) out_path = env;
  }
  ExperimentReport rep;
  try {
    rep = run_suite(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return 3;
  }
  std::string payload = format == "csv" ? report_to_csv(rep) : report_to_json(rep);
  if (out_path.empty()) {
    std::cout << payload;
  } else {
    std::ofstream out(out_path);
    if (!out) {
      std::cerr << "cannot write " << out_path << "\n";
      return 3;
    }
    out << payload;
  }
  std::cerr << cfg.suite << ": " << rep.records.size() << " records, overall "
            << verdict_name(rep.aggregate.overall) << " (" << rep.aggregate.passed
            << " pass, " << rep.aggregate.failed << " fail, " << rep.aggregate.inconclusive
            << " inconclusive, " << rep.aggregate.hypothesis_not_met
            << " hypothesis-not-met)\n";
  return suite_exit_code(rep);
}
