#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "netcalc/calculus.hpp"

namespace netcalc {

struct ExperimentConfig {
  std::string suite;
  double tol_struct = 1e-9;  // exact-arithmetic comparisons
  double tol_detect = 1e-3;  // limit detector acceptance
  double tol_diff = 1e-3;    // slope comparisons
  int budget = 8;
  int depth = 64;  // truncation of the natural index
  int grid = 257;  // sampling resolution on [0, 1]
  std::uint64_t seed = 42;
};

struct SuiteAggregate {
  int passed = 0;
  int failed = 0;
  int inconclusive = 0;
  int hypothesis_not_met = 0;
  Verdict overall = Verdict::pass;
};

struct ExperimentReport {
  ExperimentConfig config;
  std::vector<CheckRecord> records;
  SuiteAggregate aggregate;
  double wall_ms = 0.0;
};

std::vector<std::string> suite_names();

// Runs one named suite. Unknown names are an invalid_argument. Records named
// "expect-fail:..." assert that a designed breakdown actually manifests with
// its required magnitude; they pass when it does, so a clean run of any
// suite aggregates to pass.
ExperimentReport run_suite(const ExperimentConfig& cfg);

SuiteAggregate aggregate_records(const std::vector<CheckRecord>& records);

// 0 all conclusive and nothing failed, 1 any failure, 2 inconclusive left
int suite_exit_code(const ExperimentReport& rep);

// Sorted-key JSON; non-finite numbers serialize as null. The wall_ms field
// is the only part that varies between identical runs.
std::string report_to_json(const ExperimentReport& rep);
// suite,check,sample,verdict,residual with minimal quoting
std::string report_to_csv(const ExperimentReport& rep);

// {"points": ["a", ...], "opens": [["a", ...], ...]} -> finite space.
// Structural problems with the text are invalid_argument; topological
// problems are left for validate() on the result.
FiniteSpace space_from_json(const std::string& text);

}  // namespace netcalc
