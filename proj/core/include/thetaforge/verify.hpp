#pragma once

#include <string>
#include <vector>

namespace thetaforge {

struct SuiteOptions {
  int k_max = 2;
  int weight_max = 8;
  unsigned long long seed = 20240814ULL;
};

struct SuiteResult {
  std::string name;
  int cases = 0;
  std::vector<std::string> failures;
  double ms = 0.0;

  bool pass() const { return failures.empty(); }
};

/// Registered suite names: lemmas-1, chevalley, divdiff, pfaffian,
/// omega, presentation.
const std::vector<std::string>& suite_names();

/// Runs one named suite; deterministic for a fixed seed.
SuiteResult run_suite(const std::string& name, const SuiteOptions& opts);

std::string suite_report_json(const std::vector<SuiteResult>& results,
                              const SuiteOptions& opts);

}  // namespace thetaforge
