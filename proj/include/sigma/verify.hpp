#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "sigma/serialize.hpp"

namespace sigma {

struct SuiteOptions {
  CoefficientSet set = CoefficientSet::span(1);
  int degree = 8;
  /// Quasi-rigidity k; 0 probes every 1 < k < M.
  int k = 0;
  int samples = 100;
  int steps = 10000;
  std::uint64_t seed = 1;
  SearchConfig cfg;
  OracleConfig oracle;
};

struct CaseResult {
  std::string name;
  bool pass = false;
  json detail;
};

struct SuiteResult {
  std::string suite;
  bool pass = false;
  std::vector<CaseResult> cases;
};

const std::vector<std::string>& suite_names();

/// Runs a named suite; unknown names throw InvalidInput.
SuiteResult run_suite(std::string_view name, const SuiteOptions& opts);

json to_json(const SuiteResult& r);

}  // namespace sigma
