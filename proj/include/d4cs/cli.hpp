#pragma once

// Command-line front end. `run_cli` is the whole program minus process
// setup so tests can drive it with in-memory streams.

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace d4cs {

enum ExitCode : int {
  kExitOk = 0,
  kExitVerificationFailed = 1,
  kExitUsage = 2,
  kExitPole = 3,
};

struct SuiteOptions {
  int max_m = 6;
  int order = -1;  // -1: 8 for F0/F1, 6 for G0/G1
  std::uint64_t seed = 1;
  int samples = 5;
  double step = 1e-4;
  double tolerance = 1e-6;
};

/// {"suite", "checks": [{"name", "pass", "detail"}], "passed", "failed"}.
/// Suites: golden, eigen, recur, genfun, qspace. Throws
/// std::invalid_argument for other names.
nlohmann::json run_suite(const std::string& suite, const SuiteOptions& opt);

/// args excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace d4cs
