#pragma once

// The invariant suites behind `permuto verify`. Each suite checks one family
// of agreements for every case up to a rank bound and records the first few
// disagreements.

#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "permuto/parallel.hpp"

namespace permuto::cli {

struct SuiteSpec {
  std::string_view name;
  int default_n_max;
  int limit;  // largest rank the suite accepts
};

/// oracle, localization, counts, identities, fan; nullptr when unknown.
const SuiteSpec* find_suite(std::string_view name);
const std::vector<SuiteSpec>& all_suites();

struct SuiteResult {
  std::string name;
  int n_max = 0;
  std::uint64_t checks = 0;
  std::uint64_t failed = 0;
  std::vector<std::string> first_failures;

  bool passed() const { return failed == 0; }
};

SuiteResult run_suite(const SuiteSpec& suite, int n_max, const ExecutionOptions& options);

/// Writes one line per suite (text or JSON) and returns the exit code:
/// success when every suite passed, verification failure otherwise.
int report(const std::vector<SuiteResult>& results, bool json, std::ostream& out);

}  // namespace permuto::cli
