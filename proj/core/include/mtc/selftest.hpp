// Built-in verification sweep: checks every analytic formula against the
// dense oracle and runs the golden-seed statistical suite. Used by the
// `mtc selftest` subcommand and by the acceptance tests.

#pragma once

#include <string>
#include <vector>

namespace mtc::selftest {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct Options {
  // Test hook: added to the analytic p_even before oracle comparison, to
  // prove the comparator actually bites. Zero in normal operation.
  double inject_p_even_fault = 0.0;
};

std::vector<CheckResult> run(const Options& opts = {});

bool all_passed(const std::vector<CheckResult>& results);

}  // namespace mtc::selftest
