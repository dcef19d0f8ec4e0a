#pragma once
// The invariant suite behind `spinindex verify`.

#include <string>
#include <vector>

namespace spinindex {

struct CheckResult {
  std::string name;  // "<module>.<check>"
  bool passed = false;
  std::string detail;
};

/// Names of every check, sorted.
std::vector<std::string> verification_check_names();
/// Runs one check; an exception thrown inside it is reported as a failure.
CheckResult run_check(const std::string& name);
/// Runs every check; results sorted by name.
std::vector<CheckResult> run_verification_suite();

}  // namespace spinindex
