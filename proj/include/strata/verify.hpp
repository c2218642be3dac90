#pragma once

// Self-check suites: ring identities and agreement of the constructed strata
// with the published closed forms.

#include <string>
#include <string_view>
#include <vector>

namespace strata {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  // Reported but not counted as a failure (known discrepancies).
  bool informational = false;
};

const std::vector<std::string>& suite_names();
// Throws strata::Error for an unknown suite.
std::vector<CheckResult> run_suite(std::string_view suite);

}  // namespace strata
