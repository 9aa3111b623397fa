#pragma once

// The acceptance suite shared by `hyplat verify` and the acceptance test
// binary. Each check is timed and reported independently.

#include <iosfwd>
#include <string>
#include <vector>

namespace hyplat {

struct CheckResult {
  std::string id;
  std::string description;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
  /// Informational lines are printed but never decide the exit status.
  bool gating = true;
};

struct VerifyOptions {
  /// Skip the functional-equation grid.
  bool fast = false;
  double tol = 1e-10;
};

std::vector<CheckResult> run_acceptance(const VerifyOptions& options);

/// One "PASS|FAIL <id> <description> :: <detail> (<s>)" line per result.
void print_results(std::ostream& out, const std::vector<CheckResult>& results);

/// True iff every gating check passed.
bool all_gating_passed(const std::vector<CheckResult>& results);

}  // namespace hyplat
