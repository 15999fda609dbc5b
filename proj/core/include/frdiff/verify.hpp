#pragma once

#include <iosfwd>
#include <string>
#include <vector>

// Verification suites driven by the CLI `verify` command: each check runs a
// module invariant on a desk-scale grid and reports its worst deviation.

namespace frdiff::cli {

struct CheckResult {
  std::string name;
  double worst = 0.0;    // worst absolute (or relative, per check) deviation
  double tol = 0.0;
  bool pass = false;
  std::string detail;    // inputs of the worst case
};

struct VerifyReport {
  std::string suite;
  std::vector<CheckResult> checks;
  bool all_pass() const;
};

// suite: identities | routes | moments | asymptotics | all.
// tol_scale multiplies every check tolerance (default 1).
VerifyReport run_verify(const std::string& suite, double tol_scale = 1.0);

void print_report(const VerifyReport& report, std::ostream& out);

}  // namespace frdiff::cli
