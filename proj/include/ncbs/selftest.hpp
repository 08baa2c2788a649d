#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace ncbs {

struct CheckResult {
  int id = 0;          ///< acceptance number, 0 for audits
  std::string title;
  bool passed = false;
  std::string detail;  ///< measured deviations
};

// Acceptance checks, one per criterion. Each is self-contained and prints
// nothing; `detail` carries the numbers.
CheckResult check_number_entropy();        // 1
CheckResult check_low_number_entropy();    // 2
CheckResult check_m1_identity();           // 3
CheckResult check_m2_superposition();      // 4
CheckResult check_sns_monotonic();         // 5
CheckResult check_pasvs_nonmonotonic();    // 6
CheckResult check_wigner_oracle();         // 7
CheckResult check_negativity();            // 8
CheckResult check_r_half();                // 9
CheckResult check_depth();                 // 10
CheckResult check_hs_distance();           // 11
CheckResult check_svs_entropy();           // 12
/// Figure 2a serialized with 8 threads and with 1 must be byte-identical.
CheckResult check_determinism();           // 13

std::vector<CheckResult> acceptance_checks();

/// Printed-versus-computed comparisons that are reported, never enforced.
std::vector<std::string> audit_lines();

/// `[PASS]` / `[FAIL]` line for a check.
std::string format_check(const CheckResult& c);

/// Runs audits and checks, printing as it goes; returns the failure count.
int run_selftest(std::ostream& os);

}  // namespace ncbs
