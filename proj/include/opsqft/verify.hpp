#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace opsqft {

struct CheckResult {
  std::string name;
  double residual = 0.0;
  double tolerance = 0.0;
  bool gated = true;  ///< false for residuals that are only reported

  bool passed() const { return !gated || residual <= tolerance; }
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  bool passed() const;
};

/// Runs every algebraic and transform identity on random data drawn from seed.
/// Deterministic for a given seed and build.
VerifyReport run_verification(std::uint64_t seed);

/// One line per check: name, max residual, tolerance, PASS/FAIL/REPORT.
void print_report(const VerifyReport& report, std::ostream& os);

}  // namespace opsqft
