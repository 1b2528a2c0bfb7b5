#pragma once

// Fixture checks and randomized property suites, shared by the `selftest`
// command and the acceptance tests.

#include <cstdint>
#include <string>
#include <vector>

namespace welded {

struct SuiteStats {
  int trials = 0;
  int passed = 0;
  std::string first_failure;  // empty when everything passed

  bool ok() const noexcept { return trials > 0 && passed == trials; }
};

/// Random diagram with at most `max_crossings` crossings, one random
/// applicable move, α compared up to unit.
SuiteStats reidemeister_suite(std::uint64_t seed, int trials, int max_crossings = 8);

/// γ over a composed circuit against nested γ, on random tensors
/// (at most 2 inner disks per circuit, boundary n ≤ 3).
SuiteStats operad_suite(std::uint64_t seed, int trials);

/// α of glued random tangles against γ of their invariants.
SuiteStats naturality_suite(std::uint64_t seed, int trials);

/// split_hom followed by merge_hom is the identity on random tensors of rank ≤ 6.
SuiteStats hom_roundtrip_suite(std::uint64_t seed, int trials);

/// Shared-elimination and parallel minors against the serial per-minor path.
SuiteStats minors_suite(std::uint64_t seed, int trials);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct SelftestReport {
  std::vector<CheckResult> checks;

  int passed() const;
  int failed() const;
  /// One line per check and a summary line.
  std::string to_string() const;
};

/// Fixture corpus checks followed by the property suites. `scale` multiplies
/// the number of random trials.
SelftestReport run_selftest(std::uint64_t seed, double scale = 1.0);

}  // namespace welded
