#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace fncalc {

struct Failure {
  std::uint64_t seed = 0;  // trial seed
  std::string item;        // identity item, e.g. "2.6.7"
  int degree = 0;          // offending degree
  std::string residual;    // residual in the compact form grammar
};

// One block of trials sharing a chart shape ("dim=3", "bundle=2x1").
struct TrialGroup {
  std::string label;
  int trials = 0;
  int passed = 0;
  long checks = 0;
  long skipped = 0;
  std::vector<Failure> failures;  // sorted by (seed, item)
};

struct SuiteReport {
  std::string suite_id;
  std::vector<int> dims;
  int trials = 0;
  std::uint64_t seed = 0;
  std::vector<TrialGroup> groups;
  // Trials that passed in every group.
  int passed_trials = 0;

  bool passed() const;
};

// Byte-stable text:
//   suite=<id> dims=3,4 trials=20 seed=1
//   dim=3 trials=20 passed=20 checks=120 skipped=0
//   FAIL seed=3 item=2.6.7 deg=2 residual=<form>
//   PASS 20/20
std::string render_report(const SuiteReport& report);
// Inverse of render_report. Throws Error(ParseError).
SuiteReport parse_report(std::string_view text);

}  // namespace fncalc
