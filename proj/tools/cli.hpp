#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace fncalc::cli {

// Exit codes. Every error class has its own code; the stderr line starts with
// "error[<kind>]:".
enum Exit : int {
  kOk = 0,
  kSuiteFailed = 1,
  kValidation = 2,   // not-idempotent, non-constant-trace, invalid-chart, ...
  kParse = 3,
  kUnknownSuite = 4,
  kDegree = 5,
  kChartMismatch = 6,
  kIo = 7,
  kUsage = 8,
  kHypothesis = 9,   // derivation/equivariance/extraction checks
};

// Runs one command line. Output goes to `out` (or the --out file for verify),
// diagnostics to `err`.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace fncalc::cli
