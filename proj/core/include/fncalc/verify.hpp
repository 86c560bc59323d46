#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "fncalc/report.hpp"

namespace fncalc {

struct SuiteOptions {
  std::vector<int> dims{3};  // chart dimensions, each in 1..6
  int trials = 10;
  std::uint64_t seed = 0;
  int jobs = 1;  // worker threads; never changes the report
};

// Registered identity suites, in display order.
const std::vector<std::string>& suite_ids();

// Runs every trial of a suite and collects exact residuals. Trial t uses seed
// options.seed + t. Throws Error(UnknownSuite), Error(InvalidChart) for
// dimensions outside 1..6, Error(ArityMismatch) for trials < 1 or no dims.
SuiteReport verify_suite(std::string_view suite_id, const SuiteOptions& options);

}  // namespace fncalc
