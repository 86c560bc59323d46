#include "fncalc/verify.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

#include "fncalc/error.hpp"
#include "suite_support.hpp"

namespace fncalc {

namespace {

using suites::GroupSpec;
using suites::SuiteDef;
using suites::TrialContext;

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = {
      {"bianchi", suites::bianchi_trial},   {"fn-axioms", suites::fn_axioms_trial},
      {"lemma23", suites::lemma23_trial},   {"prop24", suites::prop24_trial},
      {"prop25", suites::prop25_trial},     {"thm26", suites::thm26_trial},
      {"cor27", suites::cor27_trial},       {"thm28", suites::thm28_trial},
      {"thm29", suites::thm29_trial},       {"thm31", suites::thm31_trial, true},
  };
  return defs;
}

std::vector<GroupSpec> groups_for(const SuiteDef& def, const std::vector<int>& dims) {
  std::vector<GroupSpec> groups;
  if (def.bundle_groups) {
    for (auto [m, r] : {std::pair{1, 1}, std::pair{2, 1}, std::pair{2, 2}}) {
      groups.push_back({"bundle=" + std::to_string(m) + "x" + std::to_string(r), 0, m, r});
    }
    return groups;
  }
  for (int d : dims) groups.push_back({"dim=" + std::to_string(d), d, 0, 0});
  return groups;
}

struct TrialResult {
  long checks = 0;
  long skipped = 0;
  std::vector<Failure> failures;
};

TrialResult run_trial(const SuiteDef& def, const GroupSpec& group, std::size_t group_index, std::uint64_t trial_seed) {
  const std::uint64_t stream = mix_seed(trial_seed) ^ mix_seed(0x5bd1e995u + group_index);
  TrialContext ctx(trial_seed, stream, group);
  try {
    def.run(ctx);
  } catch (const Error& e) {
    ctx.record_error("error[" + std::string(error_kind_name(e.kind())) + "]: " + e.what());
  } catch (const std::exception& e) {
    ctx.record_error(std::string("error[internal]: ") + e.what());
  }
  return {ctx.checks(), ctx.skipped(), std::move(ctx.failures())};
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.push_back(d.id);
    return out;
  }();
  return ids;
}

SuiteReport verify_suite(std::string_view suite_id, const SuiteOptions& options) {
  auto it = std::find_if(registry().begin(), registry().end(), [&](const SuiteDef& d) { return d.id == suite_id; });
  if (it == registry().end()) throw Error(ErrorKind::UnknownSuite, "unknown suite '" + std::string(suite_id) + "'");
  if (options.trials < 1) throw Error(ErrorKind::ArityMismatch, "trials must be at least 1");
  if (options.dims.empty()) throw Error(ErrorKind::ArityMismatch, "at least one dimension is required");
  for (int d : options.dims) {
    if (d < 1 || d > 6) throw Error(ErrorKind::InvalidChart, "dimension " + std::to_string(d) + " is outside 1..6");
  }

  const SuiteDef& def = *it;
  const std::vector<GroupSpec> groups = groups_for(def, options.dims);
  const std::size_t trials = static_cast<std::size_t>(options.trials);
  const std::size_t total = groups.size() * trials;
  std::vector<TrialResult> results(total);

  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < total; i = next++) {
      const std::size_t g = i / trials;
      const std::size_t t = i % trials;
      results[i] = run_trial(def, groups[g], g, options.seed + t);
    }
  };
  const int jobs = std::clamp(options.jobs, 1, static_cast<int>(std::min<std::size_t>(total, 256)));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  SuiteReport report;
  report.suite_id = def.id;
  report.dims = options.dims;
  report.trials = options.trials;
  report.seed = options.seed;
  std::vector<bool> trial_ok(trials, true);
  for (std::size_t g = 0; g < groups.size(); ++g) {
    TrialGroup group;
    group.label = groups[g].label;
    group.trials = options.trials;
    for (std::size_t t = 0; t < trials; ++t) {
      TrialResult& r = results[g * trials + t];
      group.checks += r.checks;
      group.skipped += r.skipped;
      if (r.failures.empty()) {
        ++group.passed;
      } else {
        trial_ok[t] = false;
      }
      for (auto& f : r.failures) group.failures.push_back(std::move(f));
    }
    std::stable_sort(group.failures.begin(), group.failures.end(), [](const Failure& a, const Failure& b) {
      return a.seed != b.seed ? a.seed < b.seed : a.item < b.item;
    });
    report.groups.push_back(std::move(group));
  }
  report.passed_trials = static_cast<int>(std::count(trial_ok.begin(), trial_ok.end(), true));
  return report;
}

}  // namespace fncalc
