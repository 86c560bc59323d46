// Acceptance run: one PASS/FAIL line per criterion. Every identity check is
// exact (tolerance 0: all residual coefficients must be literally 0/1).

#include <chrono>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"
#include "fncalc/error.hpp"
#include "fncalc/spec_io.hpp"
#include "fncalc/verify.hpp"

using namespace fncalc;

namespace {

constexpr double kBianchiTimeLimitSeconds = 60.0;

struct SuiteRun {
  SuiteReport report;
  double seconds = 0;
};

SuiteRun run_suite(const std::string& id, std::vector<int> dims, int trials, std::uint64_t seed, int jobs = 1) {
  SuiteOptions opt;
  opt.dims = std::move(dims);
  opt.trials = trials;
  opt.seed = seed;
  opt.jobs = jobs;
  const auto start = std::chrono::steady_clock::now();
  SuiteRun r{verify_suite(id, opt), 0};
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

long total_checks(const SuiteReport& r) {
  long n = 0;
  for (const auto& g : r.groups) n += g.checks;
  return n;
}

std::string summary(const SuiteRun& r) {
  std::ostringstream os;
  os << r.report.suite_id << " " << r.report.passed_trials << "/" << r.report.trials << " trials, "
     << total_checks(r.report) << " checks";
  os.precision(2);
  os << std::fixed << ", " << r.seconds << "s";
  return os.str();
}

// Suite passes with at least one non-skipped check in every group.
bool suite_ok(const SuiteRun& r) {
  if (!r.report.passed()) return false;
  for (const auto& g : r.report.groups) {
    if (g.checks == 0) return false;
  }
  return true;
}

class Acceptance {
 public:
  void line(const std::string& ac, bool ok, const std::string& detail) {
    std::cout << ac << " " << (ok ? "PASS" : "FAIL") << " tol=exact " << detail << std::endl;
    if (!ok) ++failed_;
  }
  void failures(const SuiteRun& r) {
    if (!r.report.passed()) std::cout << render_report(r.report);
  }
  int failed() const { return failed_; }

 private:
  int failed_ = 0;
};

std::string verify_text(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  cli::run(args, out, err);
  return out.str() + err.str();
}

}  // namespace

int main() {
  Acceptance acc;
  try {
    {
      SuiteRun r = run_suite("bianchi", {3, 4}, 20, 1);
      const bool fast = r.seconds < kBianchiTimeLimitSeconds;
      acc.line("AC1", suite_ok(r) && fast, summary(r) + " (limit 60s), dims 3,4, seed 1");
      acc.failures(r);
    }
    {
      SuiteRun r = run_suite("fn-axioms", {3}, 10, 1);
      acc.line("AC2", suite_ok(r), summary(r) + ", dim 3, seed 1");
      acc.failures(r);
    }
    {
      SuiteRun r = run_suite("lemma23", {3}, 10, 1);
      acc.line("AC3", suite_ok(r), summary(r) + ", dim 3, seed 1");
      acc.failures(r);
    }
    {
      SuiteRun r = run_suite("prop24", {3}, 10, 1);
      acc.line("AC4", suite_ok(r), summary(r) + ", dim 3, seed 1");
      acc.failures(r);
    }
    {
      bool ok = true;
      std::string detail;
      for (const char* id : {"prop25", "thm26", "cor27", "thm28", "thm29"}) {
        SuiteRun r = run_suite(id, {3}, 10, 7, 4);
        ok = ok && suite_ok(r);
        detail += (detail.empty() ? "" : "; ") + summary(r);
        acc.failures(r);
      }
      acc.line("AC5", ok, detail + ", dim 3, seed 7");
    }
    {
      SuiteRun r = run_suite("thm31", {3}, 10, 1);
      bool shapes = r.report.groups.size() == 3;
      acc.line("AC6", suite_ok(r) && shapes, summary(r) + ", bundles 1x1,2x1,2x2, seed 1");
      acc.failures(r);
    }
    {
      const std::string dir = FNCALC_TEST_DATA_DIR;
      std::ostringstream out, err;
      const int code = cli::run({"curvature", dir + "/data/heisenberg.json", "--form", "(z)", "--form", "(1) z"}, out, err);
      const std::string golden = read_text_file(dir + "/golden/curvature_heisenberg.txt");
      const bool ok = code == 0 && out.str() == golden && err.str().empty();
      acc.line("AC7", ok, "curvature output on connection A matches golden/curvature_heisenberg.txt byte for byte");
      if (!ok) std::cout << out.str() << err.str();
    }
    {
      const std::vector<std::string> base{"verify", "bianchi", "--dims", "3,4", "--trials", "20", "--seed", "1"};
      std::vector<std::string> parallel = base;
      parallel.insert(parallel.end(), {"--jobs", "4"});
      const std::string first = verify_text(base);
      const std::string second = verify_text(base);
      const std::string threaded = verify_text(parallel);
      std::vector<std::string> thm{"verify", "thm28", "--trials", "6", "--seed", "5"};
      const std::string thm_serial = verify_text(thm);
      thm.insert(thm.end(), {"--jobs", "3"});
      const std::string thm_threaded = verify_text(thm);
      const bool ok = first == second && first == threaded && thm_serial == thm_threaded &&
                      first.ends_with("PASS 20/20\n");
      acc.line("AC8", ok, "repeat and --jobs 4 reports byte-identical (bianchi, thm28)");
    }
  } catch (const Error& e) {
    std::cout << "acceptance aborted: error[" << error_kind_name(e.kind()) << "]: " << e.what() << std::endl;
    return 1;
  }
  std::cout << (acc.failed() == 0 ? "ALL PASS" : "FAILED " + std::to_string(acc.failed())) << std::endl;
  return acc.failed() == 0 ? 0 : 1;
}
