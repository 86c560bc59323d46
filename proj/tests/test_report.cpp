#include <gtest/gtest.h>

#include "printers.hpp"

#include "fncalc/error.hpp"
#include "fncalc/report.hpp"

using namespace fncalc;

namespace {

SuiteReport passing() {
  SuiteReport r;
  r.suite_id = "bianchi";
  r.dims = {3, 4};
  r.trials = 20;
  r.seed = 1;
  r.groups = {{"dim=3", 20, 20, 40, 0, {}}, {"dim=4", 20, 20, 40, 0, {}}};
  r.passed_trials = 20;
  return r;
}

SuiteReport failing() {
  SuiteReport r;
  r.suite_id = "thm26";
  r.dims = {3};
  r.trials = 5;
  r.seed = 0;
  r.groups = {{"dim=3", 5, 4, 60, 2, {{3, "2.6.7", 2, "(x) y^z"}}}};
  r.passed_trials = 4;
  return r;
}

}  // namespace

TEST(Report, PassingRendering) {
  EXPECT_EQ(render_report(passing()),
            "suite=bianchi dims=3,4 trials=20 seed=1\n"
            "dim=3 trials=20 passed=20 checks=40 skipped=0\n"
            "dim=4 trials=20 passed=20 checks=40 skipped=0\n"
            "PASS 20/20\n");
}

TEST(Report, FailureLine) {
  const std::string text = render_report(failing());
  EXPECT_NE(text.find("\nFAIL seed=3 item=2.6.7 deg=2 residual=(x) y^z\n"), std::string::npos);
  EXPECT_EQ(text.substr(text.rfind('\n', text.size() - 2) + 1), "FAIL 4/5\n");
  EXPECT_FALSE(failing().passed());
  EXPECT_TRUE(passing().passed());
}

TEST(Report, RenderParseRenderIsStable) {
  for (const SuiteReport& r : {passing(), failing()}) {
    const std::string text = render_report(r);
    EXPECT_EQ(render_report(parse_report(text)), text);
  }
}

TEST(Report, ParseRejectsMalformed) {
  auto kind = [](const std::string& text) {
    try {
      parse_report(text);
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::IoError;
  };
  EXPECT_EQ(kind(""), ErrorKind::ParseError);
  EXPECT_EQ(kind("suite=x dims=3 trials=1 seed=0\n"), ErrorKind::ParseError);
  EXPECT_EQ(kind("suite=x dims=3 trials=1 seed=0\ndim=3 trials=1 passed=1 checks=1 skipped=0\nPASS 1/2\n"),
            ErrorKind::ParseError);
  EXPECT_EQ(kind("suite=x dims=3 trials=1 seed=0\ndim=3 trials=1 passed=1 checks=1 skipped=0\nFAIL 1/1\n"),
            ErrorKind::ParseError);
  EXPECT_EQ(kind("suite=x dims=3 trials=one seed=0\ndim=3 trials=1 passed=1 checks=1 skipped=0\nPASS 1/1\n"),
            ErrorKind::ParseError);
}
