#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "fncalc/connection.hpp"
#include "fncalc/decompose.hpp"
#include "fncalc/operator.hpp"
#include "fncalc/report.hpp"

namespace fncalc::suites {

// Chart shape of one trial group.
struct GroupSpec {
  std::string label;
  int dim = 0;
  int base_dim = 0;   // bundle groups only
  int fiber_dim = 0;
};

// Per-trial state: randomness, the current item, and collected residuals.
class TrialContext {
 public:
  TrialContext(std::uint64_t trial_seed, std::uint64_t stream_seed, const GroupSpec& group);

  Rng& rng() { return rng_; }
  std::uint64_t seed() const { return trial_seed_; }
  const GroupSpec& group() const { return group_; }
  const Chart& chart() const { return chart_; }
  int dim() const { return static_cast<int>(chart_.dim()); }

  void item(std::string name) { item_ = std::move(name); }
  const std::string& current_item() const { return item_; }

  // Test family on the trial chart, built on first use.
  const TestFamily& family();
  TestFamily family_on(const Chart& chart);

  void check_ops(const OperatorExpr& lhs, const OperatorExpr& rhs);
  void check_ops(const OperatorExpr& lhs, const OperatorExpr& rhs, const TestFamily& family);
  void check_zero_op(const OperatorExpr& op);
  void check_eq(const VectorForm& lhs, const VectorForm& rhs);
  void check_eq(const ScalarForm& lhs, const ScalarForm& rhs);
  void check_zero(const VectorForm& K);
  // A predicate check; `residual` describes the offending data.
  void check_true(bool ok, int degree, const std::string& residual);
  void skip() { ++skipped_; }
  void record_error(const std::string& message);

  long checks() const { return checks_; }
  long skipped() const { return skipped_; }
  std::vector<Failure>& failures() { return failures_; }

 private:
  void fail(int degree, std::string residual);

  std::uint64_t trial_seed_;
  GroupSpec group_;
  Chart chart_;
  Rng rng_;
  std::string item_ = "setup";
  std::optional<TestFamily> family_;
  long checks_ = 0;
  long skipped_ = 0;
  std::vector<Failure> failures_;
};

// Random connection data for one trial.
struct Setting {
  Connection conn;
  VectorForm phi, h, R, Rbar;
  OperatorExpr hs;  // h^*
  OperatorExpr d;
};

Setting random_setting(TrialContext& ctx);
Setting setting_for(const Connection& conn);

// Shapes used for random suite data.
inline constexpr RandomShape kFormShape{2, 2, 1, 2};
inline constexpr RandomShape kFieldShape{2, 1, 1, 3};

ScalarForm rand_form(TrialContext& ctx, int degree);
VectorForm rand_field(TrialContext& ctx, int degree);
// K∘Λh: horizontal arguments. The generator property is checked in ctx.
VectorForm rand_horizontal(TrialContext& ctx, const Setting& s, int degree);
// h∘L∘Λh: h-equivariant, checked in ctx.
VectorForm rand_equivariant(TrialContext& ctx, const Setting& s, int degree);
// h^*ω: horizontal, checked in ctx.
ScalarForm rand_horizontal_form(TrialContext& ctx, const Setting& s, int degree);

inline int sgn(long e) { return parity_sign(e); }
inline Rational q(long v) { return Rational(v); }

// Frequently used operator constructors.
OperatorExpr ih(const Setting& s, const VectorForm& L);
OperatorExpr th(const Setting& s, const VectorForm& K);
OperatorExpr th(const VectorForm& K);
VectorForm hor(const Setting& s, const VectorForm& K);        // K∘Λh
VectorForm hval(const Setting& s, const VectorForm& K);       // h∘K
VectorForm phival(const Setting& s, const VectorForm& K);     // φ∘K
VectorForm equi(const Setting& s, const VectorForm& K);       // h∘K∘Λh
VectorForm ins_h(const Setting& s, const VectorForm& K, const VectorForm& L);  // i^h(K)L

using TrialFn = void (*)(TrialContext&);

struct SuiteDef {
  std::string id;
  TrialFn run;
  bool bundle_groups = false;
};

// Suite bodies, grouped by source file.
void bianchi_trial(TrialContext& ctx);
void fn_axioms_trial(TrialContext& ctx);
void lemma23_trial(TrialContext& ctx);
void prop24_trial(TrialContext& ctx);
void prop25_trial(TrialContext& ctx);
void thm26_trial(TrialContext& ctx);
void cor27_trial(TrialContext& ctx);
void thm28_trial(TrialContext& ctx);
void thm29_trial(TrialContext& ctx);
void thm31_trial(TrialContext& ctx);

}  // namespace fncalc::suites
