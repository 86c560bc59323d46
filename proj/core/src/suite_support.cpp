#include "suite_support.hpp"

#include "fncalc/error.hpp"
#include "fncalc/form_io.hpp"

namespace fncalc::suites {

namespace {

Chart chart_for(const GroupSpec& group) {
  return standard_chart(static_cast<std::size_t>(group.dim > 0 ? group.dim : group.base_dim + group.fiber_dim));
}

}  // namespace

TrialContext::TrialContext(std::uint64_t trial_seed, std::uint64_t stream_seed, const GroupSpec& group)
    : trial_seed_(trial_seed), group_(group), chart_(chart_for(group)), rng_(stream_seed) {}

const TestFamily& TrialContext::family() {
  if (!family_) family_ = make_test_family(chart_, rng_);
  return *family_;
}

TestFamily TrialContext::family_on(const Chart& chart) { return make_test_family(chart, rng_); }

void TrialContext::fail(int degree, std::string residual) {
  failures_.push_back(Failure{trial_seed_, item_, degree, std::move(residual)});
}

void TrialContext::check_ops(const OperatorExpr& lhs, const OperatorExpr& rhs) { check_ops(lhs, rhs, family()); }

void TrialContext::check_ops(const OperatorExpr& lhs, const OperatorExpr& rhs, const TestFamily& fam) {
  ++checks_;
  if (auto r = operator_residual(lhs, rhs, fam)) fail(r->input_degree, to_string(r->value));
}

void TrialContext::check_zero_op(const OperatorExpr& op) { check_ops(op, zero_op(op.chart(), op.degree())); }

void TrialContext::check_eq(const VectorForm& lhs, const VectorForm& rhs) {
  ++checks_;
  VectorForm diff = lhs - rhs;
  if (!diff.is_zero()) fail(lhs.degree(), to_string(diff));
}

void TrialContext::check_eq(const ScalarForm& lhs, const ScalarForm& rhs) {
  ++checks_;
  ScalarForm diff = lhs - rhs;
  if (!diff.is_zero()) fail(lhs.degree(), to_string(diff));
}

void TrialContext::check_zero(const VectorForm& K) { check_eq(K, VectorForm::zero(K.chart(), K.degree())); }

void TrialContext::check_true(bool ok, int degree, const std::string& residual) {
  ++checks_;
  if (!ok) fail(degree, residual);
}

void TrialContext::record_error(const std::string& message) {
  ++checks_;
  fail(-1, message);
}

Setting setting_for(const Connection& conn) {
  return Setting{conn,          conn.phi(),
                 conn.h(),      curvature(conn),
                 cocurvature(conn), h_star_op(conn),
                 exterior_d(conn.chart())};
}

Setting random_setting(TrialContext& ctx) {
  const int n = ctx.dim();
  const int rank = n >= 2 ? ctx.rng().uniform(1, n - 1) : ctx.rng().uniform(0, n);
  return setting_for(random_connection(ctx.chart(), rank, ctx.rng().next(), ConnectionShape{}));
}

ScalarForm rand_form(TrialContext& ctx, int degree) {
  return random_scalar_form(ctx.rng(), ctx.chart(), degree, kFormShape);
}

VectorForm rand_field(TrialContext& ctx, int degree) {
  return random_vector_form(ctx.rng(), ctx.chart(), degree, kFieldShape);
}

VectorForm hor(const Setting& s, const VectorForm& K) { return precompose(K, s.h); }
VectorForm hval(const Setting& s, const VectorForm& K) { return compose_values(s.h, K); }
VectorForm phival(const Setting& s, const VectorForm& K) { return compose_values(s.phi, K); }
VectorForm equi(const Setting& s, const VectorForm& K) { return compose_values(s.h, precompose(K, s.h)); }
VectorForm ins_h(const Setting& s, const VectorForm& K, const VectorForm& L) {
  return insert_projected_vv(K, s.h, L);
}

OperatorExpr ih(const Setting& s, const VectorForm& L) { return insert_h(L, s.conn); }
OperatorExpr th(const Setting& s, const VectorForm& K) { return theta_h(K, s.conn); }
OperatorExpr th(const VectorForm& K) { return theta(K); }

VectorForm rand_horizontal(TrialContext& ctx, const Setting& s, int degree) {
  VectorForm K = hor(s, rand_field(ctx, degree));
  const std::string item = ctx.current_item();
  ctx.item("gen.hor");
  ctx.check_eq(hor(s, K), K);
  ctx.item(item);
  return K;
}

VectorForm rand_equivariant(TrialContext& ctx, const Setting& s, int degree) {
  VectorForm L = equi(s, rand_field(ctx, degree));
  const std::string item = ctx.current_item();
  ctx.item("gen.equiv");
  if (degree >= 1) ctx.check_eq(hval(s, L), hor(s, L));
  ctx.item(item);
  return L;
}

ScalarForm rand_horizontal_form(TrialContext& ctx, const Setting& s, int degree) {
  ScalarForm omega = h_star(s.conn, rand_form(ctx, degree));
  const std::string item = ctx.current_item();
  ctx.item("gen.hor");
  ctx.check_true(horizontality(s.conn, omega, Horizontality::horizontal), degree, to_string(omega));
  ctx.item(item);
  return omega;
}

}  // namespace fncalc::suites
