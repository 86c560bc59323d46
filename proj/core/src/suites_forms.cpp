#include "suite_support.hpp"

namespace fncalc::suites {

void bianchi_trial(TrialContext& ctx) {
  const Setting s = random_setting(ctx);
  ctx.item("1.4.1");
  ctx.check_zero(fn_bracket(s.R + s.Rbar, s.phi));
  ctx.item("1.4.2");
  ctx.check_eq(fn_bracket(s.R, s.phi), insert_vv(s.R, s.Rbar) + insert_vv(s.Rbar, s.R));
}

void fn_axioms_trial(TrialContext& ctx) {
  Rng& rng = ctx.rng();
  const Chart& chart = ctx.chart();

  // Degrees of the triple sum to at most 3.
  const int a = rng.uniform(0, 3);
  const int b = rng.uniform(0, 3 - a);
  const int c = rng.uniform(0, 3 - a - b);
  const VectorForm K = rand_field(ctx, a);
  const VectorForm L = rand_field(ctx, b);
  const VectorForm M = rand_field(ctx, c);

  ctx.item("fn.antisym");
  ctx.check_eq(fn_bracket(K, L), Rational(-sgn(a * b)) * fn_bracket(L, K));

  ctx.item("fn.jacobi");
  ctx.check_eq(fn_bracket(K, fn_bracket(L, M)),
               fn_bracket(fn_bracket(K, L), M) + Rational(sgn(a * b)) * fn_bracket(L, fn_bracket(K, M)));

  ctx.item("fn.center");
  ctx.check_zero(fn_bracket(VectorForm::identity(chart), K));

  ctx.item("fn.theta");
  ctx.check_ops(theta(fn_bracket(K, L)), graded_commutator(theta(K), theta(L)));

  ctx.item("fn.deg11");
  for (int pair = 0; pair < 2; ++pair) {
    const VectorForm P = rand_field(ctx, 1);
    const VectorForm Q = rand_field(ctx, 1);
    ctx.check_eq(fn_bracket(P, Q), fn_bracket_deg1_oracle(P, Q));
  }

  const Setting s = random_setting(ctx);
  const VectorForm torsion = Rational(2) * (s.R + s.Rbar);
  ctx.item("1.3");
  ctx.check_eq(fn_bracket(s.phi, s.phi), torsion);
  ctx.check_eq(fn_bracket(s.h, s.h), torsion);
  ctx.check_eq(-fn_bracket(s.phi, s.h), torsion);
}

}  // namespace fncalc::suites
