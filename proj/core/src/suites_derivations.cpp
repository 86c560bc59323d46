#include "fncalc/error.hpp"
#include "fncalc/form_io.hpp"
#include "fncalc/oracles.hpp"
#include "suite_support.hpp"

namespace fncalc::suites {

namespace {

// [i^h(K), h^*] = 0 exactly when K is h-equivariant; both sides are computed
// and compared.
void check_equivariance_criterion(TrialContext& ctx, const Setting& s, const VectorForm& K, const TestFamily& fam,
                                  bool expected) {
  const bool commutes = !operator_residual(graded_commutator(ih(s, K), s.hs), zero_op(s.conn.chart(), K.degree() - 1),
                                           fam)
                             .has_value();
  const bool equivariant = is_h_equivariant(s.conn, K);
  const VectorForm defect = hval(s, K) - hor(s, K);
  ctx.check_true(commutes == equivariant && equivariant == expected, K.degree(), to_string(defect));
}

}  // namespace

void lemma23_trial(TrialContext& ctx) {
  const Setting s = random_setting(ctx);
  const int n = ctx.dim();
  Rng& rng = ctx.rng();
  const int k = rng.uniform(0, std::min(2, n - 1));
  const VectorForm K = rand_field(ctx, k + 1);

  ctx.item("2.3.1");
  {
    const OperatorExpr D = ih(s, K);
    const int p = rng.uniform(0, n);
    const int r = rng.uniform(0, n - p);
    const ScalarForm a = rand_form(ctx, p);
    const ScalarForm b = rand_form(ctx, r);
    ScalarForm rhs = wedge(apply(D, a), h_star(s.conn, b));
    ScalarForm second = wedge(h_star(s.conn, a), apply(D, b));
    rhs += Rational(sgn(static_cast<long>(k) * p)) * second;
    ctx.check_eq(apply(D, wedge(a, b)), rhs);
    const int deg = rng.uniform(1, n);
    const ScalarForm omega = rand_form(ctx, deg);
    ctx.check_eq(apply(D, omega), insert_projected_oracle(K, s.h, omega));
  }

  ctx.item("2.3.2");
  {
    const TestFamily& fam = ctx.family();
    check_equivariance_criterion(ctx, s, s.h, fam, true);
    check_equivariance_criterion(ctx, s, rand_equivariant(ctx, s, k + 1), fam, true);
    const bool random_equivariant = is_h_equivariant(s.conn, K);
    check_equivariance_criterion(ctx, s, K, fam, random_equivariant);
    if (s.R.is_zero()) {
      ctx.skip();
    } else {
      check_equivariance_criterion(ctx, s, s.R, fam, false);
    }
    if (n == 3) {
      const Setting a = setting_for(heisenberg_connection());
      check_equivariance_criterion(ctx, a, a.R, ctx.family_on(a.conn.chart()), false);
    }
  }

  ctx.item("2.3.3");
  {
    const int k1 = rng.uniform(0, std::min(1, n - 1));
    const int l1 = rng.uniform(0, std::min(1, n - 1));
    const VectorForm A = rand_equivariant(ctx, s, k1 + 1);
    const VectorForm B = rand_equivariant(ctx, s, l1 + 1);
    const VectorForm C = hat_bracket(A, B, s.conn);
    if (C.in_range()) {
      ctx.check_eq(hval(s, C), hor(s, C));
      ctx.check_ops(ih(s, C), graded_commutator(ih(s, A), ih(s, B)));
    } else {
      ctx.skip();
    }
  }

  ctx.item("2.3.4");
  {
    const OperatorExpr iK = insert_op(K);
    const OperatorExpr ihK = ih(s, K);
    ctx.check_ops(compose(s.hs, iK), ih(s, hor(s, K)));
    ctx.check_ops(compose(s.hs, iK), compose(s.hs, ihK));
    ctx.check_ops(compose(iK, s.hs), ih(s, hval(s, K)));
    ctx.check_ops(compose(iK, s.hs), compose(ihK, s.hs));
    ctx.check_ops(graded_commutator(iK, s.hs), graded_commutator(ihK, s.hs));
    ctx.check_ops(graded_commutator(iK, s.hs), ih(s, hval(s, K) - hor(s, K)));
    ctx.check_ops(compose(s.hs, iK, s.hs), compose(s.hs, ihK, s.hs));
    ctx.check_ops(compose(s.hs, iK, s.hs), ih(s, equi(s, K)));
  }

  ctx.item("2.1");
  {
    const OperatorExpr D1 = ih(s, rand_equivariant(ctx, s, k + 1));
    const OperatorExpr D2 = cov_d(s.conn);
    const OperatorExpr C = graded_commutator(D1, D2);
    ctx.check_true(is_derivation_over_hstar(C, s.conn, rng), C.degree(), "not a derivation over h*");
    ctx.check_zero_op(graded_commutator(C, s.hs));
  }
}

void prop24_trial(TrialContext& ctx) {
  const Setting s = random_setting(ctx);
  const int n = ctx.dim();
  for (int k = 0; k <= 2; ++k) {
    if (k + 1 > n) {
      ctx.skip();
      continue;
    }
    const VectorForm K = rand_field(ctx, k);
    const VectorForm L = rand_field(ctx, k + 1);

    ctx.item("2.4.1");
    const OperatorExpr D = compose(theta(K), s.hs) + ih(s, L);
    const Decomposition dec = decompose(D, s.conn, ctx.rng().next());
    ctx.check_eq(dec.K, K);
    ctx.check_eq(dec.L, L);
    const Decomposition again = decompose(compose(theta(dec.K), s.hs) + ih(s, dec.L), s.conn, ctx.rng().next());
    ctx.check_eq(again.K, dec.K);
    ctx.check_eq(again.L, dec.L);
    const Decomposition alg = decompose(ih(s, L), s.conn, ctx.rng().next());
    ctx.check_zero(alg.K);
    ctx.check_eq(alg.L, L);

    ctx.item("2.4.2");
    const VectorForm Kh = rand_horizontal(ctx, s, k);
    const VectorForm Lh = rand_equivariant(ctx, s, k + 1);
    const Decomposition dh = decompose_h(th(s, Kh) + ih(s, Lh), s.conn, ctx.rng().next());
    ctx.check_eq(dh.K, Kh);
    ctx.check_eq(dh.L, Lh);
  }

  ctx.item("2.5.2");
  const Decomposition dc = decompose(graded_commutator(s.d, s.hs), s.conn, ctx.rng().next());
  ctx.check_eq(dc.K, s.phi);
  ctx.check_eq(dc.L, s.R + s.Rbar);
}

void prop25_trial(TrialContext& ctx) {
  const Setting s = random_setting(ctx);
  const OperatorExpr Dh = cov_D(s.conn);
  const OperatorExpr dh = cov_d(s.conn);
  const OperatorExpr thphi_h = compose(theta(s.phi), s.hs);

  ctx.item("2.5.1");
  ctx.check_ops(dh - Dh, ih(s, s.R));
  ctx.item("2.5.2");
  ctx.check_ops(graded_commutator(s.d, s.hs), thphi_h + ih(s, s.R + s.Rbar));
  ctx.item("2.5.3");
  ctx.check_ops(compose(s.d, s.hs) - dh, thphi_h + ih(s, s.Rbar));
  ctx.item("2.5.4");
  ctx.check_ops(compose(Dh, Dh), compose(ih(s, s.R), s.d));
  ctx.item("2.5.5");
  const OperatorExpr dd = graded_commutator(dh, dh);
  ctx.check_ops(dd, q(2) * compose(dh, dh));
  ctx.check_ops(dd, q(2) * compose(ih(s, s.R), s.d, s.hs));
  ctx.check_ops(dd, q(2) * compose(s.hs, compose(insert_op(s.R), s.d, s.hs)));
  ctx.item("2.5.6");
  for (int p = 0; p <= ctx.dim(); ++p) {
    const ScalarForm omega = rand_horizontal_form(ctx, s, p);
    ctx.check_eq(apply(Dh, omega), apply(dh, omega));
  }
  ctx.item("2.5");
  ctx.check_ops(dh, th(s, VectorForm::identity(ctx.chart())));
  ctx.check_ops(dh, compose(Dh, s.hs));
}

}  // namespace fncalc::suites
