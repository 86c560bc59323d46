#include <algorithm>

#include "fncalc/bundle.hpp"
#include "fncalc/form_io.hpp"
#include "suite_support.hpp"

namespace fncalc::suites {

namespace {

ProductBundle random_bundle(TrialContext& ctx) {
  static const char* const kBase[] = {"x", "y"};
  static const char* const kFiber[] = {"u", "v"};
  const int m = ctx.group().base_dim;
  const int r = ctx.group().fiber_dim;
  const Chart base(std::vector<std::string>(kBase, kBase + m));
  const Chart fiber(std::vector<std::string>(kFiber, kFiber + r));
  std::vector<std::string> names = base.coord_names();
  names.insert(names.end(), fiber.coord_names().begin(), fiber.coord_names().end());
  const Chart total(names);
  const RandomShape shape{2, 2, 1, 2};
  std::vector<std::vector<Poly>> gamma(static_cast<std::size_t>(r));
  for (auto& row : gamma) {
    for (int a = 0; a < m; ++a) {
      row.push_back(ctx.rng().chance(2, 3) ? random_poly(ctx.rng(), total, shape) : Poly(total));
    }
  }
  return ProductBundle(base, fiber, std::move(gamma));
}

}  // namespace

void thm31_trial(TrialContext& ctx) {
  const ProductBundle pb = random_bundle(ctx);
  const Setting s = setting_for(induced_connection(pb));
  const Chart& base = pb.base();
  const int m = static_cast<int>(pb.base_dim());
  Rng& rng = ctx.rng();
  auto base_field = [&](int degree) { return random_vector_form(rng, base, degree, kFieldShape); };
  auto chi = [&](const VectorForm& K) { return chi_star(pb, K); };
  auto pstar = [&](const ScalarForm& omega) { return pullback_base(pb, omega); };

  const int k = rng.uniform(0, m);
  const VectorForm K = base_field(k);
  const VectorForm cK = chi(K);

  ctx.item("3.1.0");
  ctx.check_zero(s.Rbar);
  ctx.check_true(s.conn.rank() == static_cast<int>(pb.fiber_dim()), 1, "rank " + std::to_string(s.conn.rank()));
  ctx.check_eq(hval(s, cK), cK);
  ctx.check_eq(hor(s, cK), cK);

  const TestFamily fam = ctx.family_on(base);
  ctx.item("3.1.1");
  for (const auto& omega : fam.forms) {
    const ScalarForm lhs = pstar(insert(K, omega));
    ctx.check_eq(lhs, insert(cK, pstar(omega)));
    ctx.check_eq(lhs, insert_projected(cK, s.h, pstar(omega)));
  }
  ctx.item("3.1.2");
  const OperatorExpr th_h = th(s, cK);
  for (const auto& omega : fam.forms) {
    const ScalarForm lhs = pstar(lie_derivative(K, omega));
    ctx.check_eq(lhs, lie_derivative(cK, pstar(omega)));
    ctx.check_eq(lhs, apply(th_h, pstar(omega)));
  }

  const int k1 = rng.uniform(0, m);
  const int k2 = rng.uniform(0, m);
  const VectorForm K1 = base_field(k1);
  const VectorForm K2 = base_field(k2);
  const VectorForm c1 = chi(K1);
  const VectorForm c2 = chi(K2);

  ctx.item("3.1.3");
  ctx.check_eq(insert_vv(c1, c2), chi(insert_vv(K1, K2)));
  ctx.check_eq(ins_h(s, c1, c2), chi(insert_vv(K1, K2)));

  ctx.item("3.1.4");
  {
    const VectorForm A = base_field(rng.uniform(1, m));
    const VectorForm B = base_field(rng.uniform(1, m));
    const VectorForm cA = chi(A);
    const VectorForm cB = chi(B);
    const VectorForm lifted = chi(alg_bracket(A, B));
    ctx.check_eq(lifted, hat_bracket(cA, cB, s.conn));
    ctx.check_eq(lifted, alg_bracket(cA, cB));
  }

  ctx.item("3.1.5");
  {
    const VectorForm lifted = chi(fn_bracket(K1, K2));
    const VectorForm top = fn_bracket(c1, c2);
    ctx.check_eq(lifted, hval(s, top));
    ctx.check_eq(lifted, equi(s, top));
  }
}

}  // namespace fncalc::suites
