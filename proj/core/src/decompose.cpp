#include "fncalc/decompose.hpp"

#include "fncalc/error.hpp"

namespace fncalc {

namespace {

bool leibniz_holds(const OperatorExpr& D, const Connection& conn, const ScalarForm& a, const ScalarForm& b) {
  const int k = D.degree();
  ScalarForm lhs = apply(D, wedge(a, b));
  ScalarForm rhs = wedge(apply(D, a), h_star(conn, b));
  ScalarForm second = wedge(h_star(conn, a), apply(D, b));
  if ((static_cast<long>(k) * a.degree()) % 2 == 0) {
    rhs += second;
  } else {
    rhs -= second;
  }
  return lhs == rhs;
}

void require_nonnegative(const OperatorExpr& D) {
  if (D.degree() < 0) {
    throw Error(ErrorKind::DegreeError, "decomposition needs a derivation of degree >= 0, got " +
                                            std::to_string(D.degree()));
  }
}

// K^j = D(x^j)
VectorForm extract_field_part(const OperatorExpr& D) {
  const Chart& chart = D.chart();
  VectorForm K(chart, D.degree());
  for (std::size_t j = 0; j < chart.dim(); ++j) {
    K.add_to_component(j, apply(D, ScalarForm::function(chart, Poly::variable(chart, j))));
  }
  return K;
}

// L^j = (D − P)(dx^j)
VectorForm extract_algebraic_part(const OperatorExpr& D, const OperatorExpr& P) {
  const Chart& chart = D.chart();
  VectorForm L(chart, D.degree() + 1);
  for (std::size_t j = 0; j < chart.dim(); ++j) {
    const ScalarForm dxj = ScalarForm::differential(chart, j);
    L.add_to_component(j, apply(D, dxj) - apply(P, dxj));
  }
  return L;
}

void require_derivation(const OperatorExpr& D, const Connection& conn, Rng& rng) {
  if (!is_derivation_over_hstar(D, conn, rng)) {
    throw Error(ErrorKind::DerivationCheckFailed, "operator " + describe(D) + " is not a derivation over h*");
  }
}

void require_reproduces(const OperatorExpr& D, const OperatorExpr& rebuilt, const TestFamily& family) {
  if (auto r = operator_residual(D, rebuilt, family)) {
    throw Error(ErrorKind::ExtractionInconsistent,
                "extracted pair does not reproduce the operator on a test form of degree " +
                    std::to_string(r->input_degree));
  }
}

}  // namespace

bool is_derivation_over_hstar(const OperatorExpr& D, const Connection& conn, Rng& rng) {
  require_same_chart(D.chart(), conn.chart(), "derivation check");
  const Chart& chart = D.chart();
  const int n = static_cast<int>(chart.dim());
  for (std::size_t i = 0; i < chart.dim(); ++i) {
    const ScalarForm xi = ScalarForm::function(chart, Poly::variable(chart, i));
    const ScalarForm dxi = ScalarForm::differential(chart, i);
    for (std::size_t j = 0; j < chart.dim(); ++j) {
      const ScalarForm xj = ScalarForm::function(chart, Poly::variable(chart, j));
      const ScalarForm dxj = ScalarForm::differential(chart, j);
      if (!leibniz_holds(D, conn, xi, xj) || !leibniz_holds(D, conn, xi, dxj) || !leibniz_holds(D, conn, dxi, dxj)) {
        return false;
      }
    }
  }
  const RandomShape shape{2, 2, 1, 2};
  for (int p = 0; p <= n; ++p) {
    for (int q = 0; p + q <= n; ++q) {
      const ScalarForm a = random_scalar_form(rng, chart, p, shape);
      const ScalarForm b = random_scalar_form(rng, chart, q, shape);
      if (!leibniz_holds(D, conn, a, b)) return false;
    }
  }
  return true;
}

Decomposition decompose(const OperatorExpr& D, const Connection& conn, std::uint64_t seed) {
  require_same_chart(D.chart(), conn.chart(), "decompose");
  require_nonnegative(D);
  Rng rng(seed);
  require_derivation(D, conn, rng);
  VectorForm K = extract_field_part(D);
  const OperatorExpr field_part = compose(theta(K), h_star_op(conn));
  VectorForm L = extract_algebraic_part(D, field_part);
  const TestFamily family = make_test_family(D.chart(), rng);
  require_reproduces(D, field_part + insert_h(L, conn), family);
  return {std::move(K), std::move(L)};
}

Decomposition decompose_h(const OperatorExpr& D, const Connection& conn, std::uint64_t seed) {
  require_same_chart(D.chart(), conn.chart(), "decompose_h");
  require_nonnegative(D);
  Rng rng(seed);
  const TestFamily family = make_test_family(D.chart(), rng);
  if (operator_residual(graded_commutator(D, h_star_op(conn)), zero_op(D.chart(), D.degree()), family)) {
    throw Error(ErrorKind::NotInDerH, "operator " + describe(D) + " does not commute with h*");
  }
  require_derivation(D, conn, rng);
  VectorForm K = extract_field_part(D);
  const OperatorExpr field_part = theta_h(K, conn);
  VectorForm L = extract_algebraic_part(D, field_part);
  require_reproduces(D, field_part + insert_h(L, conn), family);
  return {std::move(K), std::move(L)};
}

VectorForm hat_bracket(const VectorForm& K, const VectorForm& L, const Connection& conn) {
  require_same_chart(K.chart(), L.chart(), "hat_bracket");
  require_same_chart(K.chart(), conn.chart(), "hat_bracket");
  if (K.degree() < 1 || L.degree() < 1) throw Error(ErrorKind::DegreeError, "hat bracket needs degrees >= 1");
  if (!is_h_equivariant(conn, K) || !is_h_equivariant(conn, L)) {
    throw Error(ErrorKind::NotEquivariant, "hat bracket arguments must be h-equivariant");
  }
  const long k = K.degree() - 1;
  const long l = L.degree() - 1;
  VectorForm out = insert_projected_vv(K, conn.h(), L);
  if ((k * l) % 2 == 0) {
    out -= insert_projected_vv(L, conn.h(), K);
  } else {
    out += insert_projected_vv(L, conn.h(), K);
  }
  return out;
}

}  // namespace fncalc
