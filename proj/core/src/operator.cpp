#include "fncalc/operator.hpp"

#include "fncalc/error.hpp"

namespace fncalc {

const Chart& OperatorExpr::chart() const { return node_->chart; }
int OperatorExpr::degree() const { return node_->degree; }
OperatorExpr::Kind OperatorExpr::kind() const { return node_->kind; }

namespace {

OperatorExpr make(OperatorNode node) { return OperatorExpr(std::make_shared<const OperatorNode>(std::move(node))); }

OperatorNode base(const Chart& chart, int degree, OperatorExpr::Kind kind) {
  OperatorNode n;
  n.chart = chart;
  n.degree = degree;
  n.kind = kind;
  return n;
}

void append_terms(std::vector<std::pair<Rational, OperatorExpr>>& out, const Rational& c, const OperatorExpr& op) {
  if (sgn(c) == 0) return;
  if (op.kind() == OperatorExpr::Kind::sum) {
    for (const auto& [d, term] : op.node().terms) out.emplace_back(c * d, term);
  } else {
    out.emplace_back(c, op);
  }
}

OperatorExpr linear_combination(const Rational& ca, const OperatorExpr& a, const Rational& cb, const OperatorExpr& b) {
  require_same_chart(a.chart(), b.chart(), "operator sum");
  if (a.degree() != b.degree()) {
    throw Error(ErrorKind::DegreeError, "operator sum: degrees " + std::to_string(a.degree()) + " and " +
                                            std::to_string(b.degree()) + " differ");
  }
  OperatorNode n = base(a.chart(), a.degree(), OperatorExpr::Kind::sum);
  append_terms(n.terms, ca, a);
  append_terms(n.terms, cb, b);
  return make(std::move(n));
}

}  // namespace

OperatorExpr exterior_d(const Chart& chart) { return make(base(chart, 1, OperatorExpr::Kind::exterior_d)); }

OperatorExpr h_star_op(const Connection& conn) {
  OperatorNode n = base(conn.chart(), 0, OperatorExpr::Kind::h_star);
  n.conn = conn;
  return make(std::move(n));
}

OperatorExpr insert_op(const VectorForm& K) {
  OperatorNode n = base(K.chart(), K.degree() - 1, OperatorExpr::Kind::insert);
  n.field = K;
  return make(std::move(n));
}

OperatorExpr insert_h(const VectorForm& K, const Connection& conn) {
  require_same_chart(K.chart(), conn.chart(), "insert_h");
  if (K.degree() < 1) throw Error(ErrorKind::DegreeError, "i^h(K) needs K of degree >= 1");
  OperatorNode n = base(K.chart(), K.degree() - 1, OperatorExpr::Kind::insert_h);
  n.field = K;
  n.conn = conn;
  return make(std::move(n));
}

OperatorExpr wedge_by(const ScalarForm& omega) {
  OperatorNode n = base(omega.chart(), omega.degree(), OperatorExpr::Kind::wedge_by);
  n.form = omega;
  return make(std::move(n));
}

OperatorExpr identity_op(const Chart& chart) { return wedge_by(ScalarForm::function(chart, Poly::constant(chart, 1))); }

OperatorExpr zero_op(const Chart& chart, int degree) { return make(base(chart, degree, OperatorExpr::Kind::sum)); }

OperatorExpr compose(const OperatorExpr& outer, const OperatorExpr& inner) {
  require_same_chart(outer.chart(), inner.chart(), "compose");
  OperatorNode n = base(outer.chart(), outer.degree() + inner.degree(), OperatorExpr::Kind::compose);
  n.composed = OperatorNode::Compose{outer, inner};
  return make(std::move(n));
}

OperatorExpr compose(const OperatorExpr& a, const OperatorExpr& b, const OperatorExpr& c) {
  return compose(a, compose(b, c));
}

OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b) { return linear_combination(1, a, 1, b); }

OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b) { return linear_combination(1, a, -1, b); }

OperatorExpr operator*(const Rational& c, const OperatorExpr& a) {
  OperatorNode n = base(a.chart(), a.degree(), OperatorExpr::Kind::sum);
  append_terms(n.terms, c, a);
  return make(std::move(n));
}

ScalarForm apply(const OperatorExpr& D, const ScalarForm& omega) {
  require_same_chart(D.chart(), omega.chart(), "apply");
  const OperatorNode& n = D.node();
  switch (n.kind) {
    case OperatorExpr::Kind::exterior_d: return ext_d(omega);
    case OperatorExpr::Kind::h_star: return h_star(*n.conn, omega);
    case OperatorExpr::Kind::insert: return insert(n.field, omega);
    case OperatorExpr::Kind::insert_h: return insert_projected(n.field, n.conn->h(), omega);
    case OperatorExpr::Kind::wedge_by: return wedge(n.form, omega);
    case OperatorExpr::Kind::compose: return apply(n.composed->outer, apply(n.composed->inner, omega));
    case OperatorExpr::Kind::sum: {
      ScalarForm out(omega.chart(), omega.degree() + n.degree);
      if (!out.in_range()) return out;
      for (const auto& [c, term] : n.terms) {
        ScalarForm part = apply(term, omega);
        if (part.is_zero()) continue;
        part *= c;
        out += part;
      }
      return out;
    }
  }
  return ScalarForm(omega.chart(), omega.degree() + n.degree);
}

OperatorExpr graded_commutator(const OperatorExpr& a, const OperatorExpr& b) {
  const Rational sign = parity_sign(static_cast<long>(a.degree()) * b.degree());
  return linear_combination(1, compose(a, b), -sign, compose(b, a));
}

OperatorExpr theta(const VectorForm& K) { return graded_commutator(insert_op(K), exterior_d(K.chart())); }

OperatorExpr theta_h(const VectorForm& K, const Connection& conn) {
  require_same_chart(K.chart(), conn.chart(), "theta_h");
  const OperatorExpr hs = h_star_op(conn);
  return compose(hs, theta(K), hs);
}

OperatorExpr cov_D(const Connection& conn) { return compose(h_star_op(conn), exterior_d(conn.chart())); }

OperatorExpr cov_d(const Connection& conn) {
  const OperatorExpr hs = h_star_op(conn);
  return compose(hs, exterior_d(conn.chart()), hs);
}

OperatorExpr module_action(const ScalarForm& omega, const OperatorExpr& D) {
  require_same_chart(omega.chart(), D.chart(), "module_action");
  return compose(wedge_by(omega), D);
}

std::string describe(const OperatorExpr& D) {
  const OperatorNode& n = D.node();
  switch (n.kind) {
    case OperatorExpr::Kind::exterior_d: return "d";
    case OperatorExpr::Kind::h_star: return "h*";
    case OperatorExpr::Kind::insert: return "i(K" + std::to_string(n.field.degree()) + ")";
    case OperatorExpr::Kind::insert_h: return "i^h(K" + std::to_string(n.field.degree()) + ")";
    case OperatorExpr::Kind::wedge_by: return "w" + std::to_string(n.form.degree()) + "^";
    case OperatorExpr::Kind::compose: return describe(n.composed->outer) + " o " + describe(n.composed->inner);
    case OperatorExpr::Kind::sum: {
      if (n.terms.empty()) return "0";
      std::string out = "(";
      for (std::size_t i = 0; i < n.terms.size(); ++i) {
        if (i) out += " + ";
        out += to_string(n.terms[i].first) + "*[" + describe(n.terms[i].second) + "]";
      }
      return out + ")";
    }
  }
  return "?";
}

TestFamily make_test_family(const Chart& chart, Rng& rng) {
  TestFamily family{chart, {}};
  const std::size_t n = chart.dim();
  for (std::size_t i = 0; i < n; ++i) family.forms.push_back(ScalarForm::function(chart, Poly::variable(chart, i)));
  for (std::size_t i = 0; i < n; ++i) family.forms.push_back(ScalarForm::differential(chart, i));
  const RandomShape shape{2, 2, 1, 2};
  for (int p = 0; p <= static_cast<int>(n); ++p) {
    for (int r = 0; r < 3; ++r) family.forms.push_back(random_scalar_form(rng, chart, p, shape));
  }
  return family;
}

std::optional<Residual> operator_residual(const OperatorExpr& lhs, const OperatorExpr& rhs, const TestFamily& family) {
  require_same_chart(lhs.chart(), rhs.chart(), "operator comparison");
  if (lhs.degree() != rhs.degree()) {
    throw Error(ErrorKind::DegreeError, "comparing operators of degree " + std::to_string(lhs.degree()) + " and " +
                                            std::to_string(rhs.degree()));
  }
  for (const auto& omega : family.forms) {
    ScalarForm diff = apply(lhs, omega) - apply(rhs, omega);
    if (!diff.is_zero()) return Residual{omega.degree(), std::move(diff)};
  }
  return std::nullopt;
}

}  // namespace fncalc
