#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "fncalc/connection.hpp"
#include "fncalc/forms.hpp"
#include "fncalc/random.hpp"

namespace fncalc {

struct OperatorNode;

// A graded linear operator on Ω(U), kept as a lazy expression tree and
// evaluated on demand. Degree is fixed at construction: applied to a p-form it
// yields a (p + degree)-form, which is zero when that leaves 0..n.
class OperatorExpr {
 public:
  enum class Kind { exterior_d, h_star, insert_h, insert, wedge_by, compose, sum };

  const Chart& chart() const;
  int degree() const;
  Kind kind() const;
  const OperatorNode& node() const { return *node_; }

  explicit OperatorExpr(std::shared_ptr<const OperatorNode> node) : node_(std::move(node)) {}

 private:
  std::shared_ptr<const OperatorNode> node_;
};

struct OperatorNode {
  struct Compose {
    OperatorExpr outer;
    OperatorExpr inner;
  };

  Chart chart;
  int degree = 0;
  OperatorExpr::Kind kind = OperatorExpr::Kind::exterior_d;
  std::optional<Connection> conn;  // h_star, insert_h
  VectorForm field;                // insert, insert_h
  ScalarForm form;                 // wedge_by
  std::optional<Compose> composed; // compose
  std::vector<std::pair<Rational, OperatorExpr>> terms;  // sum
};

// Primitives.
OperatorExpr exterior_d(const Chart& chart);
OperatorExpr h_star_op(const Connection& conn);
// i(K), degree deg K − 1.
OperatorExpr insert_op(const VectorForm& K);
// i^h(K) for K ∈ Ω^{k+1}, k ≥ 0: the derivation over h^* of degree k.
// Throws Error(DegreeError) for vector fields.
OperatorExpr insert_h(const VectorForm& K, const Connection& conn);
// ψ ↦ ω ∧ ψ
OperatorExpr wedge_by(const ScalarForm& omega);
OperatorExpr identity_op(const Chart& chart);
OperatorExpr zero_op(const Chart& chart, int degree);

// outer ∘ inner
OperatorExpr compose(const OperatorExpr& outer, const OperatorExpr& inner);
OperatorExpr compose(const OperatorExpr& a, const OperatorExpr& b, const OperatorExpr& c);
OperatorExpr operator+(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr operator-(const OperatorExpr& a, const OperatorExpr& b);
OperatorExpr operator*(const Rational& c, const OperatorExpr& a);

// Exact evaluation of the tree.
ScalarForm apply(const OperatorExpr& D, const ScalarForm& omega);

// [D1, D2] = D1∘D2 − (−1)^{k1 k2} D2∘D1
OperatorExpr graded_commutator(const OperatorExpr& a, const OperatorExpr& b);

// Θ(K) = [i(K), d]
OperatorExpr theta(const VectorForm& K);
// Θ^h(K) = h^*∘Θ(K)∘h^*
OperatorExpr theta_h(const VectorForm& K, const Connection& conn);
// D^h = h^*∘d
OperatorExpr cov_D(const Connection& conn);
// d^h = h^*∘d∘h^*
OperatorExpr cov_d(const Connection& conn);
// (ω∧D)ψ = ω ∧ Dψ
OperatorExpr module_action(const ScalarForm& omega, const OperatorExpr& D);

std::string describe(const OperatorExpr& D);

// Separating family used to decide operator equality: every coordinate
// function, every coordinate 1-form, and three random forms of coefficient
// degree ≤ 2 in each degree 0..n.
struct TestFamily {
  Chart chart;
  std::vector<ScalarForm> forms;
};

TestFamily make_test_family(const Chart& chart, Rng& rng);

struct Residual {
  int input_degree = 0;
  ScalarForm value;
};

// First test form on which lhs and rhs disagree, with the difference.
std::optional<Residual> operator_residual(const OperatorExpr& lhs, const OperatorExpr& rhs, const TestFamily& family);
inline bool operators_equal(const OperatorExpr& lhs, const OperatorExpr& rhs, const TestFamily& family) {
  return !operator_residual(lhs, rhs, family).has_value();
}

}  // namespace fncalc
