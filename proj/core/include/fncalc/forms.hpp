#pragma once

#include <map>
#include <span>
#include <vector>

#include "fncalc/chart.hpp"
#include "fncalc/index_mask.hpp"
#include "fncalc/poly.hpp"

namespace fncalc {

// Scalar differential p-form Σ_I ω_I dx^I on a chart, stored on strictly
// increasing index tuples. Degrees outside 0..n are allowed and always denote
// the zero form.
class ScalarForm {
 public:
  ScalarForm() = default;
  ScalarForm(Chart chart, int degree);

  static ScalarForm zero(const Chart& chart, int degree) { return ScalarForm(chart, degree); }
  static ScalarForm function(const Chart& chart, const Poly& f);
  static ScalarForm function(const Poly& f) { return function(f.chart(), f); }
  // dx^i
  static ScalarForm differential(const Chart& chart, std::size_t i);
  // c · dx^I
  static ScalarForm basis(const Chart& chart, IndexMask mask, const Poly& c);

  const Chart& chart() const { return chart_; }
  int degree() const { return degree_; }
  bool in_range() const { return degree_ >= 0 && static_cast<std::size_t>(degree_) <= chart_.dim(); }
  bool is_zero() const { return coeffs_.empty(); }
  const std::map<IndexMask, Poly>& coeffs() const { return coeffs_; }
  Poly coefficient(IndexMask mask) const;
  // Value of a 0-form.
  Poly value() const { return coefficient(0); }

  // Accumulates c · dx^mask.
  void add_term(IndexMask mask, const Poly& c);

  ScalarForm& operator+=(const ScalarForm& other);
  ScalarForm& operator-=(const ScalarForm& other);
  ScalarForm& operator*=(const Rational& c);
  ScalarForm& operator*=(const Poly& f);
  ScalarForm operator-() const;

  friend ScalarForm operator+(ScalarForm a, const ScalarForm& b) { return a += b; }
  friend ScalarForm operator-(ScalarForm a, const ScalarForm& b) { return a -= b; }
  friend ScalarForm operator*(const Rational& c, ScalarForm a) { return a *= c; }
  friend ScalarForm operator*(const Poly& f, ScalarForm a) { return a *= f; }
  friend bool operator==(const ScalarForm& a, const ScalarForm& b);

  // Largest total degree among the coefficients.
  std::uint32_t coefficient_degree() const;

 private:
  void require_compatible(const ScalarForm& other, const char* what) const;

  Chart chart_;
  int degree_ = 0;
  std::map<IndexMask, Poly> coeffs_;
};

// Tangent-bundle-valued k-form K = Σ_j K^j ⊗ ∂_j. Component j is the scalar
// k-form dx^j ∘ K.
class VectorForm {
 public:
  VectorForm() = default;
  VectorForm(Chart chart, int degree);

  static VectorForm zero(const Chart& chart, int degree) { return VectorForm(chart, degree); }
  // Id ∈ Ω^1(U;TU).
  static VectorForm identity(const Chart& chart);
  // Σ_j fields[j] ∂_j
  static VectorForm vector_field(const Chart& chart, const std::vector<Poly>& components);
  // ∂_i
  static VectorForm coordinate_field(const Chart& chart, std::size_t i);
  // Endomorphism with matrix[row][col] = dx^row(A ∂_col).
  static VectorForm from_matrix(const Chart& chart, const std::vector<std::vector<Poly>>& matrix);
  static VectorForm from_components(const Chart& chart, int degree, std::vector<ScalarForm> components);
  // ω ⊗ ∂_j
  static VectorForm simple(const ScalarForm& omega, std::size_t j);

  const Chart& chart() const { return chart_; }
  int degree() const { return degree_; }
  bool in_range() const { return degree_ >= 0 && static_cast<std::size_t>(degree_) <= chart_.dim(); }
  bool is_zero() const;
  std::size_t dim() const { return chart_.dim(); }

  const ScalarForm& component(std::size_t j) const { return components_.at(j); }
  const std::vector<ScalarForm>& components() const { return components_; }
  void add_to_component(std::size_t j, const ScalarForm& omega);

  // dx^row(A ∂_col) for a 1-form.
  Poly matrix_entry(std::size_t row, std::size_t col) const;
  // Coefficient of dx^mask ⊗ ∂_j.
  Poly coefficient(IndexMask mask, std::size_t j) const { return component(j).coefficient(mask); }

  VectorForm& operator+=(const VectorForm& other);
  VectorForm& operator-=(const VectorForm& other);
  VectorForm& operator*=(const Rational& c);
  VectorForm operator-() const;

  friend VectorForm operator+(VectorForm a, const VectorForm& b) { return a += b; }
  friend VectorForm operator-(VectorForm a, const VectorForm& b) { return a -= b; }
  friend VectorForm operator*(const Rational& c, VectorForm a) { return a *= c; }
  friend bool operator==(const VectorForm& a, const VectorForm& b);

  std::uint32_t coefficient_degree() const;

 private:
  Chart chart_;
  int degree_ = 0;
  std::vector<ScalarForm> components_;
};

// ω ∧ ψ. Throws Error(ChartMismatch).
ScalarForm wedge(const ScalarForm& omega, const ScalarForm& psi);
// ω ∧ K, acting on the form part of K.
VectorForm wedge(const ScalarForm& omega, const VectorForm& K);

// Coordinate exterior derivative.
ScalarForm ext_d(const ScalarForm& omega);

// ω(X1, ..., Xp) for vector fields Xi. Throws Error(ArityMismatch).
Poly eval_form(const ScalarForm& omega, std::span<const VectorForm> fields);
// K(X1, ..., Xk) as a vector field.
VectorForm eval_vector_form(const VectorForm& K, std::span<const VectorForm> fields);

// Lie bracket of vector fields. Throws Error(DegreeError) for non-zero degree.
VectorForm lie_bracket(const VectorForm& X, const VectorForm& Y);

// Insertion i(K)ω for K ∈ Ω^{k+1}(U;TU): the algebraic derivation of degree k
// with i(K)(dx^j) = dx^j ∘ K. For a vector field this is contraction.
ScalarForm insert(const VectorForm& K, const ScalarForm& omega);
// i(K)L, acting on the form part of L and keeping its output leg.
VectorForm insert_vv(const VectorForm& K, const VectorForm& L);

// Insertion relative to an endomorphism h of TU: every argument slot that K
// does not consume is precomposed with h. With h = Id this is insert().
ScalarForm insert_projected(const VectorForm& K, const VectorForm& h, const ScalarForm& omega);
VectorForm insert_projected_vv(const VectorForm& K, const VectorForm& h, const VectorForm& L);

// A^*ω: every argument slot precomposed with the endomorphism A ∈ Ω^1(U;TU).
ScalarForm pullback(const ScalarForm& omega, const VectorForm& A);
// K ∘ Λ^k A
VectorForm precompose(const VectorForm& K, const VectorForm& A);
// A ∘ K
VectorForm compose_values(const VectorForm& A, const VectorForm& K);

// Lie derivation Θ(K)ω = [i(K), d]ω.
ScalarForm lie_derivative(const VectorForm& K, const ScalarForm& omega);

// Frölicher–Nijenhuis bracket, computed from [Θ(K), Θ(L)] on coordinate
// functions.
VectorForm fn_bracket(const VectorForm& K, const VectorForm& L);

// The explicit degree-(1,1) bracket formula evaluated on coordinate fields.
// Kept independent of fn_bracket as a cross-check.
VectorForm fn_bracket_deg1_oracle(const VectorForm& K, const VectorForm& L);

// [K, L]^∧ = i(K)L − (−1)^{kl} i(L)K for K ∈ Ω^{k+1}, L ∈ Ω^{l+1}.
VectorForm alg_bracket(const VectorForm& K, const VectorForm& L);

}  // namespace fncalc
