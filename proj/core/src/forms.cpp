#include "fncalc/forms.hpp"

#include <algorithm>
#include <functional>

#include "fncalc/error.hpp"

namespace fncalc {

// ---------------------------------------------------------------------------
// ScalarForm

ScalarForm::ScalarForm(Chart chart, int degree) : chart_(std::move(chart)), degree_(degree) {}

ScalarForm ScalarForm::function(const Chart& chart, const Poly& f) {
  ScalarForm out(chart, 0);
  out.add_term(0, f);
  return out;
}

ScalarForm ScalarForm::differential(const Chart& chart, std::size_t i) {
  if (i >= chart.dim()) throw Error(ErrorKind::IndexOutOfRange, "differential index out of range");
  return basis(chart, IndexMask{1} << i, Poly::constant(chart, 1));
}

ScalarForm ScalarForm::basis(const Chart& chart, IndexMask mask, const Poly& c) {
  ScalarForm out(chart, mask_degree(mask));
  out.add_term(mask, c);
  return out;
}

Poly ScalarForm::coefficient(IndexMask mask) const {
  auto it = coeffs_.find(mask);
  return it == coeffs_.end() ? Poly(chart_) : it->second;
}

void ScalarForm::add_term(IndexMask mask, const Poly& c) {
  if (c.is_zero()) return;
  if (mask_degree(mask) != degree_) throw Error(ErrorKind::DegreeError, "index tuple does not match form degree");
  if (chart_.bound() && (mask >> chart_.dim()) != 0) throw Error(ErrorKind::IndexOutOfRange, "form index out of range");
  if (c.chart().bound()) require_same_chart(chart_, c.chart(), "form coefficient");
  auto [it, inserted] = coeffs_.try_emplace(mask, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) coeffs_.erase(it);
  }
}

void ScalarForm::require_compatible(const ScalarForm& other, const char* what) const {
  require_same_chart(chart_, other.chart_, what);
  if (degree_ != other.degree_) {
    throw Error(ErrorKind::DegreeError, std::string(what) + ": degree " + std::to_string(degree_) + " vs " +
                                            std::to_string(other.degree_));
  }
}

ScalarForm& ScalarForm::operator+=(const ScalarForm& other) {
  if (!chart_.bound() && coeffs_.empty()) return *this = other;
  require_compatible(other, "form add");
  for (const auto& [mask, c] : other.coeffs_) add_term(mask, c);
  return *this;
}

ScalarForm& ScalarForm::operator-=(const ScalarForm& other) {
  if (!chart_.bound() && coeffs_.empty()) return *this = -other;
  require_compatible(other, "form subtract");
  for (const auto& [mask, c] : other.coeffs_) add_term(mask, -c);
  return *this;
}

ScalarForm& ScalarForm::operator*=(const Rational& c) {
  if (sgn(c) == 0) {
    coeffs_.clear();
    return *this;
  }
  for (auto& [mask, p] : coeffs_) p *= c;
  return *this;
}

ScalarForm& ScalarForm::operator*=(const Poly& f) {
  if (f.chart().bound()) require_same_chart(chart_, f.chart(), "form scale");
  for (auto it = coeffs_.begin(); it != coeffs_.end();) {
    it->second = it->second * f;
    if (it->second.is_zero()) {
      it = coeffs_.erase(it);
    } else {
      ++it;
    }
  }
  return *this;
}

ScalarForm ScalarForm::operator-() const {
  ScalarForm out = *this;
  for (auto& [mask, p] : out.coeffs_) p = -p;
  return out;
}

bool operator==(const ScalarForm& a, const ScalarForm& b) {
  return a.chart_ == b.chart_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
}

std::uint32_t ScalarForm::coefficient_degree() const {
  std::uint32_t d = 0;
  for (const auto& [mask, p] : coeffs_) d = std::max(d, p.total_degree());
  return d;
}

// ---------------------------------------------------------------------------
// VectorForm

VectorForm::VectorForm(Chart chart, int degree) : chart_(std::move(chart)), degree_(degree) {
  components_.assign(chart_.dim(), ScalarForm(chart_, degree));
}

VectorForm VectorForm::identity(const Chart& chart) {
  VectorForm out(chart, 1);
  for (std::size_t j = 0; j < chart.dim(); ++j) out.components_[j] = ScalarForm::differential(chart, j);
  return out;
}

VectorForm VectorForm::vector_field(const Chart& chart, const std::vector<Poly>& components) {
  if (components.size() != chart.dim()) throw Error(ErrorKind::ArityMismatch, "vector field needs one entry per coordinate");
  VectorForm out(chart, 0);
  for (std::size_t j = 0; j < components.size(); ++j) out.components_[j].add_term(0, components[j]);
  return out;
}

VectorForm VectorForm::coordinate_field(const Chart& chart, std::size_t i) {
  if (i >= chart.dim()) throw Error(ErrorKind::IndexOutOfRange, "coordinate field index out of range");
  VectorForm out(chart, 0);
  out.components_[i].add_term(0, Poly::constant(chart, 1));
  return out;
}

VectorForm VectorForm::from_matrix(const Chart& chart, const std::vector<std::vector<Poly>>& matrix) {
  const std::size_t n = chart.dim();
  if (matrix.size() != n) throw Error(ErrorKind::ArityMismatch, "matrix must be n x n");
  VectorForm out(chart, 1);
  for (std::size_t row = 0; row < n; ++row) {
    if (matrix[row].size() != n) throw Error(ErrorKind::ArityMismatch, "matrix must be n x n");
    for (std::size_t col = 0; col < n; ++col) out.components_[row].add_term(IndexMask{1} << col, matrix[row][col]);
  }
  return out;
}

VectorForm VectorForm::from_components(const Chart& chart, int degree, std::vector<ScalarForm> components) {
  if (components.size() != chart.dim()) throw Error(ErrorKind::ArityMismatch, "need one component per coordinate");
  VectorForm out(chart, degree);
  for (std::size_t j = 0; j < components.size(); ++j) out.add_to_component(j, components[j]);
  return out;
}

VectorForm VectorForm::simple(const ScalarForm& omega, std::size_t j) {
  VectorForm out(omega.chart(), omega.degree());
  out.add_to_component(j, omega);
  return out;
}

bool VectorForm::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const ScalarForm& c) { return c.is_zero(); });
}

void VectorForm::add_to_component(std::size_t j, const ScalarForm& omega) {
  if (j >= components_.size()) throw Error(ErrorKind::IndexOutOfRange, "output index out of range");
  if (omega.is_zero() && omega.degree() != degree_) return;
  components_[j] += omega;
}

Poly VectorForm::matrix_entry(std::size_t row, std::size_t col) const {
  return component(row).coefficient(IndexMask{1} << col);
}

VectorForm& VectorForm::operator+=(const VectorForm& other) {
  if (!chart_.bound()) return *this = other;
  require_same_chart(chart_, other.chart_, "vector form add");
  if (degree_ != other.degree_) throw Error(ErrorKind::DegreeError, "vector form add: degree mismatch");
  for (std::size_t j = 0; j < components_.size(); ++j) components_[j] += other.components_[j];
  return *this;
}

VectorForm& VectorForm::operator-=(const VectorForm& other) {
  if (!chart_.bound()) return *this = -other;
  require_same_chart(chart_, other.chart_, "vector form subtract");
  if (degree_ != other.degree_) throw Error(ErrorKind::DegreeError, "vector form subtract: degree mismatch");
  for (std::size_t j = 0; j < components_.size(); ++j) components_[j] -= other.components_[j];
  return *this;
}

VectorForm& VectorForm::operator*=(const Rational& c) {
  for (auto& comp : components_) comp *= c;
  return *this;
}

VectorForm VectorForm::operator-() const {
  VectorForm out = *this;
  for (auto& comp : out.components_) comp = -comp;
  return out;
}

bool operator==(const VectorForm& a, const VectorForm& b) {
  return a.chart_ == b.chart_ && a.degree_ == b.degree_ && a.components_ == b.components_;
}

std::uint32_t VectorForm::coefficient_degree() const {
  std::uint32_t d = 0;
  for (const auto& c : components_) d = std::max(d, c.coefficient_degree());
  return d;
}

// ---------------------------------------------------------------------------
// Exterior algebra

ScalarForm wedge(const ScalarForm& omega, const ScalarForm& psi) {
  require_same_chart(omega.chart(), psi.chart(), "wedge");
  ScalarForm out(omega.chart(), omega.degree() + psi.degree());
  if (!out.in_range()) return out;
  for (const auto& [a, f] : omega.coeffs()) {
    for (const auto& [b, g] : psi.coeffs()) {
      if ((a & b) != 0) continue;
      Poly c = f * g;
      if (merge_sign(a, b) < 0) c = -c;
      out.add_term(a | b, c);
    }
  }
  return out;
}

VectorForm wedge(const ScalarForm& omega, const VectorForm& K) {
  require_same_chart(omega.chart(), K.chart(), "wedge");
  std::vector<ScalarForm> comps;
  comps.reserve(K.dim());
  for (const auto& c : K.components()) comps.push_back(wedge(omega, c));
  return VectorForm::from_components(K.chart(), omega.degree() + K.degree(), std::move(comps));
}

ScalarForm ext_d(const ScalarForm& omega) {
  const std::size_t n = omega.chart().dim();
  ScalarForm out(omega.chart(), omega.degree() + 1);
  if (!out.in_range()) return out;
  for (const auto& [mask, f] : omega.coeffs()) {
    for (std::size_t i = 0; i < n; ++i) {
      const IndexMask bit = IndexMask{1} << i;
      if (mask & bit) continue;
      Poly g = f.partial(i);
      if (g.is_zero()) continue;
      if (std::popcount(mask & (bit - 1)) % 2 != 0) g = -g;
      out.add_term(mask | bit, g);
    }
  }
  return out;
}

namespace {

// Determinant by cofactor expansion along the first row.
Poly determinant(const Chart& chart, const std::vector<std::vector<Poly>>& m) {
  const std::size_t p = m.size();
  if (p == 0) return Poly::constant(chart, 1);
  if (p == 1) return m[0][0];
  Poly det(chart);
  for (std::size_t col = 0; col < p; ++col) {
    if (m[0][col].is_zero()) continue;
    std::vector<std::vector<Poly>> minor;
    minor.reserve(p - 1);
    for (std::size_t r = 1; r < p; ++r) {
      std::vector<Poly> row;
      row.reserve(p - 1);
      for (std::size_t c = 0; c < p; ++c) {
        if (c != col) row.push_back(m[r][c]);
      }
      minor.push_back(std::move(row));
    }
    Poly term = m[0][col] * determinant(chart, minor);
    if (col % 2 == 0) {
      det += term;
    } else {
      det -= term;
    }
  }
  return det;
}

}  // namespace

Poly eval_form(const ScalarForm& omega, std::span<const VectorForm> fields) {
  if (!omega.in_range() || static_cast<int>(fields.size()) != omega.degree()) {
    throw Error(ErrorKind::ArityMismatch, "form of degree " + std::to_string(omega.degree()) + " evaluated on " +
                                              std::to_string(fields.size()) + " fields");
  }
  for (const auto& X : fields) {
    require_same_chart(omega.chart(), X.chart(), "eval_form");
    if (X.degree() != 0) throw Error(ErrorKind::DegreeError, "eval_form arguments must be vector fields");
  }
  Poly total(omega.chart());
  for (const auto& [mask, f] : omega.coeffs()) {
    const auto idx = mask_indices(mask);
    std::vector<std::vector<Poly>> m(idx.size(), std::vector<Poly>(fields.size()));
    for (std::size_t a = 0; a < idx.size(); ++a) {
      for (std::size_t b = 0; b < fields.size(); ++b) m[a][b] = fields[b].component(idx[a]).value();
    }
    total += f * determinant(omega.chart(), m);
  }
  return total;
}

VectorForm eval_vector_form(const VectorForm& K, std::span<const VectorForm> fields) {
  std::vector<Poly> comps;
  comps.reserve(K.dim());
  for (const auto& c : K.components()) comps.push_back(eval_form(c, fields));
  return VectorForm::vector_field(K.chart(), comps);
}

// ---------------------------------------------------------------------------
// Insertion and composition with endomorphisms

namespace {

// Σ_j (−1)^{(j−1)k} s_1 ∧ … ∧ (dx^{i_j} ∘ K) ∧ … ∧ s_p summed over the terms
// of ω, where s_l is the 1-form in slot l (dx^{i_l} or dx^{i_l} ∘ h).
ScalarForm insert_impl(const VectorForm& K, const VectorForm* h, const ScalarForm& omega) {
  require_same_chart(K.chart(), omega.chart(), "insert");
  const Chart& chart = omega.chart();
  const int k = K.degree() - 1;
  ScalarForm out(chart, omega.degree() + k);
  if (omega.degree() == 0 || !out.in_range()) return out;

  auto slot = [&](int i) -> ScalarForm {
    return h ? h->component(static_cast<std::size_t>(i)) : ScalarForm::differential(chart, static_cast<std::size_t>(i));
  };
  const Poly one = Poly::constant(chart, 1);
  for (const auto& [mask, f] : omega.coeffs()) {
    const auto idx = mask_indices(mask);
    const std::size_t p = idx.size();
    std::vector<ScalarForm> slots;
    slots.reserve(p);
    for (int i : idx) slots.push_back(slot(i));
    // prefix[j] = s_1 ∧ … ∧ s_j, suffix[j] = s_{j+1} ∧ … ∧ s_p (0-based)
    std::vector<ScalarForm> prefix(p + 1), suffix(p + 1);
    prefix[0] = ScalarForm::function(chart, one);
    for (std::size_t j = 0; j < p; ++j) prefix[j + 1] = wedge(prefix[j], slots[j]);
    suffix[p] = ScalarForm::function(chart, one);
    for (std::size_t j = p; j-- > 0;) suffix[j] = wedge(slots[j], suffix[j + 1]);

    ScalarForm acc(chart, out.degree());
    for (std::size_t j = 0; j < p; ++j) {
      const ScalarForm& inserted = K.component(static_cast<std::size_t>(idx[j]));
      if (inserted.is_zero()) continue;
      ScalarForm term = wedge(wedge(prefix[j], inserted), suffix[j + 1]);
      if ((static_cast<long>(j) * k) % 2 != 0) term = -term;
      acc += term;
    }
    acc *= f;
    out += acc;
  }
  return out;
}

}  // namespace

ScalarForm insert(const VectorForm& K, const ScalarForm& omega) { return insert_impl(K, nullptr, omega); }

VectorForm insert_vv(const VectorForm& K, const VectorForm& L) {
  require_same_chart(K.chart(), L.chart(), "insert_vv");
  std::vector<ScalarForm> comps;
  comps.reserve(L.dim());
  for (const auto& c : L.components()) comps.push_back(insert(K, c));
  return VectorForm::from_components(L.chart(), L.degree() + K.degree() - 1, std::move(comps));
}

ScalarForm insert_projected(const VectorForm& K, const VectorForm& h, const ScalarForm& omega) {
  require_same_chart(K.chart(), h.chart(), "insert_projected");
  if (h.degree() != 1) throw Error(ErrorKind::DegreeError, "projection must be a 1-form");
  return insert_impl(K, &h, omega);
}

VectorForm insert_projected_vv(const VectorForm& K, const VectorForm& h, const VectorForm& L) {
  std::vector<ScalarForm> comps;
  comps.reserve(L.dim());
  for (const auto& c : L.components()) comps.push_back(insert_projected(K, h, c));
  return VectorForm::from_components(L.chart(), L.degree() + K.degree() - 1, std::move(comps));
}

ScalarForm pullback(const ScalarForm& omega, const VectorForm& A) {
  require_same_chart(omega.chart(), A.chart(), "pullback");
  if (A.degree() != 1) throw Error(ErrorKind::DegreeError, "pullback needs an endomorphism (1-form)");
  const Chart& chart = omega.chart();
  ScalarForm out(chart, omega.degree());
  for (const auto& [mask, f] : omega.coeffs()) {
    ScalarForm acc = ScalarForm::function(chart, f);
    for (int i : mask_indices(mask)) acc = wedge(acc, A.component(static_cast<std::size_t>(i)));
    out += acc;
  }
  return out;
}

VectorForm precompose(const VectorForm& K, const VectorForm& A) {
  std::vector<ScalarForm> comps;
  comps.reserve(K.dim());
  for (const auto& c : K.components()) comps.push_back(pullback(c, A));
  return VectorForm::from_components(K.chart(), K.degree(), std::move(comps));
}

VectorForm compose_values(const VectorForm& A, const VectorForm& K) {
  require_same_chart(A.chart(), K.chart(), "compose_values");
  if (A.degree() != 1) throw Error(ErrorKind::DegreeError, "compose_values needs an endomorphism (1-form)");
  const std::size_t n = K.dim();
  VectorForm out(K.chart(), K.degree());
  for (std::size_t j = 0; j < n; ++j) {
    for (const auto& [mask, a] : A.component(j).coeffs()) {
      const std::size_t m = static_cast<std::size_t>(std::countr_zero(mask));
      if (K.component(m).is_zero()) continue;
      out.add_to_component(j, a * K.component(m));
    }
  }
  return out;
}

}  // namespace fncalc
