#include "fncalc/error.hpp"
#include "fncalc/forms.hpp"

namespace fncalc {

VectorForm lie_bracket(const VectorForm& X, const VectorForm& Y) {
  require_same_chart(X.chart(), Y.chart(), "lie_bracket");
  if (X.degree() != 0 || Y.degree() != 0) throw Error(ErrorKind::DegreeError, "lie_bracket needs vector fields");
  const Chart& chart = X.chart();
  const std::size_t n = chart.dim();
  std::vector<Poly> out(n, Poly(chart));
  for (std::size_t j = 0; j < n; ++j) {
    const Poly xj = X.component(j).value();
    const Poly yj = Y.component(j).value();
    for (std::size_t i = 0; i < n; ++i) {
      const Poly xi = X.component(i).value();
      const Poly yi = Y.component(i).value();
      if (!xi.is_zero()) out[j] += xi * yj.partial(i);
      if (!yi.is_zero()) out[j] -= yi * xj.partial(i);
    }
  }
  return VectorForm::vector_field(chart, out);
}

ScalarForm lie_derivative(const VectorForm& K, const ScalarForm& omega) {
  // Θ(K) = i(K)∘d − (−1)^{k−1} d∘i(K)
  ScalarForm out = insert(K, ext_d(omega));
  ScalarForm second = ext_d(insert(K, omega));
  if (K.degree() % 2 == 0) {
    out += second;
  } else {
    out -= second;
  }
  return out;
}

VectorForm fn_bracket(const VectorForm& K, const VectorForm& L) {
  require_same_chart(K.chart(), L.chart(), "fn_bracket");
  const int k = K.degree();
  const int l = L.degree();
  const Chart& chart = K.chart();
  VectorForm out(chart, k + l);
  if (!out.in_range()) return out;
  // [Θ(K),Θ(L)] x^j = Θ(K)(L^j) − (−1)^{kl} Θ(L)(K^j), and Θ(M) x^j = M^j.
  const bool odd = (k * l) % 2 != 0;
  for (std::size_t j = 0; j < chart.dim(); ++j) {
    ScalarForm comp = lie_derivative(K, L.component(j));
    ScalarForm other = lie_derivative(L, K.component(j));
    if (odd) {
      comp += other;
    } else {
      comp -= other;
    }
    out.add_to_component(j, comp);
  }
  return out;
}

VectorForm fn_bracket_deg1_oracle(const VectorForm& K, const VectorForm& L) {
  require_same_chart(K.chart(), L.chart(), "fn_bracket_deg1_oracle");
  if (K.degree() != 1 || L.degree() != 1) throw Error(ErrorKind::DegreeError, "degree-(1,1) formula needs 1-forms");
  const Chart& chart = K.chart();
  const std::size_t n = chart.dim();
  auto apply = [](const VectorForm& A, const VectorForm& X) {
    const VectorForm args[] = {X};
    return eval_vector_form(A, args);
  };
  VectorForm out(chart, 2);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const VectorForm X = VectorForm::coordinate_field(chart, a);
      const VectorForm Y = VectorForm::coordinate_field(chart, b);
      const VectorForm KX = apply(K, X), KY = apply(K, Y);
      const VectorForm LX = apply(L, X), LY = apply(L, Y);
      const VectorForm XY = lie_bracket(X, Y);
      VectorForm value = lie_bracket(KX, LY) - lie_bracket(KY, LX);
      value -= apply(L, lie_bracket(KX, Y) - lie_bracket(KY, X));
      value -= apply(K, lie_bracket(LX, Y) - lie_bracket(LY, X));
      value += apply(L, apply(K, XY)) + apply(K, apply(L, XY));
      const IndexMask mask = (IndexMask{1} << a) | (IndexMask{1} << b);
      for (std::size_t j = 0; j < n; ++j) {
        out.add_to_component(j, ScalarForm::basis(chart, mask, value.component(j).value()));
      }
    }
  }
  return out;
}

VectorForm alg_bracket(const VectorForm& K, const VectorForm& L) {
  require_same_chart(K.chart(), L.chart(), "alg_bracket");
  if (K.degree() < 1 || L.degree() < 1) throw Error(ErrorKind::DegreeError, "algebraic bracket needs degrees >= 1");
  const int k = K.degree() - 1;
  const int l = L.degree() - 1;
  VectorForm out = insert_vv(K, L);
  if ((k * l) % 2 == 0) {
    out -= insert_vv(L, K);
  } else {
    out += insert_vv(L, K);
  }
  return out;
}

}  // namespace fncalc
