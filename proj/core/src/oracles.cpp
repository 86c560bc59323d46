#include "fncalc/oracles.hpp"

#include <algorithm>
#include <numeric>

#include "fncalc/error.hpp"

namespace fncalc {

namespace {

int permutation_sign(const std::vector<int>& perm) {
  int inversions = 0;
  for (std::size_t a = 0; a < perm.size(); ++a) {
    for (std::size_t b = a + 1; b < perm.size(); ++b) inversions += perm[a] > perm[b] ? 1 : 0;
  }
  return parity_sign(inversions);
}

Rational factorial(int m) {
  Rational out = 1;
  for (int i = 2; i <= m; ++i) out *= i;
  return out;
}

// Every strictly increasing index tuple of length p, as a mask.
std::vector<IndexMask> masks_of_degree(std::size_t n, int p) {
  std::vector<IndexMask> out;
  for (IndexMask m = 0; m < (IndexMask{1} << n); ++m) {
    if (mask_degree(m) == p) out.push_back(m);
  }
  return out;
}

}  // namespace

ScalarForm insert_projected_oracle(const VectorForm& K, const VectorForm& h, const ScalarForm& omega) {
  require_same_chart(K.chart(), omega.chart(), "insert oracle");
  require_same_chart(h.chart(), omega.chart(), "insert oracle");
  const Chart& chart = omega.chart();
  const int k = K.degree() - 1;
  const int p = omega.degree();
  if (k < 0) throw Error(ErrorKind::DegreeError, "insert oracle needs deg K >= 1");
  ScalarForm out(chart, p + k);
  if (p == 0 || !out.in_range()) return out;
  const int total = k + p;
  const Rational scale = 1 / (factorial(k + 1) * factorial(p - 1));

  std::vector<VectorForm> hfields(chart.dim());
  for (std::size_t i = 0; i < chart.dim(); ++i) {
    const VectorForm e = VectorForm::coordinate_field(chart, i);
    hfields[i] = eval_vector_form(h, std::span<const VectorForm>(&e, 1));
  }
  for (IndexMask mask : masks_of_degree(chart.dim(), total)) {
    const auto idx = mask_indices(mask);
    std::vector<int> perm(static_cast<std::size_t>(total));
    std::iota(perm.begin(), perm.end(), 0);
    Poly acc(chart);
    do {
      std::vector<VectorForm> kargs;
      for (int a = 0; a <= k; ++a) kargs.push_back(VectorForm::coordinate_field(chart, idx[perm[a]]));
      std::vector<VectorForm> args{eval_vector_form(K, kargs)};
      for (int a = k + 1; a < total; ++a) args.push_back(hfields[idx[perm[a]]]);
      Poly v = eval_form(omega, args);
      if (v.is_zero()) continue;
      if (permutation_sign(perm) < 0) {
        acc -= v;
      } else {
        acc += v;
      }
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (!acc.is_zero()) out.add_term(mask, acc * scale);
  }
  return out;
}

ScalarForm pullback_oracle(const ScalarForm& omega, const VectorForm& A) {
  require_same_chart(omega.chart(), A.chart(), "pullback oracle");
  const Chart& chart = omega.chart();
  ScalarForm out(chart, omega.degree());
  if (!omega.in_range()) return out;
  for (IndexMask mask : masks_of_degree(chart.dim(), omega.degree())) {
    std::vector<VectorForm> args;
    for (int i : mask_indices(mask)) {
      const VectorForm e = VectorForm::coordinate_field(chart, static_cast<std::size_t>(i));
      args.push_back(eval_vector_form(A, std::span<const VectorForm>(&e, 1)));
    }
    Poly v = eval_form(omega, args);
    if (!v.is_zero()) out.add_term(mask, v);
  }
  return out;
}

}  // namespace fncalc
