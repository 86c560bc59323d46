#include "fncalc/random.hpp"

namespace fncalc {

std::uint64_t mix_seed(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

int Rng::uniform(int lo, int hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  // Multiply-shift mapping of the top 32 bits onto [0, span).
  const std::uint64_t r = (next() >> 32) * span;
  return lo + static_cast<int>(r >> 32);
}

Poly random_poly(Rng& rng, const Chart& chart, const RandomShape& shape) {
  const int n = static_cast<int>(chart.dim());
  std::vector<Term> terms;
  const int count = rng.uniform(1, std::max(1, shape.max_terms));
  for (int t = 0; t < count; ++t) {
    Term term;
    const int deg = rng.uniform(0, shape.max_degree);
    for (int d = 0; d < deg; ++d) ++term.mono.exps[static_cast<std::size_t>(rng.uniform(0, n - 1))];
    term.mono.degree = static_cast<std::uint32_t>(deg);
    int num = rng.uniform(1, 3);
    if (rng.chance(1, 2)) num = -num;
    const int den = rng.chance(1, 4) ? 2 : 1;
    term.coeff = Rational(num, den);
    term.coeff.canonicalize();
    terms.push_back(std::move(term));
  }
  Poly p = Poly::from_terms(chart, std::move(terms));
  if (p.is_zero()) p = Poly::constant(chart, 1);
  return p;
}

ScalarForm random_scalar_form(Rng& rng, const Chart& chart, int degree, const RandomShape& shape) {
  ScalarForm out(chart, degree);
  if (!out.in_range()) return out;
  const IndexMask full = (IndexMask{1} << chart.dim()) - 1;
  std::vector<IndexMask> masks;
  for (IndexMask m = 0; m <= full; ++m) {
    if (mask_degree(m) == degree) masks.push_back(m);
  }
  for (IndexMask m : masks) {
    if (rng.chance(shape.density_num, shape.density_den)) out.add_term(m, random_poly(rng, chart, shape));
  }
  if (out.is_zero()) {
    out.add_term(masks[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(masks.size()) - 1))],
                 random_poly(rng, chart, shape));
  }
  return out;
}

VectorForm random_vector_form(Rng& rng, const Chart& chart, int degree, const RandomShape& shape) {
  VectorForm out(chart, degree);
  if (!out.in_range()) return out;
  const IndexMask full = (IndexMask{1} << chart.dim()) - 1;
  std::vector<IndexMask> masks;
  for (IndexMask m = 0; m <= full; ++m) {
    if (mask_degree(m) == degree) masks.push_back(m);
  }
  for (std::size_t j = 0; j < chart.dim(); ++j) {
    for (IndexMask m : masks) {
      if (rng.chance(shape.density_num, shape.density_den)) {
        out.add_to_component(j, ScalarForm::basis(chart, m, random_poly(rng, chart, shape)));
      }
    }
  }
  if (out.is_zero()) {
    const auto j = static_cast<std::size_t>(rng.uniform(0, static_cast<int>(chart.dim()) - 1));
    const auto m = masks[static_cast<std::size_t>(rng.uniform(0, static_cast<int>(masks.size()) - 1))];
    out.add_to_component(j, ScalarForm::basis(chart, m, random_poly(rng, chart, shape)));
  }
  return out;
}

}  // namespace fncalc
