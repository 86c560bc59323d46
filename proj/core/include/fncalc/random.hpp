#pragma once

#include <cstdint>
#include <random>

#include "fncalc/forms.hpp"

namespace fncalc {

// SplitMix64 finalizer; used to derive independent seeds from a counter.
std::uint64_t mix_seed(std::uint64_t x);

// Deterministic pseudo-random source. Bounded draws use a fixed mapping so
// results do not depend on the standard library's distributions.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(mix_seed(seed)) {}

  std::uint64_t next() { return engine_(); }
  // Uniform integer in [lo, hi].
  int uniform(int lo, int hi);
  // True with probability num/den.
  bool chance(int num, int den) { return uniform(0, den - 1) < num; }

 private:
  std::mt19937_64 engine_;
};

struct RandomShape {
  int max_degree = 2;  // total degree cap per term
  int max_terms = 2;   // terms per nonzero coefficient
  int density_num = 1; // probability a coefficient slot is nonzero
  int density_den = 2;
};

// Nonzero polynomial with small rational coefficients.
Poly random_poly(Rng& rng, const Chart& chart, const RandomShape& shape = {});
// Random p-form; nonzero whenever 0 <= p <= n.
ScalarForm random_scalar_form(Rng& rng, const Chart& chart, int degree, const RandomShape& shape = {});
// Random TU-valued k-form; nonzero whenever 0 <= k <= n.
VectorForm random_vector_form(Rng& rng, const Chart& chart, int degree, const RandomShape& shape = {});

}  // namespace fncalc
