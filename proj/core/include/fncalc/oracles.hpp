#pragma once

#include "fncalc/forms.hpp"

namespace fncalc {

// Reference implementations evaluated pointwise on coordinate fields. They are
// slow and exist only to cross-check the production kernels.

// Coefficientwise permutation-sum formula for the projected insertion:
//   (i^h(K)ω)(X_1..X_{k+p}) = 1/((k+1)!(p−1)!) Σ_σ ε(σ) ω(K(X_σ1..X_σ(k+1)), hX_σ(k+2), .., hX_σ(k+p))
// with K ∈ Ω^{k+1}, k ≥ 0. Passing h = Id gives i(K).
ScalarForm insert_projected_oracle(const VectorForm& K, const VectorForm& h, const ScalarForm& omega);

// ω ∘ Λ^p A by evaluation on the fields A∂_i.
ScalarForm pullback_oracle(const ScalarForm& omega, const VectorForm& A);

}  // namespace fncalc
