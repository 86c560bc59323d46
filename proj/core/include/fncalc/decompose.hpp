#pragma once

#include <cstdint>

#include "fncalc/operator.hpp"

namespace fncalc {

// D = Θ(K)∘h^* + i^h(L), or D = Θ^h(K) + i^h(L) for decompose_h.
struct Decomposition {
  VectorForm K;
  VectorForm L;
};

// Extracts K from Df = df∘K on coordinate functions and L from the algebraic
// remainder on coordinate 1-forms. The derivation property over h^* is checked
// on sampled products drawn from `seed`.
// Throws Error(DerivationCheckFailed), Error(ExtractionInconsistent),
// Error(DegreeError) for negative degree.
Decomposition decompose(const OperatorExpr& D, const Connection& conn, std::uint64_t seed = 0);

// Same for derivations commuting with h^*: K comes out horizontal and L
// h-equivariant. Throws Error(NotInDerH) when [D, h^*] ≠ 0 on the test family.
Decomposition decompose_h(const OperatorExpr& D, const Connection& conn, std::uint64_t seed = 0);

// Sampled Leibniz rule D(a∧b) = Da∧h^*b + (−1)^{k|a|} h^*a∧Db.
bool is_derivation_over_hstar(const OperatorExpr& D, const Connection& conn, Rng& rng);

// [K, L]^{∧,h} = i^h(K)L − (−1)^{kl} i^h(L)K for h-equivariant K ∈ Ω^{k+1},
// L ∈ Ω^{l+1}. Throws Error(NotEquivariant), Error(DegreeError) for degree 0.
VectorForm hat_bracket(const VectorForm& K, const VectorForm& L, const Connection& conn);

}  // namespace fncalc
