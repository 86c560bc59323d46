#pragma once

#include <vector>

#include "fncalc/connection.hpp"

namespace fncalc {

// Product bundle U × S over a base chart U with fiber chart S. The total chart
// lists the base coordinates first. gamma[s][a] (s fiber, a base) are the lift
// coefficients over the total chart: χ(∂_a) = ∂_a + Σ_s gamma[s][a] ∂_s.
class ProductBundle {
 public:
  // Throws Error(InvalidChart) on coordinate name clashes and
  // Error(ArityMismatch) when gamma is not fiber-dim × base-dim.
  ProductBundle(Chart base, Chart fiber, std::vector<std::vector<Poly>> gamma);

  const Chart& base() const { return base_; }
  const Chart& fiber() const { return fiber_; }
  const Chart& total() const { return total_; }
  const std::vector<std::vector<Poly>>& gamma() const { return gamma_; }
  std::size_t base_dim() const { return base_.dim(); }
  std::size_t fiber_dim() const { return fiber_.dim(); }

 private:
  Chart base_;
  Chart fiber_;
  Chart total_;
  std::vector<std::vector<Poly>> gamma_;
};

// φ_E(ξ, η) = (0, η − Γξ); its vertical bundle is the fiber tangent bundle.
Connection induced_connection(const ProductBundle& pb);

// p^*ω: base coefficients re-expressed over the total chart. Forms already on
// the total chart are accepted when they only involve base coordinates.
// Throws Error(FiberCoordinates), Error(ChartMismatch).
ScalarForm pullback_base(const ProductBundle& pb, const ScalarForm& omega);

// χX = (X, ΓX)
VectorForm chi_lift(const ProductBundle& pb, const VectorForm& X);

// (χ_*K)(X_1..X_k) = χ(K(Tp X_1, .., Tp X_k))
VectorForm chi_star(const ProductBundle& pb, const VectorForm& K);

}  // namespace fncalc
