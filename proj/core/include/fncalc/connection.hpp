#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "fncalc/forms.hpp"

namespace fncalc {

// A connection in the sense of a smooth fiber projection φ: TU → F onto a
// sub-bundle F (the vertical bundle), viewed as φ ∈ Ω^1(U;TU). Construction
// validates φ∘φ = φ exactly and caches the horizontal projection h = Id − φ
// together with h^*(dx^I) for every index tuple.
class Connection {
 public:
  const Chart& chart() const { return data_->chart; }
  const VectorForm& phi() const { return data_->phi; }
  const VectorForm& h() const { return data_->h; }
  // Rank of the vertical bundle, trace(φ).
  int rank() const { return data_->rank; }
  const ScalarForm& hstar_basis(IndexMask mask) const { return data_->hstar_basis.at(mask); }

  friend Connection make_connection(const VectorForm& phi);

 private:
  struct Data {
    Chart chart;
    VectorForm phi;
    VectorForm h;
    int rank = 0;
    std::vector<ScalarForm> hstar_basis;
  };
  explicit Connection(std::shared_ptr<const Data> data) : data_(std::move(data)) {}

  std::shared_ptr<const Data> data_;
};

// Throws Error(NotIdempotent) when φ∘φ ≠ φ, Error(NonConstantTrace) when the
// trace is not a constant integer in [0, n].
Connection make_connection(const VectorForm& phi);
// phi_matrix[row][col] = dx^row(φ ∂_col).
Connection make_connection(const Chart& chart, const std::vector<std::vector<Poly>>& phi_matrix);

// φ = 0, h = Id.
Connection trivial_connection(const Chart& chart);

// On (x, y, z): φ = dz ⊗ ∂_z − x dy ⊗ ∂_z, horizontal bundle spanned by ∂_x and
// ∂_y + x ∂_z. Curvature dx∧dy ⊗ ∂_z, cocurvature 0.
Connection heisenberg_connection();

// (h^*ω)(X1..Xp) = ω(hX1..hXp)
ScalarForm h_star(const Connection& conn, const ScalarForm& omega);
// K ∘ Λh, written h^*K.
VectorForm h_star(const Connection& conn, const VectorForm& K);

// R(X,Y) = φ[hX, hY]
VectorForm curvature(const Connection& conn);
// R̄(X,Y) = h[φX, φY]
VectorForm cocurvature(const Connection& conn);

// h∘K = K∘Λ^{k+1}h. Throws Error(DegreeError) for degree-0 K.
bool is_h_equivariant(const Connection& conn, const VectorForm& K);

enum class Horizontality {
  horizontal,         // scalar: i_X ω = 0 for X ∈ F; vector: same as horizontal_args
  vertical,           // scalar: i_X ω = 0 for X ∈ H; vector: same as vertical_args
  horizontal_values,  // h∘K = K
  vertical_values,    // φ∘K = K
  horizontal_args,    // K∘Λh = K
  vertical_args,      // K∘Λφ = K
};

bool horizontality(const Connection& conn, const ScalarForm& omega, Horizontality mode);
bool horizontality(const Connection& conn, const VectorForm& K, Horizontality mode);

struct ConnectionShape {
  int coeff_degree = 2;
  int shears = 4;
};

// G·P0·G^{-1}, where P0 projects onto the first `rank` coordinates and G is a
// product of unimodular shears I + f·e_ij with random polynomial f.
// Deterministic in `seed`. Throws Error(RankOutOfRange).
Connection random_connection(const Chart& chart, int rank, std::uint64_t seed, int coeff_degree);
Connection random_connection(const Chart& chart, int rank, std::uint64_t seed, const ConnectionShape& shape);

// A second connection with the same vertical bundle: conjugation of φ by the
// shear Id + φ∘M∘h for a random endomorphism M.
Connection reshear_connection(const Connection& conn, std::uint64_t seed, int coeff_degree);

}  // namespace fncalc
