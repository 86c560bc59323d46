#include "fncalc/connection.hpp"

#include "fncalc/error.hpp"
#include "fncalc/random.hpp"

namespace fncalc {

namespace {

using Matrix = std::vector<std::vector<Poly>>;

Matrix identity_matrix(const Chart& chart) {
  const std::size_t n = chart.dim();
  Matrix m(n, std::vector<Poly>(n, Poly(chart)));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = Poly::constant(chart, 1);
  return m;
}

Matrix multiply(const Chart& chart, const Matrix& a, const Matrix& b) {
  const std::size_t n = a.size();
  Matrix out(n, std::vector<Poly>(n, Poly(chart)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t k = 0; k < n; ++k) {
      if (a[i][k].is_zero()) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (!b[k][j].is_zero()) out[i][j] += a[i][k] * b[k][j];
      }
    }
  }
  return out;
}

// Column i of an endomorphism, A ∂_i, as a vector field.
VectorForm column(const VectorForm& A, std::size_t i) {
  std::vector<Poly> comps;
  comps.reserve(A.dim());
  for (std::size_t j = 0; j < A.dim(); ++j) comps.push_back(A.matrix_entry(j, i));
  return VectorForm::vector_field(A.chart(), comps);
}

// B[X_a, X_b] on coordinate pairs, where X_i = A ∂_i.
VectorForm bracket_of_columns(const VectorForm& A, const VectorForm& B) {
  const Chart& chart = A.chart();
  const std::size_t n = chart.dim();
  VectorForm out(chart, 2);
  if (!out.in_range()) return out;
  std::vector<VectorForm> cols;
  cols.reserve(n);
  for (std::size_t i = 0; i < n; ++i) cols.push_back(column(A, i));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      const VectorForm br[] = {lie_bracket(cols[a], cols[b])};
      const VectorForm value = eval_vector_form(B, br);
      const IndexMask mask = (IndexMask{1} << a) | (IndexMask{1} << b);
      for (std::size_t j = 0; j < n; ++j) out.add_to_component(j, ScalarForm::basis(chart, mask, value.component(j).value()));
    }
  }
  return out;
}

}  // namespace

Connection make_connection(const VectorForm& phi) {
  const Chart& chart = phi.chart();
  if (phi.degree() != 1) throw Error(ErrorKind::DegreeError, "connection must be a TU-valued 1-form");
  if (!(compose_values(phi, phi) == phi)) throw Error(ErrorKind::NotIdempotent, "phi is not idempotent");
  const std::size_t n = chart.dim();
  Poly trace(chart);
  for (std::size_t i = 0; i < n; ++i) trace += phi.matrix_entry(i, i);
  if (!trace.is_constant()) throw Error(ErrorKind::NonConstantTrace, "trace of phi is not constant");
  const Rational t = trace.constant_term();
  if (t.get_den() != 1 || t < 0 || t > static_cast<long>(n)) {
    throw Error(ErrorKind::NonConstantTrace, "trace of phi is not an integer in [0, n]");
  }

  auto data = std::make_shared<Connection::Data>();
  data->chart = chart;
  data->phi = phi;
  data->h = VectorForm::identity(chart) - phi;
  data->rank = static_cast<int>(t.get_num().get_si());
  const IndexMask count = IndexMask{1} << n;
  data->hstar_basis.reserve(count);
  for (IndexMask mask = 0; mask < count; ++mask) {
    ScalarForm acc = ScalarForm::function(chart, Poly::constant(chart, 1));
    for (int i : mask_indices(mask)) acc = wedge(acc, data->h.component(static_cast<std::size_t>(i)));
    data->hstar_basis.push_back(std::move(acc));
  }
  return Connection(std::move(data));
}

Connection make_connection(const Chart& chart, const std::vector<std::vector<Poly>>& phi_matrix) {
  return make_connection(VectorForm::from_matrix(chart, phi_matrix));
}

Connection trivial_connection(const Chart& chart) { return make_connection(VectorForm::zero(chart, 1)); }

Connection heisenberg_connection() {
  const Chart chart({"x", "y", "z"});
  const Poly zero(chart);
  const Poly one = Poly::constant(chart, 1);
  const Poly x = Poly::variable(chart, 0);
  return make_connection(chart, {{zero, zero, zero}, {zero, zero, zero}, {zero, -x, one}});
}

ScalarForm h_star(const Connection& conn, const ScalarForm& omega) {
  require_same_chart(conn.chart(), omega.chart(), "h_star");
  ScalarForm out(omega.chart(), omega.degree());
  for (const auto& [mask, f] : omega.coeffs()) out += f * conn.hstar_basis(mask);
  return out;
}

VectorForm h_star(const Connection& conn, const VectorForm& K) {
  std::vector<ScalarForm> comps;
  comps.reserve(K.dim());
  for (const auto& c : K.components()) comps.push_back(h_star(conn, c));
  return VectorForm::from_components(K.chart(), K.degree(), std::move(comps));
}

VectorForm curvature(const Connection& conn) { return bracket_of_columns(conn.h(), conn.phi()); }

VectorForm cocurvature(const Connection& conn) { return bracket_of_columns(conn.phi(), conn.h()); }

bool is_h_equivariant(const Connection& conn, const VectorForm& K) {
  require_same_chart(conn.chart(), K.chart(), "is_h_equivariant");
  if (K.degree() < 1) throw Error(ErrorKind::DegreeError, "h-equivariance is defined for degree >= 1");
  return compose_values(conn.h(), K) == h_star(conn, K);
}

bool horizontality(const Connection& conn, const ScalarForm& omega, Horizontality mode) {
  require_same_chart(conn.chart(), omega.chart(), "horizontality");
  const VectorForm* span = nullptr;
  switch (mode) {
    case Horizontality::horizontal: span = &conn.phi(); break;
    case Horizontality::vertical: span = &conn.h(); break;
    default: throw Error(ErrorKind::DegreeError, "value-based horizontality modes apply to vector forms");
  }
  for (std::size_t i = 0; i < conn.chart().dim(); ++i) {
    if (!insert(column(*span, i), omega).is_zero()) return false;
  }
  return true;
}

bool horizontality(const Connection& conn, const VectorForm& K, Horizontality mode) {
  require_same_chart(conn.chart(), K.chart(), "horizontality");
  switch (mode) {
    case Horizontality::horizontal:
    case Horizontality::horizontal_args: return precompose(K, conn.h()) == K;
    case Horizontality::vertical:
    case Horizontality::vertical_args: return precompose(K, conn.phi()) == K;
    case Horizontality::horizontal_values: return compose_values(conn.h(), K) == K;
    case Horizontality::vertical_values: return compose_values(conn.phi(), K) == K;
  }
  return false;
}

Connection random_connection(const Chart& chart, int rank, std::uint64_t seed, int coeff_degree) {
  return random_connection(chart, rank, seed, ConnectionShape{coeff_degree, ConnectionShape{}.shears});
}

Connection random_connection(const Chart& chart, int rank, std::uint64_t seed, const ConnectionShape& shape) {
  const int n = static_cast<int>(chart.dim());
  if (rank < 0 || rank > n) {
    throw Error(ErrorKind::RankOutOfRange, "rank " + std::to_string(rank) + " outside [0, " + std::to_string(n) + "]");
  }
  Rng rng(seed);
  Matrix projection(chart.dim(), std::vector<Poly>(chart.dim(), Poly(chart)));
  for (int i = 0; i < rank; ++i) projection[i][i] = Poly::constant(chart, 1);
  if (rank == 0 || rank == n || n < 2) return make_connection(chart, projection);

  RandomShape entry{shape.coeff_degree, 2, 1, 1};
  Matrix g = identity_matrix(chart);
  Matrix g_inv = identity_matrix(chart);
  // Shears alternate between tilting H-directions into F and F-directions
  // into H; same-block shears would only reparametrize a bundle.
  for (int s = 0; s < shape.shears; ++s) {
    const bool tilt_h = s % 2 == 0;
    const int i = tilt_h ? rng.uniform(0, rank - 1) : rng.uniform(rank, n - 1);
    const int j = tilt_h ? rng.uniform(rank, n - 1) : rng.uniform(0, rank - 1);
    const Poly f = random_poly(rng, chart, entry);
    Matrix e = identity_matrix(chart);
    Matrix e_inv = identity_matrix(chart);
    e[i][j] = f;
    e_inv[i][j] = -f;
    g = multiply(chart, g, e);
    g_inv = multiply(chart, e_inv, g_inv);
  }
  return make_connection(chart, multiply(chart, multiply(chart, g, projection), g_inv));
}

Connection reshear_connection(const Connection& conn, std::uint64_t seed, int coeff_degree) {
  Rng rng(seed);
  const Chart& chart = conn.chart();
  const std::size_t n = chart.dim();
  Matrix m(n, std::vector<Poly>(n, Poly(chart)));
  RandomShape entry{coeff_degree, 1, 1, 2};
  for (auto& row : m) {
    for (auto& e : row) {
      if (rng.chance(entry.density_num, entry.density_den)) e = random_poly(rng, chart, entry);
    }
  }
  const VectorForm M = VectorForm::from_matrix(chart, m);
  // (Id + φMh) φ (Id − φMh) = φ − φMh
  return make_connection(conn.phi() - compose_values(conn.phi(), compose_values(M, conn.h())));
}

}  // namespace fncalc
