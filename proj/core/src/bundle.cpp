#include "fncalc/bundle.hpp"

#include "fncalc/error.hpp"

namespace fncalc {

namespace {

std::vector<std::string> joined_names(const Chart& base, const Chart& fiber) {
  if (!base.bound() || !fiber.bound()) throw Error(ErrorKind::InvalidChart, "bundle charts must be bound");
  std::vector<std::string> names = base.coord_names();
  for (const auto& name : fiber.coord_names()) {
    if (base.index_of(name)) {
      throw Error(ErrorKind::InvalidChart, "coordinate '" + name + "' appears in both base and fiber");
    }
    names.push_back(name);
  }
  return names;
}

std::vector<std::size_t> base_index_map(const ProductBundle& pb) {
  std::vector<std::size_t> map(pb.base_dim());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = i;
  return map;
}

void require_base_poly(const ProductBundle& pb, const Poly& f) {
  if (f.max_variable() >= static_cast<int>(pb.base_dim())) {
    throw Error(ErrorKind::FiberCoordinates, "base data involves fiber coordinate '" +
                                                 pb.total().name(static_cast<std::size_t>(f.max_variable())) + "'");
  }
}

void require_base_mask(const ProductBundle& pb, IndexMask mask) {
  if (mask >> pb.base_dim()) throw Error(ErrorKind::FiberCoordinates, "base form involves fiber differentials");
}

// A base-chart form, or a total-chart form living on base data only, moved to
// the total chart.
ScalarForm to_total(const ProductBundle& pb, const ScalarForm& omega) {
  ScalarForm out(pb.total(), omega.degree());
  if (omega.chart() == pb.base()) {
    const auto map = base_index_map(pb);
    for (const auto& [mask, f] : omega.coeffs()) out.add_term(mask, f.embed(pb.total(), map));
    return out;
  }
  if (omega.chart() == pb.total()) {
    for (const auto& [mask, f] : omega.coeffs()) {
      require_base_mask(pb, mask);
      require_base_poly(pb, f);
    }
    return omega;
  }
  throw Error(ErrorKind::ChartMismatch, "form is neither on the base nor on the total chart");
}

// Components K^a (a over base coordinates) moved to the total chart.
std::vector<ScalarForm> base_components(const ProductBundle& pb, const VectorForm& K) {
  std::vector<ScalarForm> comps;
  if (K.chart() == pb.base()) {
    for (const auto& c : K.components()) comps.push_back(to_total(pb, c));
    return comps;
  }
  if (K.chart() == pb.total()) {
    for (std::size_t j = 0; j < K.dim(); ++j) {
      if (j >= pb.base_dim()) {
        if (!K.component(j).is_zero()) throw Error(ErrorKind::FiberCoordinates, "base field has a fiber component");
        continue;
      }
      comps.push_back(to_total(pb, K.component(j)));
    }
    return comps;
  }
  throw Error(ErrorKind::ChartMismatch, "vector form is neither on the base nor on the total chart");
}

}  // namespace

ProductBundle::ProductBundle(Chart base, Chart fiber, std::vector<std::vector<Poly>> gamma)
    : base_(std::move(base)), fiber_(std::move(fiber)), total_(joined_names(base_, fiber_)), gamma_(std::move(gamma)) {
  if (gamma_.size() != fiber_.dim()) {
    throw Error(ErrorKind::ArityMismatch, "gamma needs one row per fiber coordinate");
  }
  for (auto& row : gamma_) {
    if (row.size() != base_.dim()) throw Error(ErrorKind::ArityMismatch, "gamma needs one column per base coordinate");
    for (auto& g : row) {
      if (!g.chart().bound()) {
        g = Poly(total_);
      } else {
        require_same_chart(g.chart(), total_, "gamma entry");
      }
    }
  }
}

Connection induced_connection(const ProductBundle& pb) {
  const std::size_t m = pb.base_dim();
  const std::size_t n = m + pb.fiber_dim();
  std::vector<std::vector<Poly>> phi(n, std::vector<Poly>(n, Poly(pb.total())));
  for (std::size_t s = 0; s < pb.fiber_dim(); ++s) {
    for (std::size_t a = 0; a < m; ++a) phi[m + s][a] = -pb.gamma()[s][a];
    phi[m + s][m + s] = Poly::constant(pb.total(), 1);
  }
  return make_connection(pb.total(), phi);
}

ScalarForm pullback_base(const ProductBundle& pb, const ScalarForm& omega) { return to_total(pb, omega); }

VectorForm chi_lift(const ProductBundle& pb, const VectorForm& X) {
  if (X.degree() != 0) throw Error(ErrorKind::DegreeError, "chi_lift needs a vector field");
  return chi_star(pb, X);
}

VectorForm chi_star(const ProductBundle& pb, const VectorForm& K) {
  const std::vector<ScalarForm> comps = base_components(pb, K);
  const std::size_t m = pb.base_dim();
  VectorForm out(pb.total(), K.degree());
  for (std::size_t a = 0; a < m; ++a) {
    out.add_to_component(a, comps[a]);
    for (std::size_t s = 0; s < pb.fiber_dim(); ++s) {
      const Poly& g = pb.gamma()[s][a];
      if (!g.is_zero()) out.add_to_component(m + s, g * comps[a]);
    }
  }
  return out;
}

}  // namespace fncalc
