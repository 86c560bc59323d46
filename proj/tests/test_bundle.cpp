#include <gtest/gtest.h>

#include "printers.hpp"

#include "fncalc/bundle.hpp"
#include "fncalc/error.hpp"
#include "fncalc/form_io.hpp"
#include "fncalc/operator.hpp"

using namespace fncalc;

namespace {

const Chart base_xy({"x", "y"});
const Chart fiber_z({"z"});

ProductBundle connection_a_bundle() {
  Chart total({"x", "y", "z"});
  return ProductBundle(base_xy, fiber_z, {{Poly(total), Poly::variable(total, 0)}});
}

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::IoError;
}

// Random Γ of coefficient degree ≤ 2 over the total chart.
ProductBundle random_bundle(std::size_t m, std::size_t s, std::uint64_t seed) {
  const std::vector<std::string> bn{"x", "y"}, fnames{"u", "v"};
  Chart base(std::vector<std::string>(bn.begin(), bn.begin() + static_cast<long>(m)));
  Chart fiber(std::vector<std::string>(fnames.begin(), fnames.begin() + static_cast<long>(s)));
  ProductBundle probe(base, fiber, std::vector<std::vector<Poly>>(s, std::vector<Poly>(m)));
  Rng rng(seed);
  std::vector<std::vector<Poly>> gamma(s, std::vector<Poly>(m));
  for (auto& row : gamma) {
    for (auto& g : row) g = random_poly(rng, probe.total(), {2, 2, 1, 1});
  }
  return ProductBundle(base, fiber, gamma);
}

}  // namespace

TEST(ProductBundle, TotalChartListsBaseFirst) {
  ProductBundle pb = connection_a_bundle();
  EXPECT_EQ(pb.total().coord_names(), (std::vector<std::string>{"x", "y", "z"}));
}

TEST(ProductBundle, ConstructionErrors) {
  EXPECT_EQ(kind_of([] { ProductBundle(Chart({"x"}), Chart({"x"}), {{Poly()}}); }), ErrorKind::InvalidChart);
  EXPECT_EQ(kind_of([] { ProductBundle(base_xy, fiber_z, {{Poly()}}); }), ErrorKind::ArityMismatch);
  EXPECT_EQ(kind_of([] { ProductBundle(base_xy, fiber_z, {}); }), ErrorKind::ArityMismatch);
}

TEST(InducedConnection, ZeroGammaIsFlatProjection) {
  ProductBundle pb(base_xy, fiber_z, {{Poly(), Poly()}});
  Connection c = induced_connection(pb);
  EXPECT_EQ(c.rank(), 1);
  EXPECT_EQ(c.phi(), VectorForm::simple(ScalarForm::differential(pb.total(), 2), 2));
  EXPECT_TRUE(curvature(c).is_zero());
}

TEST(InducedConnection, OneDimensionalBase) {
  Chart total({"t", "s"});
  ProductBundle pb(Chart({"t"}), Chart({"s"}), {{Poly::variable(total, 0)}});
  Connection c = induced_connection(pb);
  EXPECT_EQ(eval_vector_form(c.h(), std::vector<VectorForm>{VectorForm::coordinate_field(total, 0)}),
            VectorForm::vector_field(total, {Poly(total, 1), Poly::variable(total, 0)}));
  EXPECT_TRUE(curvature(c).is_zero());
}

TEST(InducedConnection, RecoversConnectionA) {
  Connection c = induced_connection(connection_a_bundle());
  Connection A = heisenberg_connection();
  EXPECT_EQ(c.phi(), A.phi());
  EXPECT_EQ(to_string(curvature(c)), to_string(curvature(A)));
  EXPECT_TRUE(cocurvature(c).is_zero());
}

TEST(InducedConnection, CocurvatureVanishes) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    ProductBundle pb = random_bundle(2, 1 + seed % 2, seed);
    EXPECT_TRUE(cocurvature(induced_connection(pb)).is_zero());
  }
}

TEST(ChiLift, Examples) {
  Chart total({"t", "s"});
  ProductBundle flat(Chart({"t"}), Chart({"s"}), {{Poly()}});
  EXPECT_EQ(chi_lift(flat, VectorForm::coordinate_field(Chart({"t"}), 0)), VectorForm::coordinate_field(total, 0));
  ProductBundle tilted(Chart({"t"}), Chart({"s"}), {{Poly::variable(total, 0)}});
  EXPECT_EQ(chi_lift(tilted, VectorForm::coordinate_field(Chart({"t"}), 0)),
            VectorForm::vector_field(total, {Poly(total, 1), Poly::variable(total, 0)}));
}

TEST(ChiLift, FiberLinearAndHorizontal) {
  ProductBundle pb = random_bundle(2, 2, 11);
  Connection c = induced_connection(pb);
  Rng rng(12);
  for (int t = 0; t < 5; ++t) {
    VectorForm X = random_vector_form(rng, pb.base(), 0);
    Poly f = random_poly(rng, pb.base());
    VectorForm fX = VectorForm::vector_field(pb.base(), {f * X.component(0).value(), f * X.component(1).value()});
    ScalarForm pf = pullback_base(pb, ScalarForm::function(pb.base(), f));
    VectorForm lifted = chi_lift(pb, X);
    VectorForm scaled(pb.total(), 0);
    for (std::size_t j = 0; j < pb.total().dim(); ++j) scaled.add_to_component(j, wedge(pf, lifted.component(j)));
    EXPECT_EQ(chi_lift(pb, fX), scaled);
    EXPECT_EQ(eval_vector_form(c.h(), std::vector<VectorForm>{lifted}), lifted);
    for (std::size_t a = 0; a < 2; ++a) EXPECT_EQ(lifted.component(a), pullback_base(pb, X.component(a)));
  }
}

TEST(ChiLift, RejectsFiberDependence) {
  ProductBundle pb = connection_a_bundle();
  VectorForm onTotal = VectorForm::coordinate_field(pb.total(), 2);
  EXPECT_THROW(chi_lift(pb, onTotal), Error);
}

TEST(ChiStar, ConnectionABundleExample) {
  ProductBundle pb = connection_a_bundle();
  VectorForm K = VectorForm::simple(ScalarForm::differential(base_xy, 0), 1);
  VectorForm expected = VectorForm::simple(ScalarForm::differential(pb.total(), 0), 1) +
                        VectorForm::simple(Poly::variable(pb.total(), 0) * ScalarForm::differential(pb.total(), 0), 2);
  EXPECT_EQ(chi_star(pb, K), expected);
}

TEST(ChiStar, ModuleHomomorphismAndHorizontality) {
  for (std::uint64_t seed = 0; seed < 4; ++seed) {
    ProductBundle pb = random_bundle(2, 1 + seed % 2, 20 + seed);
    Connection c = induced_connection(pb);
    Rng rng(30 + seed);
    for (int k = 0; k <= 2; ++k) {
      VectorForm K = random_vector_form(rng, pb.base(), k);
      ScalarForm w = random_scalar_form(rng, pb.base(), 2 - k);
      VectorForm lifted = chi_star(pb, K);
      EXPECT_EQ(chi_star(pb, wedge(w, K)), wedge(pullback_base(pb, w), lifted));
      EXPECT_EQ(compose_values(c.h(), lifted), lifted);
      if (k > 0) {
        EXPECT_EQ(precompose(lifted, c.h()), lifted);
      }
    }
  }
}

TEST(ChiStar, LieDerivationIntertwines) {
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    ProductBundle pb = random_bundle(2, 1, 40 + seed);
    Connection c = induced_connection(pb);
    Rng rng(50 + seed);
    VectorForm K = random_vector_form(rng, pb.base(), 1);
    VectorForm lifted = chi_star(pb, K);
    for (int p = 0; p <= 1; ++p) {
      ScalarForm w = random_scalar_form(rng, pb.base(), p);
      ScalarForm pw = pullback_base(pb, w);
      EXPECT_EQ(pullback_base(pb, lie_derivative(K, w)), lie_derivative(lifted, pw));
      EXPECT_EQ(pullback_base(pb, lie_derivative(K, w)), apply(theta_h(lifted, c), pw));
      EXPECT_EQ(pullback_base(pb, insert(K, w)), insert(lifted, pw));
    }
    VectorForm K2 = random_vector_form(rng, pb.base(), 0);
    EXPECT_EQ(chi_star(pb, fn_bracket(K, K2)), compose_values(c.h(), fn_bracket(lifted, chi_star(pb, K2))));
  }
}

TEST(PullbackBase, Examples) {
  ProductBundle pb = connection_a_bundle();
  Connection c = induced_connection(pb);
  EXPECT_EQ(pullback_base(pb, ScalarForm::differential(base_xy, 0)), ScalarForm::differential(pb.total(), 0));
  ScalarForm pf = pullback_base(pb, ScalarForm::function(base_xy, parse_poly(base_xy, "x y^2")));
  EXPECT_TRUE(horizontality(c, pf, Horizontality::horizontal));
  Rng rng(60);
  for (int p = 0; p <= 2; ++p) {
    ScalarForm a = random_scalar_form(rng, base_xy, p), b = random_scalar_form(rng, base_xy, 2 - p);
    EXPECT_EQ(pullback_base(pb, wedge(a, b)), wedge(pullback_base(pb, a), pullback_base(pb, b)));
    EXPECT_TRUE(horizontality(c, pullback_base(pb, a), Horizontality::horizontal));
  }
}

TEST(PullbackBase, FiberCoordinatesRejected) {
  ProductBundle pb = connection_a_bundle();
  ScalarForm onTotal = ScalarForm::differential(pb.total(), 2);
  EXPECT_EQ(kind_of([&] { pullback_base(pb, onTotal); }), ErrorKind::FiberCoordinates);
  ScalarForm withZ = ScalarForm::function(pb.total(), Poly::variable(pb.total(), 2));
  EXPECT_EQ(kind_of([&] { pullback_base(pb, withZ); }), ErrorKind::FiberCoordinates);
  EXPECT_EQ(kind_of([&] { pullback_base(pb, ScalarForm::differential(Chart({"a", "b"}), 0)); }),
            ErrorKind::ChartMismatch);
}
