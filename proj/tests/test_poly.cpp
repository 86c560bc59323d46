#include <gtest/gtest.h>

#include "printers.hpp"

#include "fncalc/error.hpp"
#include "fncalc/poly.hpp"
#include "fncalc/random.hpp"

using namespace fncalc;

namespace {

const Chart xyz = standard_chart(3);

Poly P(const char* text) { return parse_poly(xyz, text); }

ErrorKind kind_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorKind::IoError;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  Rational q = parse_rational("-6/4");
  EXPECT_EQ(to_string(q), "-3/2");
  EXPECT_EQ(to_string(parse_rational("0/7")), "0");
  EXPECT_EQ(parse_rational("0/7").get_den(), 1);
  EXPECT_EQ(to_string(parse_rational("-12")), "-12");
}

TEST(Rational, RejectsMalformed) {
  EXPECT_EQ(kind_of([] { parse_rational("1/0"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_rational("abc"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_rational(""); }), ErrorKind::ParseError);
}

TEST(PolyCombine, Examples) {
  EXPECT_EQ(poly_combine(P("x + y"), P("x - y"), CombineKind::add), P("2 x"));
  EXPECT_EQ(poly_combine(P("x"), P("x"), CombineKind::mul), P("x^2"));
  EXPECT_EQ(poly_combine(P("1/2 x"), P("2/3 y"), CombineKind::mul), P("1/3 x y"));
  EXPECT_TRUE(poly_combine(P("x y"), P("x y"), CombineKind::sub).is_zero());
}

TEST(PolyCombine, CancellationLeavesNoZeroTerms) {
  Poly p = P("x + y") + P("-x + 3");
  ASSERT_EQ(p.size(), 2u);
  for (const auto& t : p.terms()) EXPECT_NE(sgn(t.coeff), 0);
}

TEST(PolyCombine, ChartMismatch) {
  Chart other({"a", "b", "c"});
  Poly a = Poly::variable(other, 0);
  EXPECT_EQ(kind_of([&] { poly_combine(P("x"), a, CombineKind::add); }), ErrorKind::ChartMismatch);
}

TEST(PolyPartial, Examples) {
  EXPECT_EQ(poly_partial(P("x^2 y"), 0), P("2 x y"));
  EXPECT_TRUE(poly_partial(P("x"), 2).is_zero());
  EXPECT_EQ(poly_partial(P("x y^2"), 1), P("2 x y"));
}

TEST(PolyPartial, IndexOutOfRange) {
  EXPECT_EQ(kind_of([] { poly_partial(P("x"), 3); }), ErrorKind::IndexOutOfRange);
}

TEST(PolyText, CanonicalRendering) {
  EXPECT_EQ(to_string(P("3 - 1/2 z + y x^2")), "x^2 y - 1/2 z + 3");
  EXPECT_EQ(to_string(P("0")), "0");
  EXPECT_EQ(to_string(P("-x")), "-x");
  EXPECT_EQ(to_string(P("y + x")), "x + y");
}

TEST(PolyText, ParseErrors) {
  EXPECT_EQ(kind_of([] { P("q"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { P("x +"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { P("x^"); }), ErrorKind::ParseError);
}

TEST(PolyText, RoundTripOnRandomPolys) {
  Rng rng(11);
  for (int i = 0; i < 50; ++i) {
    Poly p = random_poly(rng, xyz, {3, 4, 1, 1});
    EXPECT_EQ(parse_poly(xyz, to_string(p)), p);
  }
}

TEST(PolyProperty, RingAxioms) {
  Rng rng(3);
  for (int i = 0; i < 40; ++i) {
    Poly a = random_poly(rng, xyz), b = random_poly(rng, xyz), c = random_poly(rng, xyz);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(PolyProperty, LeibnizAndMixedPartials) {
  Rng rng(4);
  for (int t = 0; t < 40; ++t) {
    Poly a = random_poly(rng, xyz, {3, 3, 1, 1}), b = random_poly(rng, xyz, {3, 3, 1, 1});
    for (std::size_t i = 0; i < 3; ++i) {
      EXPECT_EQ((a * b).partial(i), a.partial(i) * b + a * b.partial(i));
      for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(a.partial(i).partial(j), a.partial(j).partial(i));
    }
  }
}

TEST(PolyProperty, TermsSortedByGrlex) {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    Poly p = random_poly(rng, xyz, {3, 6, 1, 1});
    for (std::size_t i = 1; i < p.size(); ++i) EXPECT_TRUE(grlex_less(p.terms()[i - 1].mono, p.terms()[i].mono));
  }
}

TEST(Chart, RejectsDuplicateNames) {
  EXPECT_EQ(kind_of([] { Chart({"x", "x"}); }), ErrorKind::InvalidChart);
}
