#include <gtest/gtest.h>

#include "printers.hpp"

#include "fncalc/error.hpp"
#include "fncalc/form_io.hpp"
#include "fncalc/random.hpp"

using namespace fncalc;

namespace {

const Chart xyz = standard_chart(3);

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

TEST(CompactText, ScalarRendering) {
  ScalarForm w = ScalarForm::basis(xyz, 0b110, parse_poly(xyz, "x")) -
                 ScalarForm::basis(xyz, 0b011, parse_poly(xyz, "1"));
  EXPECT_EQ(to_string(w), "(-1) x^y + (x) y^z");
  EXPECT_EQ(to_string(ScalarForm::function(xyz, parse_poly(xyz, "z"))), "(z)");
  EXPECT_EQ(to_string(ScalarForm::zero(xyz, 2)), "0");
}

TEST(CompactText, VectorRendering) {
  VectorForm R = VectorForm::simple(ScalarForm::basis(xyz, 0b011, parse_poly(xyz, "1")), 2);
  EXPECT_EQ(to_string(R), "(1) x^y (*) d/z");
  EXPECT_EQ(to_string(VectorForm::identity(xyz)), "(1) x (*) d/x + (1) y (*) d/y + (1) z (*) d/z");
}

TEST(CompactText, PermutedIndicesCarrySign) {
  EXPECT_EQ(parse_scalar_form(xyz, "(1) y^x"), parse_scalar_form(xyz, "(-1) x^y"));
  EXPECT_TRUE(parse_scalar_form(xyz, "(1) x^x").is_zero());
  EXPECT_EQ(parse_scalar_form(xyz, "(1) z^x^y"), parse_scalar_form(xyz, "(1) x^y^z"));
}

TEST(CompactText, CoefficientsMayHaveSeveralTerms) {
  ScalarForm w = parse_scalar_form(xyz, "(x + 1/2 y) z + (-x^2) y");
  EXPECT_EQ(w.coefficient(0b100), parse_poly(xyz, "x + 1/2 y"));
  EXPECT_EQ(w.coefficient(0b010), parse_poly(xyz, "-x^2"));
}

TEST(CompactText, ZeroNeedsDegree) {
  EXPECT_EQ(parse_scalar_form(xyz, "0", 2).degree(), 2);
  EXPECT_EQ(parse_vector_form(xyz, "0", 1).degree(), 1);
}

TEST(CompactText, Errors) {
  EXPECT_EQ(kind_of([] { parse_scalar_form(xyz, "(1) q"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_scalar_form(xyz, "(1) x + (1) x^y"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_scalar_form(xyz, "(1) x (*) d/y"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_vector_form(xyz, "(1) x"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_scalar_form(xyz, "(1 x"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_scalar_form(xyz, "(1) x", 2); }), ErrorKind::ParseError);
}

TEST(CompactText, RoundTripOnRandomForms) {
  Rng rng(41);
  for (int p = 0; p <= 3; ++p) {
    for (int t = 0; t < 5; ++t) {
      ScalarForm w = random_scalar_form(rng, xyz, p);
      EXPECT_EQ(parse_scalar_form(xyz, to_string(w), p), w);
      VectorForm K = random_vector_form(rng, xyz, p);
      EXPECT_EQ(parse_vector_form(xyz, to_string(K), p), K);
    }
  }
}

TEST(EntryList, Format) {
  VectorForm K = VectorForm::simple(ScalarForm::basis(xyz, 0b001, parse_poly(xyz, "x y")), 2);
  EXPECT_EQ(to_entry_list(K), "degree: 1\nindices: x, value: x y, output: z\n");
  EXPECT_EQ(to_entry_list(ScalarForm::zero(xyz, 2)), "degree: 2\n");
}

TEST(EntryList, RoundTripOnRandomForms) {
  Rng rng(42);
  for (int p = 0; p <= 3; ++p) {
    ScalarForm w = random_scalar_form(rng, xyz, p);
    EXPECT_EQ(parse_scalar_entry_list(xyz, to_entry_list(w)), w);
    VectorForm K = random_vector_form(rng, xyz, p);
    EXPECT_EQ(parse_vector_entry_list(xyz, to_entry_list(K)), K);
  }
}

TEST(EntryList, Errors) {
  EXPECT_EQ(kind_of([] { parse_scalar_entry_list(xyz, "indices: x\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_scalar_entry_list(xyz, ""); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_vector_entry_list(xyz, "indices: x, value: 1\n"); }), ErrorKind::ParseError);
  EXPECT_EQ(kind_of([] { parse_vector_entry_list(xyz, "indices: x, value: 1, output: q\n"); }), ErrorKind::ParseError);
}
