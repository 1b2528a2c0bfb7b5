#include <gtest/gtest.h>

#include "oracles.hpp"
#include "welded/error.hpp"
#include "welded/generators.hpp"
#include "welded/ring.hpp"

using namespace welded;

namespace {

LaurentPoly P(const char* s, int nvars = 1) { return parse_poly(s, nvars); }

}  // namespace

TEST(Ring, PrintsCanonicalText) {
  EXPECT_EQ(P("-t1^2*t2 + 3 - t2^-1", 2).to_string(), "-t1^2*t2 + 3 - t2^-1");
  EXPECT_EQ(P("3 + t - t").to_string(), "3");
  EXPECT_EQ(P("t1", 1).to_string(), "t");
  EXPECT_EQ(LaurentPoly(2).to_string(), "0");
  EXPECT_EQ(P("2*t^-1 - 1 + t").to_string(), "t - 1 + 2*t^-1");
}

TEST(Ring, ParsesBothSpellingsOfTheSingleVariable) {
  EXPECT_EQ(P("t^2 - t + 1"), P("t1^2 - t1 + 1"));
  EXPECT_EQ(parse_poly("t3 - 1").nvars(), 3);
  EXPECT_EQ(max_variable_index("t1*t4^-2"), 4);
}

TEST(Ring, RejectsMalformedText) {
  EXPECT_THROW(parse_poly("t^^2"), ParseError);
  EXPECT_THROW(parse_poly("3 +"), ParseError);
  EXPECT_THROW(parse_poly("t2", 1), DimensionError);
}

TEST(Ring, Arithmetic) {
  EXPECT_EQ(P("t - 1") * P("t + 1"), P("t^2 - 1"));
  EXPECT_EQ(P("t^-1") * P("t"), P("1"));
  EXPECT_EQ(arith(P("t"), P("1"), ArithOp::sub), P("t - 1"));
  EXPECT_EQ(arith(P("t"), P("0"), ArithOp::neg), P("-t"));
  EXPECT_THROW(P("t1", 1) + P("t1", 2), DimensionError);
}

TEST(Ring, ExactDivision) {
  EXPECT_EQ(exact_div(P("t^2 - 1"), P("t - 1")), P("t + 1"));
  EXPECT_EQ(exact_div(P("t1^2*t2 - t2", 2), P("t1*t2 - t2", 2)), P("t1 + 1", 2));
  EXPECT_EQ(exact_div(P("t^-3 - t^-1"), P("t^-1")), P("t^-2 - 1"));
  EXPECT_THROW(exact_div(P("t^2 + 1"), P("t - 1")), DivisibilityError);
  EXPECT_THROW(exact_div(P("t"), P("0")), DivisibilityError);
  EXPECT_THROW(exact_div(P("3"), P("2")), DivisibilityError);
}

TEST(Ring, NormalizeUnit) {
  const auto [p, u] = normalize_unit(P("t^-1 - 1"));
  EXPECT_EQ(p, P("1 - t"));
  EXPECT_EQ(p.times(u), P("t^-1 - 1"));
  EXPECT_EQ(normalize_unit(P("-t^3")).first, P("1"));
  EXPECT_EQ(normalize_unit(P("-t1^-1*t2 + t2^2", 2)).first, P("1 - t1*t2", 2));
  EXPECT_TRUE(normalize_unit(LaurentPoly(1)).first.is_zero());
}

TEST(Ring, Units) {
  EXPECT_TRUE(P("-t^-4").is_unit());
  EXPECT_FALSE(P("2*t").is_unit());
  EXPECT_FALSE(P("t + 1").is_unit());
  const UnitMonomial u{-1, {2, -1}};
  EXPECT_TRUE((u * u.inverse()).is_one());
  EXPECT_EQ(u.to_string(), "-t1^2*t2^-1");
}

TEST(Ring, Specialize) {
  EXPECT_EQ(specialize(P("t1^2 - 3*t1*t2 + t2^-1", 2), {{1, 1}}), P("t2^-1 + 1 - 3*t2", 2));
  EXPECT_EQ(specialize(P("t^-2 + t"), {{1, -1}}), P("0"));
  EXPECT_EQ(specialize(P("t^2 + t"), {{1, 2}}), P("6"));
  EXPECT_THROW(specialize(P("t^-1"), {{1, 2}}), DomainError);
  EXPECT_THROW(specialize(P("t"), {{1, 0}}), DomainError);
}

TEST(RingProperty, CommutativeRingAxioms) {
  Rng rng(11);
  PolyShape shape;
  shape.nvars = 2;
  for (int k = 0; k < 200; ++k) {
    const auto a = random_poly(rng, shape), b = random_poly(rng, shape), c = random_poly(rng, shape);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ(a - a, LaurentPoly(2));
    if (!b.is_zero()) EXPECT_EQ(exact_div(a * b, b), a);
    const auto [p, u] = normalize_unit(a);
    EXPECT_EQ(p.times(u), a);
  }
}

TEST(RingProperty, TextRoundTrip) {
  Rng rng(12);
  PolyShape shape;
  shape.nvars = 3;
  for (int k = 0; k < 200; ++k) {
    const auto a = random_poly(rng, shape);
    EXPECT_EQ(parse_poly(a.to_string(), 3), a) << a.to_string();
  }
}

TEST(Determinant, SmallCases) {
  EXPECT_EQ(determinant(PolyMatrix(0, 0, 1)), P("1"));
  const auto m = oracle::matrix({{"t", "1"}, {"1", "t^-1"}}, 1);
  EXPECT_TRUE(determinant(m).is_zero());
  const auto n = oracle::matrix({{"1 - t", "t"}, {"-1", "1"}}, 1);
  EXPECT_EQ(determinant(n), P("1"));
  EXPECT_THROW(determinant(PolyMatrix(2, 3, 1)), DimensionError);
}

TEST(DeterminantProperty, BareissCofactorAndLeibnizAgree) {
  Rng rng(13);
  PolyShape shape;
  shape.nvars = 2;
  shape.max_terms = 3;
  for (int size = 1; size <= 5; ++size) {
    for (int k = 0; k < (size <= 3 ? 60 : 15); ++k) {
      auto m = random_matrix(rng, size, size, shape);
      if (k % 5 == 0 && size > 1) {
        // Force a zero leading column entry so pivoting is exercised.
        m.at(0, 0) = LaurentPoly(2);
      }
      const auto ref = oracle::leibniz_determinant(m);
      EXPECT_EQ(cofactor_determinant(m), ref);
      EXPECT_EQ(bareiss_determinant(m), ref);
      EXPECT_EQ(determinant(m), ref);
    }
  }
}

TEST(DeterminantProperty, Multiplicative) {
  Rng rng(14);
  PolyShape shape;
  shape.max_terms = 2;
  for (int k = 0; k < 30; ++k) {
    const auto a = random_matrix(rng, 3, 3, shape), b = random_matrix(rng, 3, 3, shape);
    EXPECT_EQ(determinant(multiply(a, b)), determinant(a) * determinant(b));
  }
}
