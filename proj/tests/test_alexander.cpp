#include <gtest/gtest.h>

#include "oracles.hpp"
#include "welded/alexander.hpp"
#include "welded/corpus.hpp"
#include "welded/error.hpp"
#include "welded/generators.hpp"

using namespace welded;

namespace {

LaurentPoly P(const char* s, int nvars = 1) { return parse_poly(s, nvars); }

InvariantTensor from_minors(const std::map<Subset, LaurentPoly>& minors, int rank, int grade, int nvars) {
  InvariantTensor t(rank, grade, nvars);
  for (const auto& [s, c] : minors) t.add(s, c);
  return t;
}

}  // namespace

TEST(Fox, PositiveAndNegativeCrossingRows) {
  // Relator e f e^-1 b^-1 abelianizes to (e: 1 - t, f: t, b: -1).
  const auto d = corpus::sigma();
  const auto m = fox_jacobian(wirtinger(d), arc_colors(d), 1);
  const PolyMatrix want = oracle::matrix({{"0", "1 - t", "t", "-1"}, {"-1", "1", "0", "0"}}, 1);
  EXPECT_EQ(m.rows(), 2);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 4; ++c) EXPECT_EQ(m.at(r, c), want.at(r, c)) << r << "," << c;
  }
  // e^-1 f e b^-1: (e: t^-1(t - 1), f: t^-1, b: -1), times t to clear t^-1.
  auto neg = d;
  neg.crossings[0].sign = -1;
  const auto n = fox_jacobian(wirtinger(neg), arc_colors(neg), 1);
  EXPECT_EQ(n.at(0, 1), P("t - 1"));
  EXPECT_EQ(n.at(0, 2), P("1"));
  EXPECT_EQ(n.at(0, 3), P("-t"));
}

TEST(Fox, TwoColoredCrossingMatchesThePrintedMatrix) {
  const auto m = build_matrix(corpus::crossing22());
  EXPECT_EQ(m.col_labels(), (std::vector<std::string>{"g1", "g2", "g3", "g4"}));
  const auto want = oracle::matrix({{"-1", "0", "1", "0"}, {"0", "-1", "1 - t1", "t2"}}, 2);
  EXPECT_EQ(m.nvars(), 2);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 4; ++c) EXPECT_EQ(m.at(r, c), want.at(r, c));
  }
}

TEST(Matrix, LabelsAndOrder) {
  const auto m = build_matrix(corpus::tau());
  EXPECT_EQ(m.col_labels(), (std::vector<std::string>{"a", "b", "f", "e", "c", "d"}));
  EXPECT_EQ(m.row_labels(), (std::vector<std::string>{"p1", "p2", "x1"}));
  const auto s = build_matrix(corpus::strand());
  EXPECT_EQ(s.rows(), 1);
  EXPECT_EQ(s.cols(), 2);
}

TEST(MatrixProperty, ShapeIsPPlusNByPPlus2N) {
  Rng rng(61);
  DiagramShape shape;
  for (int k = 0; k < 60; ++k) {
    const auto d = random_diagram(rng, shape);
    const auto m = build_matrix(d, shape.mu);
    const int p = m.cols() - d.boundary;
    EXPECT_EQ(m.rows(), p + d.n());
    EXPECT_EQ(m.nvars(), shape.mu);
  }
}

TEST(Alpha, SigmaExact) {
  EXPECT_EQ(alpha(corpus::sigma()).to_string(), "(x1^x2, 1), (x1^x3, -t), (x1^x4, t - 1), (x2^x4, 1), (x3^x4, -t)");
  EXPECT_EQ(alpha(corpus::sigma()), corpus::sigma_alpha());
}

TEST(Alpha, TauAgainstLeibnizMinors) {
  const auto m = build_matrix(corpus::tau());
  const auto oracle_alpha = from_minors(oracle::minors(m, 6), 6, 3, 1);
  EXPECT_EQ(alpha(corpus::tau()), oracle_alpha);
  EXPECT_TRUE(equal_up_to_unit(oracle_alpha, corpus::tau_alpha()).equal);
}

TEST(Alpha, ShortCases) {
  EXPECT_EQ(alpha(corpus::strand()).to_string(), "(x1, -1), (x2, 1)");
  EXPECT_TRUE(alpha(corpus::split_circle()).is_zero());
  EXPECT_EQ(alpha(corpus::crossing22()).nvars(), 2);
  EXPECT_EQ(alpha(corpus::crossing22(), 3).nvars(), 3);
}

TEST(Alpha, AllMinorMethodsAgree) {
  for (const auto& [name, d] : corpus::diagrams()) {
    const auto ref = alpha(d, -1, MinorMethod::serial);
    EXPECT_EQ(alpha(d, -1, MinorMethod::parallel), ref) << name;
    EXPECT_EQ(alpha(d, -1, MinorMethod::shared), ref) << name;
  }
}

TEST(AlphaProperty, DualityFormMatchesMinors) {
  Rng rng(62);
  DiagramShape shape;
  shape.max_crossings = 5;
  for (int k = 0; k < 40; ++k) {
    const auto d = random_diagram(rng, shape);
    const auto a = alpha(d, shape.mu);
    const auto b = alpha_by_duality(d, shape.mu);
    if (a.is_zero()) {
      EXPECT_TRUE(b.is_zero());
    } else {
      EXPECT_TRUE(equal_up_to_unit(a, b).equal) << a.to_string() << " vs " << b.to_string();
    }
  }
}

TEST(AlexanderFunction, TwoColoredCrossingValues) {
  // Leibniz expansion of the 4x4 matrices [M; e_i; e_j].
  const auto m = build_matrix(corpus::crossing22());
  EXPECT_EQ(alexander_function(m, {1, 2}), P("t2", 2));
  EXPECT_EQ(alexander_function(m, {1, 3}), P("0", 2));
  EXPECT_EQ(alexander_function(m, {1, 4}), P("1", 2));
  EXPECT_EQ(alexander_function(m, {2, 3}), P("-t2", 2));
  EXPECT_EQ(alexander_function(m, {2, 4}), P("1 - t1", 2));
  EXPECT_EQ(alexander_function(m, {3, 4}), P("1", 2));
  for (const auto& s : k_subsets(4, 2)) {
    PolyMatrix full(4, 4, 2);
    for (int c = 0; c < 4; ++c) {
      full.at(0, c) = m.at(0, c);
      full.at(1, c) = m.at(1, c);
    }
    full.at(2, s[0] - 1) = P("1", 2);
    full.at(3, s[1] - 1) = P("1", 2);
    EXPECT_EQ(alexander_function(m, s), oracle::leibniz_determinant(full));
  }
}

TEST(AlexanderPolynomial, ClassicalKnotsAgainstThePdOracle) {
  const std::vector<std::pair<std::vector<corpus::PdCrossing>, const char*>> knots = {
      {{{{1, 5, 2, 4}}, {{3, 1, 4, 6}}, {{5, 3, 6, 2}}}, "t^2 - t + 1"},
      {{{{4, 2, 5, 1}}, {{8, 6, 1, 5}}, {{6, 3, 7, 4}}, {{2, 7, 3, 8}}}, "t^2 - 3*t + 1"},
      {{{{1, 6, 2, 7}}, {{3, 8, 4, 9}}, {{5, 10, 6, 1}}, {{7, 2, 8, 3}}, {{9, 4, 10, 5}}}, "t^4 - t^3 + t^2 - t + 1"},
  };
  for (const auto& [pd, expected] : knots) {
    const auto oracle_poly = oracle::alexander_from_pd(pd);
    EXPECT_EQ(oracle_poly, P(expected));
    EXPECT_EQ(alexander_poly_11(corpus::long_knot_from_pd(pd)), oracle_poly);
  }
}

TEST(AlexanderPolynomial, LinksAndTrivialCases) {
  EXPECT_EQ(alexander_poly_11(corpus::strand()), P("1"));
  EXPECT_EQ(alexander_poly_11(corpus::hopf11()), P("1", 2));
  EXPECT_EQ(alexander_poly_11(corpus::split_circle()), P("0"));
  EXPECT_THROW(alexander_poly_11(corpus::sigma()), ShapeError);
}

TEST(SplitHom, SigmaComponents) {
  const auto f = split_hom(alpha(corpus::sigma()), {2, 2});
  ASSERT_EQ(f.maps.size(), 3u);
  const auto* g0 = f.component(0);
  const auto* g1 = f.component(1);
  const auto* g2 = f.component(2);
  EXPECT_EQ(g0->rho.at(0, 0), P("-t"));
  EXPECT_EQ(g2->rho.at(0, 0), P("1"));
  EXPECT_EQ(g1->sign, -1);
  // x1 -> x4 and x2 -> t x3 + (1 - t) x4, up to the unit -1.
  const auto want = oracle::matrix({{"0", "t"}, {"1", "1 - t"}}, 1);
  const auto w = matrices_equal_up_to_unit(g1->rho, want);
  EXPECT_TRUE(w.equal);
  EXPECT_EQ(w.witness.sign, -1);
  EXPECT_THROW(split_hom(alpha(corpus::sigma()), {1, 2}), SpecError);
  EXPECT_THROW(split_hom(alpha(corpus::sigma()), {-1, 5}), SpecError);
}

// Every basis tensor, every split, ranks up to 6.
TEST(SplitHomProperty, RoundTripIsExhaustive) {
  for (int n = 1; n <= 3; ++n) {
    for (int n0 = 0; n0 <= 2 * n; ++n0) {
      for (const auto& s : k_subsets(2 * n, n)) {
        InvariantTensor a(2 * n, n, 1);
        a.add(s, P("t - 2"));
        EXPECT_EQ(merge_hom(split_hom(a, {n0, 2 * n - n0})), a);
      }
    }
  }
  Rng rng(63);
  PolyShape shape;
  for (int k = 0; k < 30; ++k) {
    const auto a = random_tensor(rng, 6, 3, shape);
    EXPECT_EQ(merge_hom(split_hom(a, {k % 7, 6 - k % 7})), a);
  }
}

TEST(Braid, SigmaOneMatchesTheHandMatrix) {
  const auto m = burau_matrix(braid_tangle(2, {1}));
  const auto want = oracle::matrix({{"0", "t^-1"}, {"1", "1 - t^-1"}}, 1);
  EXPECT_TRUE(matrices_equal_up_to_unit(m, want).equal);
  EXPECT_EQ(m.row_labels(), (std::vector<std::string>{"x3", "x4"}));
}

TEST(Braid, InverseAndSquare) {
  const auto id = burau_matrix(braid_tangle(2, {1, -1}));
  EXPECT_TRUE(matrices_equal_up_to_unit(id, oracle::matrix({{"1", "0"}, {"0", "1"}}, 1)).equal);
  const auto s = oracle::matrix({{"0", "t^-1"}, {"1", "1 - t^-1"}}, 1);
  EXPECT_TRUE(matrices_equal_up_to_unit(burau_matrix(braid_tangle(2, {1, 1})), multiply(s, s)).equal);
}

TEST(Braid, PermutationAtOne) {
  EXPECT_EQ(braid_permutation(2, {1}), (std::vector<int>{1, 0}));
  EXPECT_EQ(braid_permutation(3, {1, 2}), (std::vector<int>{2, 0, 1}));
  const auto r = burau_check(2, {1});
  EXPECT_TRUE(r.permutation_ok);
  EXPECT_EQ(r.at_one.at(0, 1), P("1"));
  EXPECT_EQ(r.at_one.at(1, 0), P("1"));
  EXPECT_TRUE(r.at_one.at(0, 0).is_zero());
}

TEST(Braid, RejectsTanglesThatAreNotBraids) {
  EXPECT_THROW(burau_matrix(corpus::sigma()), ShapeError);
  EXPECT_THROW(burau_matrix(corpus::tau()), ShapeError);
}

TEST(BraidProperty, MultiplicativeWithColors) {
  Rng rng(64);
  for (int k = 0; k < 40; ++k) {
    const int strands = std::uniform_int_distribution<int>(2, 4)(rng);
    std::vector<int> word;
    for (int len = std::uniform_int_distribution<int>(1, 5)(rng); len > 0; --len) {
      const int i = std::uniform_int_distribution<int>(1, strands - 1)(rng);
      word.push_back(std::bernoulli_distribution(0.5)(rng) ? i : -i);
    }
    std::vector<int> colors;
    for (int j = 0; j < strands; ++j) colors.push_back(std::uniform_int_distribution<int>(1, 3)(rng));
    const auto r = burau_check(strands, word, colors);
    EXPECT_TRUE(r.multiplicative);
    EXPECT_TRUE(r.permutation_ok);
  }
}
