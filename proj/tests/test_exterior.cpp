#include <gtest/gtest.h>

#include "welded/error.hpp"
#include "welded/exterior.hpp"
#include "welded/generators.hpp"

using namespace welded;

namespace {

InvariantTensor x(int rank, int i) { return InvariantTensor::generator(rank, i, 1); }
LaurentPoly P(const char* s) { return parse_poly(s, 1); }

}  // namespace

TEST(Subsets, SignatureAndInversions) {
  EXPECT_EQ(subset_signature({1, 3}, {2}), -1);
  EXPECT_EQ(subset_signature({2}, {1, 3}), -1);
  EXPECT_EQ(subset_signature({1, 2}, {3, 4}), 1);
  EXPECT_EQ(subset_signature({3, 4}, {1, 2}), 1);
  EXPECT_EQ(subset_signature({}, {1}), 1);
  EXPECT_THROW(subset_signature({1, 2}, {2}), DisjointnessError);
  EXPECT_EQ(inversions({3, 1, 2}), 2);
  EXPECT_EQ(k_subsets(4, 2).size(), 6u);
  EXPECT_EQ(k_subsets(3, 0), std::vector<Subset>{Subset{}});
  EXPECT_EQ(complement({2, 4}, 5), (Subset{1, 3, 5}));
}

TEST(Tensor, WedgeOfGenerators) {
  const auto a = wedge(x(4, 3), x(4, 1));
  EXPECT_EQ(a.grade(), 2);
  EXPECT_EQ(a.coeff({1, 3}), P("-1"));
  EXPECT_TRUE(wedge(x(4, 2), x(4, 2)).is_zero());
  EXPECT_TRUE(wedge(wedge(x(2, 1), x(2, 2)), x(2, 1)).is_zero());
}

TEST(Tensor, RejectsBadInput) {
  InvariantTensor a(4, 2, 1);
  EXPECT_THROW(a.add({1}, P("1")), GradeError);
  EXPECT_THROW(a.add({2, 1}, P("1")), GradeError);
  EXPECT_THROW(a += InvariantTensor(4, 1, 1), GradeError);
  EXPECT_THROW(volume_pairing(x(4, 1), x(4, 2)), GradeError);
}

TEST(Tensor, TextForm) {
  auto a = wedge(x(4, 1), x(4, 2));
  a.add({1, 4}, P("t - 1"));
  EXPECT_EQ(a.to_string(), "(x1^x2, 1), (x1^x4, t - 1)");
  EXPECT_EQ(parse_tensor(a.to_string(), 4, 1), a);
  EXPECT_EQ(InvariantTensor(4, 2, 1).to_string(), "0");
  EXPECT_THROW(parse_tensor("(x1^x1, 1)"), Error);
}

TEST(TensorProperty, WedgeIsGradedCommutativeAndAssociative) {
  Rng rng(21);
  PolyShape shape;
  for (int k = 0; k < 60; ++k) {
    const int rank = 6;
    const int p = std::uniform_int_distribution<int>(0, 3)(rng);
    const int q = std::uniform_int_distribution<int>(0, 3)(rng);
    const auto a = random_tensor(rng, rank, p, shape);
    const auto b = random_tensor(rng, rank, q, shape);
    const auto c = random_tensor(rng, rank, 1, shape);
    const auto ab = wedge(a, b);
    const auto ba = wedge(b, a);
    EXPECT_EQ(ab, (p * q) % 2 == 0 ? ba : -ba);
    EXPECT_EQ(wedge(ab, c), wedge(a, wedge(b, c)));
  }
}

TEST(TensorProperty, VolumePairingDeterminesTheTensor) {
  Rng rng(22);
  PolyShape shape;
  for (int k = 0; k < 40; ++k) {
    const int rank = 2 * std::uniform_int_distribution<int>(1, 3)(rng);
    const int grade = std::uniform_int_distribution<int>(0, rank)(rng);
    const auto a = random_tensor(rng, rank, grade, shape);
    const auto back = from_volume_pairing(rank, grade, 1, [&](const Subset& j) {
      InvariantTensor z(rank, rank - grade, 1);
      z.add(j, LaurentPoly::constant(1, 1));
      return volume_pairing(a, z);
    });
    EXPECT_EQ(back, a);
  }
}

TEST(UnitEquality, FindsTheWitness) {
  auto a = wedge(x(4, 1), x(4, 2));
  a.add({3, 4}, P("t^2 - 3"));
  const UnitMonomial u{-1, {3}};
  const auto w = equal_up_to_unit(a.times(u), a);
  ASSERT_TRUE(w.equal);
  EXPECT_EQ(w.witness, u);
  auto b = a;
  b.add({1, 3}, P("1"));
  EXPECT_FALSE(equal_up_to_unit(a, b).equal);
  EXPECT_FALSE(equal_up_to_unit(a, a.scaled(P("2"))).equal);
  EXPECT_TRUE(equal_up_to_unit(InvariantTensor(4, 2, 1), InvariantTensor(4, 2, 1)).equal);
  EXPECT_FALSE(equal_up_to_unit(a, InvariantTensor(4, 2, 1)).equal);
}

TEST(UnitEqualityProperty, CanonicalFormIsAClassInvariant) {
  Rng rng(23);
  PolyShape shape;
  shape.nvars = 2;
  for (int k = 0; k < 60; ++k) {
    const auto a = random_tensor(rng, 4, 2, shape);
    const UnitMonomial u{k % 2 ? -1 : 1, {k % 3 - 1, 2 - k % 5}};
    const auto [ca, ua] = canonical_form(a);
    EXPECT_EQ(ca.times(ua), a);
    EXPECT_EQ(canonical_form(a.times(u)).first, ca);
    EXPECT_EQ(canonical_form(ca).first, ca);
    EXPECT_TRUE(equal_up_to_unit(a.times(u), a).equal);
  }
}

TEST(Contraction, StraightWiringIsTheIdentity) {
  // One inner disk of arity 4 wired point k to outer point k.
  Wiring w;
  w.outer_points = 4;
  w.inner_points = {4};
  const bool enters[] = {true, false, true, false};
  for (int k = 1; k <= 4; ++k) {
    Wire wire;
    if (enters[k - 1]) {
      wire.from = Port{0, k};
      wire.to = Port{1, k};
    } else {
      wire.from = Port{1, k};
      wire.to = Port{0, k};
    }
    w.wires.push_back(wire);
  }
  Rng rng(24);
  PolyShape shape;
  for (int k = 0; k < 20; ++k) {
    const auto a = random_tensor(rng, 4, 2, shape);
    EXPECT_TRUE(equal_up_to_unit(contract_matched({a}, w, Execution::serial), a).equal);
    EXPECT_EQ(contract_matched({a}, w, Execution::serial), contract_matched({a}, w, Execution::parallel));
  }
}

TEST(Contraction, LoopsVanishAndBadWiringsAreRejected) {
  Wiring w;
  w.outer_points = 2;
  w.wires.push_back({Port{0, 1}, Port{0, 2}});
  w.wires.push_back({std::nullopt, std::nullopt});
  EXPECT_TRUE(contract_matched({}, w).is_zero());

  Wiring bad;
  bad.outer_points = 2;
  bad.wires.push_back({Port{0, 1}, Port{0, 1}});
  EXPECT_THROW(check_wiring(bad), WiringError);
  Wiring odd;
  odd.outer_points = 3;
  EXPECT_THROW(check_wiring(odd), WiringError);
}
