#include <gtest/gtest.h>

#include <algorithm>

#include "welded/alexander.hpp"
#include "welded/corpus.hpp"
#include "welded/error.hpp"
#include "welded/generators.hpp"
#include "welded/moves.hpp"

using namespace welded;

namespace {

const Move all_moves[] = {Move::R1, Move::R2, Move::R3, Move::V1, Move::V2, Move::V3, Move::mixed, Move::OC};

std::vector<int> strand_colors(const WeldedDiagram& d) {
  std::vector<int> out;
  for (const auto& c : components(d)) out.push_back(c.color);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST(Moves, R1InsertAndRemove) {
  const auto s = corpus::strand();
  MoveSite site{Move::R1, Direction::insert, {"s"}, -1, true};
  const auto kinked = apply_move(s, site);
  EXPECT_EQ(kinked.crossings.size(), 1u);
  EXPECT_EQ(kinked.crossings[0].sign, -1);
  EXPECT_EQ(kinked.crossings[0].over, kinked.crossings[0].in);
  EXPECT_TRUE(validate(kinked).empty());
  const auto back = apply_move(kinked, {Move::R1, Direction::remove, {kinked.crossings[0].id}});
  EXPECT_TRUE(back.crossings.empty());
  EXPECT_TRUE(equal_up_to_unit(alpha(back), alpha(s)).equal);
  EXPECT_TRUE(equal_up_to_unit(alpha(kinked), alpha(s)).equal);
}

TEST(Moves, R2InsertAndRemove) {
  const auto d = corpus::sigma();
  const auto r2 = apply_move(d, {Move::R2, Direction::insert, {"e", "f"}, 1});
  EXPECT_EQ(r2.crossings.size(), 3u);
  EXPECT_TRUE(equal_up_to_unit(alpha(r2), alpha(d)).equal);
  const auto sites = enumerate_sites(r2, Move::R2, Direction::remove);
  ASSERT_FALSE(sites.empty());
  const auto back = apply_move(r2, sites.front());
  EXPECT_EQ(back.crossings.size(), 1u);
  EXPECT_TRUE(equal_up_to_unit(alpha(back), alpha(d)).equal);
}

TEST(Moves, VirtualMovesKeepTheCrossings) {
  const auto d = corpus::sigma();
  const auto v1 = apply_move(d, {Move::V1, Direction::insert, {"a"}});
  EXPECT_EQ(v1.vcrossings.size(), 1u);
  const auto v2 = apply_move(v1, {Move::V2, Direction::insert, {"a", "f"}});
  EXPECT_EQ(v2.vcrossings.size(), 3u);
  EXPECT_EQ(v2.crossings, d.crossings);
  const auto removed = apply_move(v1, {Move::V1, Direction::remove, {v1.vcrossings[0].id}});
  EXPECT_TRUE(removed.vcrossings.empty());
}

TEST(Moves, MismatchedSitesAreRejected) {
  const auto d = corpus::sigma();
  EXPECT_THROW(apply_move(d, {Move::R1, Direction::remove, {"c1"}}), PatternError);
  EXPECT_THROW(apply_move(d, {Move::R1, Direction::insert, {"nope"}}), PatternError);
  EXPECT_THROW(apply_move(d, {Move::R2, Direction::remove, {"c1", "c1"}}), PatternError);
  EXPECT_THROW(apply_move(d, {Move::R3, Direction::insert, {"c1"}}), PatternError);
  EXPECT_THROW(apply_move(d, {Move::OC, Direction::insert, {"c1", "p1"}}), PatternError);
  EXPECT_THROW(apply_move(d, {Move::V1, Direction::remove, {"c1"}}), PatternError);
}

TEST(Moves, SiteText) {
  EXPECT_EQ(move_name(Move::mixed), "mixed");
  const MoveSite s{Move::R2, Direction::insert, {"e", "f"}, -1};
  EXPECT_NE(s.to_string().find("R2"), std::string::npos);
}

// Every applicable move on every fixture diagram, exhaustively.
TEST(MovesProperty, CorpusInvariance) {
  int applied = 0;
  for (const auto& [name, d] : corpus::diagrams()) {
    const int mu = color_count(d);
    const auto a = alpha(d, mu);
    for (Move m : all_moves) {
      for (Direction dir : {Direction::insert, Direction::remove}) {
        for (const auto& site : enumerate_sites(d, m, dir)) {
          const auto moved = apply_move(d, site);
          EXPECT_TRUE(validate(moved).empty()) << name << " " << site.to_string();
          EXPECT_EQ(moved.boundary, d.boundary);
          EXPECT_EQ(strand_colors(moved), strand_colors(d)) << name << " " << site.to_string();
          EXPECT_TRUE(equal_up_to_unit(alpha(moved, mu), a).equal) << name << " " << site.to_string();
          ++applied;
        }
      }
    }
  }
  EXPECT_GT(applied, 100);
}

// Chains of moves from random diagrams, including every move type.
TEST(MovesProperty, RandomChains) {
  Rng rng(41);
  DiagramShape shape;
  shape.max_crossings = 6;
  std::map<Move, int> seen;
  for (int k = 0; k < 40; ++k) {
    WeldedDiagram d = random_diagram(rng, shape);
    const auto a = alpha(d, shape.mu);
    for (int step = 0; step < 5; ++step) {
      const auto site = random_move(rng, d);
      if (!site) break;
      ++seen[site->move];
      d = apply_move(d, *site);
      ASSERT_TRUE(equal_up_to_unit(alpha(d, shape.mu), a).equal) << site->to_string() << "\n" << serialize_diagram(d);
    }
  }
  EXPECT_GT(seen[Move::R3], 0);
  EXPECT_GT(seen[Move::R2], 0);
  EXPECT_GT(seen[Move::R1], 0);
}
