#include <gtest/gtest.h>

#include <algorithm>

#include "helpers.hpp"
#include "ywalls/abacus.hpp"
#include "ywalls/coords.hpp"
#include "ywalls/young_wall.hpp"

namespace ywalls {
namespace {

using test::example_wall;
constexpr auto W = BeadColor::White;
constexpr auto B = BeadColor::Black;

AbacusConfig make(int n, std::set<Int> unc, std::map<Int, ColoredSite> col) {
  AbacusConfig a{RankD(n)};
  a.uncolored = std::move(unc);
  a.colored = std::move(col);
  return a;
}

bool has_move(const AbacusConfig& a, MoveKind k, Int pos) {
  const auto moves = available_moves(a);
  return std::find(moves.begin(), moves.end(), BarMove{k, pos}) != moves.end();
}

TEST(Abacus, ExampleWall) {
  const auto a = wall_to_abacus(example_wall());
  EXPECT_EQ(a, make(4, {7, 8, 10, 11}, {{6, {B, 1}}, {12, {W, 3}}}));
  EXPECT_EQ(abacus_weight(a), 78);
  EXPECT_EQ(abacus_to_wall(a), example_wall());
}

TEST(Abacus, SingleColumnColours) {
  // No uncoloured beads below: an upper top is black, a lower top white.
  EXPECT_EQ(wall_to_abacus(YoungWallD(RankD(4), {{3, Top::Upper}})), make(4, {}, {{3, {B, 1}}}));
  EXPECT_EQ(wall_to_abacus(YoungWallD(RankD(4), {{3, Top::Lower}})), make(4, {}, {{3, {W, 1}}}));
  EXPECT_EQ(wall_to_abacus(YoungWallD(RankD(4))), make(4, {}, {}));
}

TEST(Abacus, Rulers) {
  EXPECT_EQ(ruler_of(RankD(4), 1), 1);
  EXPECT_EQ(ruler_of(RankD(4), 6), 6);
  EXPECT_EQ(ruler_of(RankD(4), 7), 1);
}

TEST(Abacus, ValidateRejectsMalformed) {
  EXPECT_THROW(validate_abacus(make(4, {3}, {})), std::invalid_argument);
  EXPECT_THROW(validate_abacus(make(4, {}, {{4, {W, 1}}})), std::invalid_argument);
  EXPECT_THROW(validate_abacus(make(4, {}, {{3, {W, 0}}})), std::invalid_argument);
  EXPECT_THROW(validate_abacus(make(4, {0}, {})), std::invalid_argument);
  EXPECT_NO_THROW(validate_abacus(make(4, {1, 5}, {{3, {B, 2}}})));
}

TEST(Abacus, RoundTripOverAllWalls) {
  for (int n : {4, 5, 6})
    for_each_wall(RankD(n), 14, [&](const YoungWallD& w) {
      const auto a = wall_to_abacus(w);
      ASSERT_NO_THROW(validate_abacus(a)) << to_text(w);
      ASSERT_EQ(abacus_weight(a), total_weight(w)) << to_text(w);
      ASSERT_EQ(abacus_to_wall(a), w) << to_text(w);
    });
}

TEST(Moves, ExampleHasExpectedMoves) {
  const auto a = wall_to_abacus(example_wall());
  EXPECT_TRUE(has_move(a, MoveKind::B1, 7));
  EXPECT_TRUE(has_move(a, MoveKind::B4, 12));
  EXPECT_TRUE(has_move(a, MoveKind::B1, 11));
  EXPECT_FALSE(has_move(a, MoveKind::B1, 9));
  const auto moves = available_moves(a);
  EXPECT_TRUE(std::is_sorted(moves.begin(), moves.end()));
  EXPECT_TRUE(available_moves(make(4, {}, {{6, {B, 1}}, {12, {W, 1}}})).empty());
}

TEST(Moves, B1KeepsColours) {
  const auto a = wall_to_abacus(example_wall());
  const auto b = apply_move(a, {MoveKind::B1, 7});
  EXPECT_EQ(b, make(4, {1, 8, 10, 11}, {{6, {B, 1}}, {12, {W, 3}}}));
}

TEST(Moves, B2RemovesPair) {
  EXPECT_EQ(apply_move(make(4, {1, 5}, {}), {MoveKind::B2, 1}), make(4, {}, {}));
  EXPECT_EQ(apply_move(make(5, {2, 6, 9}, {}), {MoveKind::B2, 2}), make(5, {9}, {}));
}

TEST(Moves, B3AndB4) {
  EXPECT_EQ(apply_move(make(4, {}, {{6, {W, 1}}}), {MoveKind::B3, 6}), make(4, {}, {}));
  // Position 0 only accepts white beads.
  EXPECT_FALSE(has_move(make(4, {}, {{6, {B, 1}}}), MoveKind::B3, 6));
  EXPECT_EQ(apply_move(make(4, {}, {{6, {B, 1}}, {9, {W, 2}}}), {MoveKind::B4, 9}),
            make(4, {}, {{6, {B, 3}}}));
  EXPECT_EQ(apply_move(make(4, {}, {{3, {W, 2}}}), {MoveKind::B4, 3}), make(4, {}, {}));
  EXPECT_EQ(apply_move(make(4, {}, {{3, {B, 2}}}), {MoveKind::B4, 3}), make(4, {}, {}));
}

TEST(Moves, B5) {
  EXPECT_EQ(apply_move(make(4, {}, {{6, {B, 1}}, {3, {W, 1}}}), {MoveKind::B5, 6}),
            make(4, {}, {{3, {B, 1}}}));
  EXPECT_EQ(apply_move(make(4, {}, {{6, {B, 1}}, {3, {B, 1}}}), {MoveKind::B5, 6}),
            make(4, {}, {{3, {W, 1}}}));
}

TEST(Moves, InapplicableThrows) {
  const auto a = wall_to_abacus(example_wall());
  EXPECT_THROW(apply_move(a, {MoveKind::B1, 9}), std::invalid_argument);
  EXPECT_THROW(apply_move(a, {MoveKind::B5, 3}), std::invalid_argument);
}

TEST(Moves, EveryMoveRemovesOneBar) {
  for (int n : {4, 5}) {
    const RankD rank(n);
    const MultiWeight bar = bar_weight(rank);
    for_each_wall(rank, 13, [&](const YoungWallD& w) {
      const auto a = wall_to_abacus(w);
      const auto before = multiweight(w);
      for (const auto& m : available_moves(a)) {
        const auto b = apply_move(a, m);
        ASSERT_NO_THROW(validate_abacus(b));
        ASSERT_EQ(abacus_weight(a) - abacus_weight(b), rank.period());
        auto after = multiweight(abacus_to_wall(b));
        for (std::size_t i = 0; i < after.size(); ++i) after[i] += bar[i];
        ASSERT_EQ(after, before) << to_text(w) << " " << move_name(m.kind) << "@" << m.position;
      }
    });
  }
}

TEST(Core, Example) {
  const auto r = compute_core(wall_to_abacus(example_wall()));
  EXPECT_EQ(r.core, make(4, {}, {{6, {B, 1}}, {12, {W, 1}}}));
  EXPECT_EQ(r.barsRemoved, 10);
  EXPECT_EQ(abacus_weight(r.core), 18);
  EXPECT_EQ(r.pairCounts, (std::vector<Int>{3, 3}));
  EXPECT_EQ(r.coloredCount, 4);
  EXPECT_TRUE(is_core(r.core));
}

TEST(Core, WeightAndChannels) {
  for (int n : {4, 5, 6}) {
    const RankD rank(n);
    const MultiWeight bar = bar_weight(rank);
    for_each_wall(rank, 14, [&](const YoungWallD& w) {
      const auto r = compute_core(wall_to_abacus(w));
      ASSERT_TRUE(is_core(r.core));
      Int channels = r.coloredCount;
      for (Int c : r.pairCounts) channels += c;
      ASSERT_EQ(channels, r.barsRemoved);
      auto core = multiweight(abacus_to_wall(r.core));
      for (std::size_t i = 0; i < core.size(); ++i) core[i] += r.barsRemoved * bar[i];
      ASSERT_EQ(core, multiweight(w)) << to_text(w);
    });
  }
}

TEST(Core, RandomOrdersAgree) {
  const RankD rank(5);
  for_each_wall(rank, 12, [&](const YoungWallD& w) {
    const auto a = wall_to_abacus(w);
    const auto ref = compute_core(a);
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
      const auto r = compute_core_random(a, seed);
      ASSERT_EQ(r.core, ref.core) << to_text(w) << " seed " << seed;
      ASSERT_EQ(r.barsRemoved, ref.barsRemoved);
    }
  });
}

TEST(Core, CoordinateCoresHaveNoMoves) {
  test::for_each_in_box(4, 2, [](const CoreCoords& z) {
    EXPECT_TRUE(is_core(z_to_core(z, RankD(4))));
  });
}

}  // namespace
}  // namespace ywalls
