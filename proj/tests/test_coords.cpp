#include <gtest/gtest.h>

#include "helpers.hpp"
#include "ywalls/coords.hpp"

namespace ywalls {
namespace {

constexpr auto W = BeadColor::White;
constexpr auto B = BeadColor::Black;

TEST(Decompose, Examples) {
  EXPECT_EQ(z_decompose(0), (ZDecomposition{0, 0, -1}));
  EXPECT_EQ(z_decompose(1), (ZDecomposition{1, 1, 1}));
  EXPECT_EQ(z_decompose(-1), (ZDecomposition{0, 1, 1}));
  EXPECT_EQ(z_decompose(4), (ZDecomposition{2, 0, -1}));
  EXPECT_EQ(interval_decompose({1, 1, 0, 0}, 1, 2), z_decompose(2));
  EXPECT_EQ(interval_decompose({1, 1, 0, 0}, 3, 2), z_decompose(0));
  for (Int v = -20; v <= 20; ++v) {
    const auto d = z_decompose(v);
    EXPECT_EQ(2 * d.a - d.b, v);
    EXPECT_EQ(d.c, 2 * d.b - 1);
  }
}

TEST(Coords, ExampleCore) {
  AbacusConfig core{RankD(4)};
  core.colored = {{6, {B, 1}}, {12, {W, 1}}};
  EXPECT_EQ(core_to_z(core), (CoreCoords{0, 0, 1, 1}));
  EXPECT_EQ(z_to_core({0, 0, 1, 1}, RankD(4)), core);
  EXPECT_EQ(core_weight_total({0, 0, 1, 1}, RankD(4)), 18);
}

TEST(Coords, Examples) {
  const RankD n4(4);
  EXPECT_EQ(z_to_core({0, 0, 0, 0}, n4), AbacusConfig(n4));
  EXPECT_EQ(core_weight_total({0, 0, 1, 0}, n4), 9);
  EXPECT_EQ(z_to_m({1, 0, 0, 0}, n4), (MCoords{-1, -2, -1, -1}));
  EXPECT_EQ(cartan_quadratic({-1, -2, -1, -1}, n4), 1);
  EXPECT_EQ(core_multiweight({1, 0, 0, 0}, n4), (MultiWeight{1, 0, 0, 0, 0}));
  EXPECT_EQ(z_to_m({-1, 0, 0, 0}, n4), (MCoords{-1, 0, 0, 0}));
  EXPECT_EQ(core_multiweight({-1, 0, 0, 0}, n4), (MultiWeight{1, 0, 2, 1, 1}));
  EXPECT_THROW(z_to_m({0, 0, 0}, n4), std::invalid_argument);
}

TEST(Coords, NonCoreRejected) {
  AbacusConfig a{RankD(4)};
  a.uncolored = {7};
  EXPECT_THROW(core_to_z(a), std::invalid_argument);
}

TEST(Coords, CartanMatrix) {
  for (int n = 4; n <= 8; ++n) {
    const auto c = cartan_d(RankD(n));
    ASSERT_EQ(c.matrix.size(), static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
      EXPECT_EQ(c.matrix[i][i], 2);
      for (int j = 0; j < n; ++j) EXPECT_EQ(c.matrix[i][j], c.matrix[j][i]);
    }
  }
}

TEST(Coords, BijectionAndWeightsOnBox) {
  for (int n : {4, 5, 6}) {
    const RankD rank(n);
    test::for_each_in_box(n, n == 6 ? 2 : 3, [&](const CoreCoords& z) {
      const auto core = z_to_core(z, rank);
      ASSERT_TRUE(is_core(core));
      ASSERT_EQ(core_to_z(core), z);
      const auto wt = core_multiweight(z, rank);
      ASSERT_EQ(wt, multiweight(abacus_to_wall(core)));
      ASSERT_EQ(total(wt), core_weight_total(z, rank));
      const auto m = z_to_m(z, rank);
      ASSERT_EQ(m_to_z(m, rank), z);
      ASSERT_EQ(theta_exponents(m, rank), wt);
    });
  }
}

// Every core of a wall of weight <= 14 is reached from some z.
TEST(Coords, EveryWallCoreHasCoordinates) {
  const RankD rank(5);
  for_each_wall(rank, 14, [&](const YoungWallD& w) {
    const auto core = compute_core(wall_to_abacus(w)).core;
    ASSERT_EQ(z_to_core(core_to_z(core), rank), core) << to_text(w);
  });
}

TEST(Coords, SumAndPrefixIdentities) {
  for (int n : {4, 5, 6, 7}) {
    const RankD rank(n);
    test::for_each_in_box(n, n >= 6 ? 2 : 3, [&](const CoreCoords& z) {
      const auto T = interval_decompose(z, 1, n - 2);
      const auto m = z_to_m(z, rank);
      Int lhs = 0, rhs = -(n - 1) * T.b - (n - 1) * T.c * (z[n - 2] + z[n - 1]);
      for (Int v : m) lhs += v;
      for (int i = 1; i <= n - 2; ++i) rhs -= (n - 1 - i) * z[i - 1];
      ASSERT_EQ(lhs, rhs);
      for (int i = 1; i <= n - 2; ++i) {
        const auto head = interval_decompose(z, 1, i), tail = interval_decompose(z, i + 1, n - 2);
        Int prefix = 0;
        for (int j = 0; j < i; ++j) prefix += z[j];
        ASSERT_EQ(2 * head.a - head.c * tail.b, prefix + T.b);
      }
    });
  }
}

Int bb_sum(const CoreCoords& z, int n) {
  Int s = 0;
  for (int i = 2; i <= n - 2; ++i) s += interval_decompose(z, 1, i - 1).b * interval_decompose(z, i, i).b;
  return s;
}

TEST(Coords, ProductOfParitiesIsMinusR) {
  EXPECT_EQ(r_prefix({1, 1, 0, 0}, 2), -1);
  // The identity with r on the right (no minus sign) already fails here.
  EXPECT_EQ(bb_sum({1, 1, 0, 0}, 4), 1);
  for (int n : {4, 5, 6, 7})
    test::for_each_in_box(n, 2, [&](const CoreCoords& z) {
      ASSERT_EQ(bb_sum(z, n), -r_prefix(z, n - 2));
    });
}

}  // namespace
}  // namespace ywalls
