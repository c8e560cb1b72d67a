#ifndef YWALLS_ABACUS_HPP
#define YWALLS_ABACUS_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <set>
#include <string_view>
#include <vector>

#include "ywalls/rank.hpp"
#include "ywalls/young_wall.hpp"

namespace ywalls {

enum class BeadColor { White, Black };

constexpr BeadColor flip(BeadColor c) noexcept {
  return c == BeadColor::White ? BeadColor::Black : BeadColor::White;
}

struct ColoredSite {
  BeadColor color;
  Int mult;
  friend bool operator==(const ColoredSite&, const ColoredSite&) = default;
};

// Beads on rulers R_1..R_{2n-2}. Position p lies on ruler ((p-1) mod (2n-2))+1.
// Positions divisible by n-1 carry coloured beads (with multiplicity), all
// others at most one uncoloured bead.
struct AbacusConfig {
  RankD rank;
  std::set<Int> uncolored;
  std::map<Int, ColoredSite> colored;

  explicit AbacusConfig(RankD r) : rank(r) {}

  friend bool operator==(const AbacusConfig&, const AbacusConfig&) = default;
};

int ruler_of(RankD rank, Int position);

/// Throws std::invalid_argument describing the first malformed entry.
void validate_abacus(const AbacusConfig& a);

/// Sum of bead positions with multiplicity; equals |Y| of the wall.
Int abacus_weight(const AbacusConfig& a);

/// Throws std::invalid_argument for an invalid wall.
AbacusConfig wall_to_abacus(const YoungWallD& wall);
YoungWallD abacus_to_wall(const AbacusConfig& a);

// B1-B4 are the printed steps (B1/B2 without colour switching). B5 moves a
// coloured bead at s and one at s-(n-1) up by n-1 each.
enum class MoveKind { B1, B2, B3, B4, B5 };

std::string_view move_name(MoveKind kind) noexcept;

struct BarMove {
  MoveKind kind;
  Int position;  // the bead at the larger position; for B2 the smaller one
  friend auto operator<=>(const BarMove&, const BarMove&) = default;
};

/// Applicable moves ordered by (kind, position).
std::vector<BarMove> available_moves(const AbacusConfig& a);

/// Throws std::invalid_argument if the move does not apply.
AbacusConfig apply_move(const AbacusConfig& a, const BarMove& m);

bool is_core(const AbacusConfig& a);

struct CoreResult {
  AbacusConfig core;
  Int barsRemoved = 0;
  std::vector<Int> pairCounts;  // index s-1 counts channel pair(s, 2n-2-s)
  Int coloredCount = 0;
};

/// Reduces with the smallest applicable (kind, position) at every step.
CoreResult compute_core(const AbacusConfig& a);

/// Reduces choosing uniformly among applicable moves, seeded.
CoreResult compute_core_random(const AbacusConfig& a, std::uint64_t seed);

}  // namespace ywalls

#endif
