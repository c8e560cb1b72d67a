#ifndef YWALLS_YOUNG_WALL_HPP
#define YWALLS_YOUNG_WALL_HPP

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ywalls/rank.hpp"

namespace ywalls {

enum class Parity { Odd, Even };

// Parity of the column at 0-based index `index` (the leftmost column is odd).
constexpr Parity column_parity(std::size_t index) noexcept {
  return index % 2 == 0 ? Parity::Odd : Parity::Even;
}

struct FullBlock {
  int label;
  friend bool operator==(const FullBlock&, const FullBlock&) = default;
};

struct HalfPair {
  int lower;
  int upper;
  friend bool operator==(const HalfPair&, const HalfPair&) = default;
};

struct CellDescriptor {
  std::variant<FullBlock, HalfPair> kind;
  Int row;
  Parity parity;
  friend bool operator==(const CellDescriptor&, const CellDescriptor&) = default;
};

/// Cell of the type-D pattern at unit-cell row `row` (1 = bottom).
/// Throws std::invalid_argument if row < 1.
CellDescriptor pattern_cell(RankD rank, Int row, Parity parity);

/// Label of half-unit `unit` of a column. Half-units count upwards from the
/// grey triangle (unit 0); a half-pair cell holds two consecutive units and a
/// full block one, so the labels repeat with period 2n-2.
int unit_label(RankD rank, Int unit, Parity parity);

enum class Top { Lower, Upper };

struct Column {
  Int blocks = 0;
  std::optional<Top> top;
  friend bool operator==(const Column&, const Column&) = default;
};

struct YoungWallD {
  RankD rank;
  std::vector<Column> columns;  // leftmost first

  explicit YoungWallD(RankD r, std::vector<Column> cols = {})
      : rank(r), columns(std::move(cols)) {}

  friend bool operator==(const YoungWallD&, const YoungWallD&) = default;
};

// YW1 (finitely many blocks) holds by construction and is never reported.
enum class Rule { YW2, YW3, YW4 };

std::string_view rule_name(Rule rule) noexcept;

struct Violation {
  Rule rule;
  std::size_t column;  // 0-based
  std::string detail;
};

struct ValidationReport {
  std::vector<Violation> violations;
  bool ok() const noexcept { return violations.empty(); }
};

/// Checks the wall rules. The first entry of the report is the first
/// violated rule in column order.
ValidationReport validate_wall(const YoungWallD& wall);

/// Sum of the column heights, which is also |Y|.
Int total_weight(const YoungWallD& wall);

/// Throws std::invalid_argument for an invalid wall.
MultiWeight multiweight(const YoungWallD& wall);

struct LambdaPair {
  std::vector<Int> mu;  // heights not divisible by n-1, decreasing
  std::vector<Int> nu;  // heights divisible by n-1, decreasing
  friend bool operator==(const LambdaPair&, const LambdaPair&) = default;
};

LambdaPair lambda_of(const YoungWallD& wall);

using WallVisitor = std::function<void(const YoungWallD&)>;

/// Visits every valid wall of total weight <= maxWeight in canonical order:
/// lexicographic on the sequence of heights, then on the top orientations
/// (Lower before Upper) read left to right.
void for_each_wall(RankD rank, Int maxWeight, const WallVisitor& visit);

/// The slice of for_each_wall whose first column has height `first`
/// (0 selects the empty wall). Slices for increasing `first` concatenate to
/// the full canonical stream.
void for_each_wall_with_first(RankD rank, Int maxWeight, Int first,
                              const WallVisitor& visit);

/// Collects for_each_wall. With threads > 1 the slices are generated
/// concurrently; the result is identical.
std::vector<YoungWallD> enumerate_walls(RankD rank, Int maxWeight,
                                        unsigned threads = 1);

/// Compact text form, e.g. "12L 12L 11 6U"; "-" for the empty wall.
std::string to_text(const YoungWallD& wall);

}  // namespace ywalls

#endif
