#include "ywalls/abacus.hpp"

#include <algorithm>
#include <iterator>
#include <random>
#include <stdexcept>
#include <string>

namespace ywalls {

int ruler_of(RankD rank, Int position) {
  return static_cast<int>((position - 1) % rank.period()) + 1;
}

void validate_abacus(const AbacusConfig& a) {
  const Int step = a.rank.step();
  for (Int p : a.uncolored)
    if (p < 1 || p % step == 0)
      throw std::invalid_argument("abacus: uncoloured bead at invalid position " +
                                  std::to_string(p));
  for (const auto& [p, site] : a.colored) {
    if (p < 1 || p % step != 0)
      throw std::invalid_argument("abacus: coloured bead at invalid position " +
                                  std::to_string(p));
    if (site.mult < 1)
      throw std::invalid_argument("abacus: non-positive multiplicity at " + std::to_string(p));
  }
}

Int abacus_weight(const AbacusConfig& a) {
  Int sum = 0;
  for (Int p : a.uncolored) sum += p;
  for (const auto& [p, site] : a.colored) sum += p * site.mult;
  return sum;
}

namespace {

// n_l: uncoloured beads strictly below p.
Int full_columns_below(const std::set<Int>& uncolored, Int p) {
  return static_cast<Int>(std::distance(uncolored.begin(), uncolored.lower_bound(p)));
}

BeadColor color_of(Top top, Int below) {
  const bool even = below % 2 == 0;
  return (top == Top::Lower) == even ? BeadColor::White : BeadColor::Black;
}

Top top_of(BeadColor color, Int below) {
  const bool even = below % 2 == 0;
  return (color == BeadColor::White) == even ? Top::Lower : Top::Upper;
}

}  // namespace

AbacusConfig wall_to_abacus(const YoungWallD& wall) {
  const auto report = validate_wall(wall);
  if (!report.ok())
    throw std::invalid_argument("wall_to_abacus: invalid wall (" +
                                std::string(rule_name(report.violations.front().rule)) + ")");
  AbacusConfig a(wall.rank);
  const Int step = wall.rank.step();
  for (const auto& c : wall.columns)
    if (c.blocks % step != 0) a.uncolored.insert(c.blocks);
  for (const auto& c : wall.columns) {
    if (c.blocks % step != 0) continue;
    const BeadColor color = color_of(*c.top, full_columns_below(a.uncolored, c.blocks));
    auto [it, inserted] = a.colored.try_emplace(c.blocks, ColoredSite{color, 0});
    if (it->second.color != color)
      throw std::invalid_argument("wall_to_abacus: colour conflict at " + std::to_string(c.blocks));
    ++it->second.mult;
  }
  return a;
}

YoungWallD abacus_to_wall(const AbacusConfig& a) {
  validate_abacus(a);
  YoungWallD wall(a.rank);
  for (Int p : a.uncolored) wall.columns.push_back({p, std::nullopt});
  for (const auto& [p, site] : a.colored) {
    const Top top = top_of(site.color, full_columns_below(a.uncolored, p));
    wall.columns.insert(wall.columns.end(), static_cast<std::size_t>(site.mult), Column{p, top});
  }
  std::stable_sort(wall.columns.begin(), wall.columns.end(),
                   [](const Column& x, const Column& y) { return x.blocks > y.blocks; });
  return wall;
}

std::string_view move_name(MoveKind kind) noexcept {
  switch (kind) {
    case MoveKind::B1: return "B1";
    case MoveKind::B2: return "B2";
    case MoveKind::B3: return "B3";
    case MoveKind::B4: return "B4";
    case MoveKind::B5: return "B5";
  }
  return "?";
}

namespace {

using ColoredMap = std::map<Int, ColoredSite>;

// Position 0 holds invisible white beads; a bead landing there disappears.
bool can_land(const ColoredMap& col, Int p, BeadColor c) {
  if (p == 0) return c == BeadColor::White;
  auto it = col.find(p);
  return it == col.end() || it->second.color == c;
}

void land(ColoredMap& col, Int p, BeadColor c, Int count = 1) {
  if (p == 0) return;
  auto [it, inserted] = col.try_emplace(p, ColoredSite{c, 0});
  it->second.mult += count;
}

void take(ColoredMap& col, Int p, Int count = 1) {
  auto it = col.find(p);
  it->second.mult -= count;
  if (it->second.mult == 0) col.erase(it);
}

struct PairLanding {
  BeadColor upper;  // bead arriving at s-(n-1)
  BeadColor lower;  // bead arriving at s-(2n-2)
};

PairLanding b5_colors(BeadColor top, BeadColor below) {
  if (top == below) return {flip(top), flip(below)};
  return {top, below};
}

bool b5_applies(const AbacusConfig& a, Int s) {
  const Int h = a.rank.step();
  const auto& col = a.colored;
  auto hi = col.find(s);
  auto mid = col.find(s - h);
  if (s < a.rank.period() || hi == col.end() || mid == col.end()) return false;
  const PairLanding to = b5_colors(hi->second.color, mid->second.color);
  ColoredMap rest = col;
  take(rest, s);
  take(rest, s - h);
  return can_land(rest, s - h, to.upper) && can_land(rest, s - 2 * h, to.lower);
}

AbacusConfig perform(const AbacusConfig& a, const BarMove& m) {
  AbacusConfig out = a;
  const Int P = a.rank.period();
  const Int h = a.rank.step();
  const Int s = m.position;
  switch (m.kind) {
    case MoveKind::B1:
      out.uncolored.erase(s);
      out.uncolored.insert(s - P);
      break;
    case MoveKind::B2:
      out.uncolored.erase(s);
      out.uncolored.erase(P - s);
      break;
    case MoveKind::B3: {
      const BeadColor c = out.colored.at(s).color;
      take(out.colored, s);
      land(out.colored, s - P, c);
      break;
    }
    case MoveKind::B4: {
      const BeadColor c = out.colored.at(s).color;
      take(out.colored, s, 2);
      auto it = out.colored.find(s - h);
      land(out.colored, s - h, it == out.colored.end() ? c : it->second.color, 2);
      break;
    }
    case MoveKind::B5: {
      const PairLanding to = b5_colors(out.colored.at(s).color, out.colored.at(s - h).color);
      take(out.colored, s);
      take(out.colored, s - h);
      land(out.colored, s - h, to.upper);
      land(out.colored, s - P, to.lower);
      break;
    }
  }
  return out;
}

}  // namespace

std::vector<BarMove> available_moves(const AbacusConfig& a) {
  std::vector<BarMove> moves;
  const Int P = a.rank.period();
  const Int h = a.rank.step();
  const auto& unc = a.uncolored;
  const auto& col = a.colored;
  for (auto it = unc.upper_bound(P); it != unc.end(); ++it)
    if (!unc.contains(*it - P)) moves.push_back({MoveKind::B1, *it});
  for (Int s = 1; s <= a.rank.n() - 2; ++s)
    if (unc.contains(s) && unc.contains(P - s)) moves.push_back({MoveKind::B2, s});
  for (const auto& [s, site] : col)
    if (s >= P && !col.contains(s - h) && can_land(col, s - P, site.color))
      moves.push_back({MoveKind::B3, s});
  for (const auto& [s, site] : col)
    if (site.mult >= 2) moves.push_back({MoveKind::B4, s});
  for (const auto& [s, site] : col)
    if (b5_applies(a, s)) moves.push_back({MoveKind::B5, s});
  return moves;
}

AbacusConfig apply_move(const AbacusConfig& a, const BarMove& m) {
  const auto moves = available_moves(a);
  if (std::find(moves.begin(), moves.end(), m) == moves.end())
    throw std::invalid_argument("apply_move: " + std::string(move_name(m.kind)) + " at " +
                                std::to_string(m.position) + " does not apply");
  return perform(a, m);
}

bool is_core(const AbacusConfig& a) { return available_moves(a).empty(); }

namespace {

template <class Choose>
CoreResult reduce(const AbacusConfig& start, Choose&& choose) {
  validate_abacus(start);
  const RankD rank = start.rank;
  CoreResult result{start, 0, std::vector<Int>(static_cast<std::size_t>(rank.n() - 2), 0), 0};
  for (;;) {
    const auto moves = available_moves(result.core);
    if (moves.empty()) break;
    const BarMove& m = moves[choose(moves.size())];
    if (m.kind == MoveKind::B1) {
      const int k = ruler_of(rank, m.position);
      ++result.pairCounts[static_cast<std::size_t>(std::min<Int>(k, rank.period() - k) - 1)];
    } else if (m.kind == MoveKind::B2) {
      ++result.pairCounts[static_cast<std::size_t>(m.position - 1)];
    } else {
      ++result.coloredCount;
    }
    result.core = perform(result.core, m);
    ++result.barsRemoved;
  }
  return result;
}

}  // namespace

CoreResult compute_core(const AbacusConfig& a) {
  return reduce(a, [](std::size_t) { return std::size_t{0}; });
}

CoreResult compute_core_random(const AbacusConfig& a, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return reduce(a, [&](std::size_t count) {
    return std::uniform_int_distribution<std::size_t>(0, count - 1)(rng);
  });
}

}  // namespace ywalls
