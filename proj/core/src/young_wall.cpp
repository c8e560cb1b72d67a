#include "ywalls/young_wall.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "ywalls/parallel.hpp"

namespace ywalls {

CellDescriptor pattern_cell(RankD rank, Int row, Parity parity) {
  if (row < 1) throw std::invalid_argument("pattern_cell: row must be >= 1");
  const Int n = rank.n();
  const Int r = (row - 1) % (2 * n - 4) + 1;
  const bool odd = parity == Parity::Odd;
  CellDescriptor cell{FullBlock{0}, row, parity};
  if (r == 1) {
    cell.kind = odd ? HalfPair{1, 0} : HalfPair{0, 1};
  } else if (r == n - 1) {
    const int a = static_cast<int>(n);
    cell.kind = odd ? HalfPair{a, a - 1} : HalfPair{a - 1, a};
  } else if (r < n - 1) {
    cell.kind = FullBlock{static_cast<int>(r)};
  } else {
    cell.kind = FullBlock{static_cast<int>(2 * n - 2 - r)};
  }
  return cell;
}

int unit_label(RankD rank, Int unit, Parity parity) {
  const Int n = rank.n();
  const Int r = ((unit % rank.period()) + rank.period()) % rank.period();
  const bool odd = parity == Parity::Odd;
  if (r == 0) return odd ? 1 : 0;
  if (r == 1) return odd ? 0 : 1;
  if (r <= n - 2) return static_cast<int>(r);
  if (r == n - 1) return static_cast<int>(odd ? n : n - 1);
  if (r == n) return static_cast<int>(odd ? n - 1 : n);
  return static_cast<int>(2 * n - 1 - r);
}

std::string_view rule_name(Rule rule) noexcept {
  switch (rule) {
    case Rule::YW2: return "YW2";
    case Rule::YW3: return "YW3";
    case Rule::YW4: return "YW4";
  }
  return "?";
}

ValidationReport validate_wall(const YoungWallD& wall) {
  ValidationReport report;
  const Int step = wall.rank.step();
  auto flag = [&](Rule rule, std::size_t i, std::string detail) {
    report.violations.push_back({rule, i, std::move(detail)});
  };
  for (std::size_t i = 0; i < wall.columns.size(); ++i) {
    const Column& c = wall.columns[i];
    if (c.blocks < 1) {
      flag(Rule::YW2, i, "column has no blocks");
      continue;
    }
    const bool halfTop = c.blocks % step == 0;
    if (halfTop && !c.top) flag(Rule::YW2, i, "height divisible by n-1 needs a top half-block");
    if (!halfTop && c.top) flag(Rule::YW2, i, "top half-block given for a full column");
    if (i == 0) continue;
    const Column& prev = wall.columns[i - 1];
    if (c.blocks > prev.blocks) {
      flag(Rule::YW3, i, "heights must weakly decrease");
    } else if (c.blocks == prev.blocks) {
      if (!halfTop)
        flag(Rule::YW4, i, "two full columns of height " + std::to_string(c.blocks));
      else if (c.top != prev.top)
        flag(Rule::YW3, i, "equal heights with different top half-blocks");
    }
  }
  return report;
}

Int total_weight(const YoungWallD& wall) {
  Int sum = 0;
  for (const auto& c : wall.columns) sum += c.blocks;
  return sum;
}

namespace {

void add_column(RankD rank, const Column& c, Parity parity, MultiWeight& wt) {
  const Int P = rank.period();
  const Int periods = c.blocks / P;
  if (periods > 0) {
    const MultiWeight bar = bar_weight(rank);
    for (std::size_t j = 0; j < wt.size(); ++j) wt[j] += periods * bar[j];
  }
  for (Int u = periods * P + 1; u <= c.blocks; ++u) ++wt[unit_label(rank, u, parity)];
  if (c.top == Top::Upper) {
    --wt[unit_label(rank, c.blocks, parity)];
    ++wt[unit_label(rank, c.blocks + 1, parity)];
  }
}

}  // namespace

MultiWeight multiweight(const YoungWallD& wall) {
  const auto report = validate_wall(wall);
  if (!report.ok())
    throw std::invalid_argument("multiweight: invalid wall (" +
                                std::string(rule_name(report.violations.front().rule)) + ": " +
                                report.violations.front().detail + ")");
  MultiWeight wt(static_cast<std::size_t>(wall.rank.n()) + 1, 0);
  for (std::size_t i = 0; i < wall.columns.size(); ++i)
    add_column(wall.rank, wall.columns[i], column_parity(i), wt);
  return wt;
}

LambdaPair lambda_of(const YoungWallD& wall) {
  LambdaPair out;
  for (const auto& c : wall.columns)
    (c.blocks % wall.rank.step() == 0 ? out.nu : out.mu).push_back(c.blocks);
  return out;
}

namespace {

class WallGenerator {
 public:
  WallGenerator(RankD rank, Int maxWeight, const WallVisitor& visit)
      : rank_(rank), max_(maxWeight), visit_(visit), wall_(rank) {}

  void run_from(Int first) {
    parts_.clear();
    if (first == 0) {
      emit();
      return;
    }
    if (first > max_) return;
    parts_.push_back(first);
    descend(max_ - first);
  }

 private:
  void descend(Int remaining) {
    emit();
    const Int last = parts_.back();
    const Int limit = std::min(last, remaining);
    for (Int p = 1; p <= limit; ++p) {
      if (p == last && p % rank_.step() != 0) continue;
      parts_.push_back(p);
      descend(remaining - p);
      parts_.pop_back();
    }
  }

  // Emits every orientation choice for the current heights. The first
  // distinct half-topped height is the most significant flag.
  void emit() {
    halfTopped_.clear();
    for (Int p : parts_)
      if (p % rank_.step() == 0 && (halfTopped_.empty() || halfTopped_.back() != p))
        halfTopped_.push_back(p);
    const std::size_t k = halfTopped_.size();
    wall_.columns.resize(parts_.size());
    for (unsigned long mask = 0; mask < (1ul << k); ++mask) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < parts_.size(); ++i) {
        Column& c = wall_.columns[i];
        c.blocks = parts_[i];
        if (parts_[i] % rank_.step() != 0) {
          c.top.reset();
          continue;
        }
        while (halfTopped_[idx] != parts_[i]) ++idx;
        c.top = ((mask >> (k - 1 - idx)) & 1u) ? Top::Upper : Top::Lower;
      }
      visit_(wall_);
    }
  }

  RankD rank_;
  Int max_;
  const WallVisitor& visit_;
  YoungWallD wall_;
  std::vector<Int> parts_;
  std::vector<Int> halfTopped_;
};

}  // namespace

void for_each_wall_with_first(RankD rank, Int maxWeight, Int first, const WallVisitor& visit) {
  if (maxWeight < 0 || first < 0) return;
  WallGenerator(rank, maxWeight, visit).run_from(first);
}

void for_each_wall(RankD rank, Int maxWeight, const WallVisitor& visit) {
  if (maxWeight < 0) return;
  WallGenerator gen(rank, maxWeight, visit);
  for (Int first = 0; first <= maxWeight; ++first) gen.run_from(first);
}

std::vector<YoungWallD> enumerate_walls(RankD rank, Int maxWeight, unsigned threads) {
  if (maxWeight < 0) return {};
  std::vector<std::vector<YoungWallD>> slices(static_cast<std::size_t>(maxWeight) + 1);
  parallel_for(slices.size(), threads, [&](std::size_t first) {
    for_each_wall_with_first(rank, maxWeight, static_cast<Int>(first),
                             [&](const YoungWallD& w) { slices[first].push_back(w); });
  });
  std::vector<YoungWallD> out;
  for (auto& s : slices)
    for (auto& w : s) out.push_back(std::move(w));
  return out;
}

std::string to_text(const YoungWallD& wall) {
  if (wall.columns.empty()) return "-";
  std::string out;
  for (const auto& c : wall.columns) {
    if (!out.empty()) out += ' ';
    out += std::to_string(c.blocks);
    if (c.top) out += *c.top == Top::Lower ? 'L' : 'U';
  }
  return out;
}

}  // namespace ywalls
