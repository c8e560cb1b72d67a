#pragma once

#include <cstdint>
#include <vector>

namespace ywalls {

using Int = std::int64_t;

// Per-label counts, index j = label j (q_0 .. q_n).
using MultiWeight = std::vector<Int>;

Int total(const MultiWeight& wt);

// Rank of the root system D_n. Construction rejects n < 4.
class RankD {
 public:
  explicit RankD(int n);

  int n() const noexcept { return n_; }
  // Half-units in one vertical period of the pattern; also the size of a bar.
  Int period() const noexcept { return 2 * Int{n_} - 2; }
  // Heights divisible by this end in a single half-block.
  Int step() const noexcept { return Int{n_} - 1; }

  friend bool operator==(RankD, RankD) = default;

 private:
  int n_;
};

// Multiweight of one bar: (1,1,2,...,2,1,1).
MultiWeight bar_weight(RankD rank);

}  // namespace ywalls
