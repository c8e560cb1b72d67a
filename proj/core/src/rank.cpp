#include "ywalls/rank.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

namespace ywalls {

Int total(const MultiWeight& wt) { return std::accumulate(wt.begin(), wt.end(), Int{0}); }

RankD::RankD(int n) : n_(n) {
  if (n < 4) throw std::invalid_argument("rank of D_n must be >= 4, got " + std::to_string(n));
}

MultiWeight bar_weight(RankD rank) {
  MultiWeight wt(static_cast<std::size_t>(rank.n()) + 1, 2);
  wt[0] = wt[1] = 1;
  wt[rank.n() - 1] = wt[rank.n()] = 1;
  return wt;
}

}  // namespace ywalls
