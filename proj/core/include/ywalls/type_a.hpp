#ifndef YWALLS_TYPE_A_HPP
#define YWALLS_TYPE_A_HPP

#include <functional>
#include <vector>

#include "ywalls/rank.hpp"
#include "ywalls/series.hpp"

namespace ywalls::type_a {

// Colour of cell (row i, column j), 1-indexed, modulo n+1.
enum class Coloring { ColumnMinusRow, RowMinusColumn };

struct ColoredPartition {
  int rank;                // n >= 1; colours 0..n
  std::vector<Int> parts;  // weakly decreasing, positive
};

/// Throws std::invalid_argument for rank < 1 or a malformed partition.
MultiWeight color_multiweight(const ColoredPartition& p,
                              Coloring coloring = Coloring::ColumnMinusRow);

/// Visits all partitions of size <= maxSize: lexicographic on parts.
void for_each_partition(Int maxSize, const std::function<void(const std::vector<Int>&)>& visit);

/// sum m_i^2 - sum m_i m_{i+1}.
Int cartan_quadratic(const std::vector<Int>& m);

/// q = q_0 q_1 ... q_n.
Monomial bar_monomial(int n);

TruncatedSeries theta_sum(int n, Int bound, int extraShell = 0);
TruncatedSeries closed_form_euler(int n, Int bound);
TruncatedSeries brute_force_euler(int n, Int bound,
                                  Coloring coloring = Coloring::ColumnMinusRow);
TruncatedSeries motivic_closed_form(int n, Int bound, MotivicKind kind);

}  // namespace ywalls::type_a

#endif
