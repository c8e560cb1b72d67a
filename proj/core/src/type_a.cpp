#include "ywalls/type_a.hpp"

#include <algorithm>
#include <stdexcept>

namespace ywalls::type_a {

namespace {

void check_rank(int n) {
  if (n < 1) throw std::invalid_argument("type A rank must be >= 1");
}

}  // namespace

MultiWeight color_multiweight(const ColoredPartition& p, Coloring coloring) {
  check_rank(p.rank);
  const Int colors = p.rank + 1;
  MultiWeight wt(static_cast<std::size_t>(colors), 0);
  for (std::size_t k = 0; k < p.parts.size(); ++k) {
    const Int len = p.parts[k];
    if (len < 1 || (k > 0 && len > p.parts[k - 1]))
      throw std::invalid_argument("color_multiweight: parts must be positive and weakly decreasing");
    const Int i = static_cast<Int>(k) + 1;
    for (Int j = 1; j <= len; ++j) {
      const Int d = coloring == Coloring::ColumnMinusRow ? j - i : i - j;
      ++wt[static_cast<std::size_t>(((d % colors) + colors) % colors)];
    }
  }
  return wt;
}

void for_each_partition(Int maxSize, const std::function<void(const std::vector<Int>&)>& visit) {
  if (maxSize < 0) return;
  std::vector<Int> parts;
  auto descend = [&](auto&& self, Int remaining) -> void {
    visit(parts);
    const Int limit = parts.empty() ? remaining : std::min(parts.back(), remaining);
    for (Int p = 1; p <= limit; ++p) {
      parts.push_back(p);
      self(self, remaining - p);
      parts.pop_back();
    }
  };
  descend(descend, maxSize);
}

Int cartan_quadratic(const std::vector<Int>& m) {
  Int q = 0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    q += m[i] * m[i];
    if (i + 1 < m.size()) q -= m[i] * m[i + 1];
  }
  return q;
}

Monomial bar_monomial(int n) {
  check_rank(n);
  return Monomial{std::vector<Int>(static_cast<std::size_t>(n) + 1, 1), 0};
}

TruncatedSeries theta_sum(int n, Int bound, int extraShell) {
  check_rank(n);
  LatticeSpec spec{n, n + 1, Rational(n + 1, 2) * sin_squared_lower_bound(2 * n + 2),
                   [](const std::vector<Int>& m) {
                     const Int Q = cartan_quadratic(m);
                     std::vector<Int> e{Q};
                     for (Int v : m) e.push_back(v + Q);
                     return e;
                   }};
  return lattice_sum(spec, bound, extraShell);
}

TruncatedSeries closed_form_euler(int n, Int bound) {
  return lefschetz_product(bar_monomial(n), bound, 0, n + 1, false) * theta_sum(n, bound);
}

TruncatedSeries brute_force_euler(int n, Int bound, Coloring coloring) {
  check_rank(n);
  TruncatedSeries out(n + 1, bound);
  ColoredPartition p{n, {}};
  for_each_partition(bound, [&](const std::vector<Int>& parts) {
    p.parts = parts;
    out.add_term(Monomial{color_multiweight(p, coloring), 0}, 1);
  });
  return out;
}

TruncatedSeries motivic_closed_form(int n, Int bound, MotivicKind kind) {
  return ywalls::motivic_closed_form(bar_monomial(n), theta_sum(n, bound), kind);
}

}  // namespace ywalls::type_a
