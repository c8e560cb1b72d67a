#include "ywalls/coords.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace ywalls {

ZDecomposition z_decompose(Int zI) {
  const int b = static_cast<int>(((zI % 2) + 2) % 2);
  return {(zI + b) / 2, b, 2 * b - 1};
}

ZDecomposition interval_decompose(const CoreCoords& z, int first, int last) {
  Int sum = 0;
  for (int i = first; i <= last; ++i) sum += z.at(static_cast<std::size_t>(i - 1));
  return z_decompose(sum);
}

Int r_prefix(const CoreCoords& z, int i) {
  Int sumA = 0;
  for (int j = 1; j <= i; ++j) sumA += z_decompose(z.at(static_cast<std::size_t>(j - 1))).a;
  return interval_decompose(z, 1, i).a - sumA;
}

namespace {

void check_size(const std::vector<Int>& v, RankD rank, const char* what) {
  if (v.size() != static_cast<std::size_t>(rank.n()))
    throw std::invalid_argument(std::string(what) + ": expected " + std::to_string(rank.n()) +
                                " coordinates, got " + std::to_string(v.size()));
}

// Coloured-ruler coordinates are stored as k = 2z (z >= 0) or -2z-1 (z < 0).
Int z_to_k(Int z) { return z >= 0 ? 2 * z : -2 * z - 1; }
Int k_to_z(Int k) { return k % 2 == 0 ? k / 2 : -(k + 1) / 2; }

}  // namespace

// Coloured part of a core, in units j = position/(n-1): beads at j = 1..r
// (odd j coloured c1, even j white) followed by t beads at r+2, r+4, ...,
// r+2t whose colours alternate, starting opposite to the colour at j = r
// (white when r = 0).
CoreCoords core_to_z(const AbacusConfig& core) {
  if (!is_core(core)) throw std::invalid_argument("core_to_z: configuration is not a core");
  const RankD rank = core.rank;
  const int n = rank.n();
  const Int P = rank.period();
  const Int h = rank.step();
  CoreCoords z(static_cast<std::size_t>(n), 0);
  for (Int p : core.uncolored) {
    const int k = ruler_of(rank, p);
    if (k <= n - 2)
      ++z[static_cast<std::size_t>(k - 1)];
    else
      --z[static_cast<std::size_t>(P - k - 1)];
  }

  auto fail = [] { throw std::logic_error("core_to_z: unexpected coloured core shape"); };
  auto color_at = [&](Int j) {
    auto it = core.colored.find(j * h);
    if (it == core.colored.end() || it->second.mult != 1) fail();
    return it->second.color;
  };
  Int r = 0;
  while (core.colored.contains((r + 1) * h)) ++r;
  const BeadColor c1 = r > 0 ? color_at(1) : BeadColor::White;
  for (Int j = 1; j <= r; ++j)
    if (color_at(j) != (j % 2 == 1 ? c1 : BeadColor::White)) fail();
  BeadColor last = r == 0 ? BeadColor::White : (r % 2 == 1 ? c1 : BeadColor::White);
  const Int t = static_cast<Int>(core.colored.size()) - r;
  for (Int i = 1; i <= t; ++i) {
    last = flip(last);
    if (color_at(r + 2 * i) != last) fail();
  }
  Int kx = t, ky = t;
  if (r > 0) (c1 == BeadColor::White ? kx : ky) += r;
  z[static_cast<std::size_t>(n - 2)] = k_to_z(kx);
  z[static_cast<std::size_t>(n - 1)] = k_to_z(ky);
  return z;
}

AbacusConfig z_to_core(const CoreCoords& z, RankD rank) {
  check_size(z, rank, "z_to_core");
  const int n = rank.n();
  const Int P = rank.period();
  const Int h = rank.step();
  AbacusConfig a(rank);
  for (int s = 1; s <= n - 2; ++s) {
    const Int zs = z[static_cast<std::size_t>(s - 1)];
    const Int base = zs > 0 ? s : P - s;
    for (Int i = 0; i < (zs > 0 ? zs : -zs); ++i) a.uncolored.insert(base + i * P);
  }
  const Int kx = z_to_k(z[static_cast<std::size_t>(n - 2)]);
  const Int ky = z_to_k(z[static_cast<std::size_t>(n - 1)]);
  const Int t = std::min(kx, ky);
  const Int r = kx > ky ? kx - ky : ky - kx;
  const BeadColor c1 = kx > ky ? BeadColor::White : BeadColor::Black;
  BeadColor last = BeadColor::White;
  for (Int j = 1; j <= r; ++j) {
    last = j % 2 == 1 ? c1 : BeadColor::White;
    a.colored[j * h] = {last, 1};
  }
  for (Int i = 1; i <= t; ++i) {
    last = flip(last);
    a.colored[(r + 2 * i) * h] = {last, 1};
  }
  return a;
}

Int core_weight_total(const CoreCoords& z, RankD rank) {
  check_size(z, rank, "core_weight_total");
  const Int n = rank.n();
  Int twice = 0;
  for (Int i = 1; i <= n - 2; ++i) {
    const Int zi = z[static_cast<std::size_t>(i - 1)];
    twice += (2 * n - 2) * zi * zi - (2 * n - 2 * i - 2) * zi;
  }
  Int sum = twice / 2;
  for (Int i = n - 1; i <= n; ++i) {
    const Int zi = z[static_cast<std::size_t>(i - 1)];
    sum += (n - 1) * (2 * zi * zi + zi);
  }
  return sum;
}

MultiWeight core_multiweight(const CoreCoords& z, RankD rank) {
  check_size(z, rank, "core_multiweight");
  const int n = rank.n();
  const auto at = [&](int i) { return z[static_cast<std::size_t>(i - 1)]; };
  MultiWeight e(static_cast<std::size_t>(n) + 1, 0);
  const auto ex = [&](int k) -> Int& { return e[static_cast<std::size_t>(k)]; };

  std::vector<ZDecomposition> d;
  for (int i = 1; i <= n - 2; ++i) d.push_back(z_decompose(at(i)));
  const ZDecomposition T = interval_decompose(z, 1, n - 2);
  const Int x = at(n - 1), y = at(n);

  // Uncoloured rulers, taken one at a time.
  for (int k = 1; k <= n - 2; ++k) {
    for (int i = 1; i < k; ++i) ex(k) -= 2 * d[static_cast<std::size_t>(i - 1)].a;
    for (int i = k; i <= n - 2; ++i) ex(k) -= d[static_cast<std::size_t>(i - 1)].b;
  }
  Int sumA = 0, twiceQ = 0;
  for (int i = 1; i <= n - 2; ++i) {
    sumA += d[static_cast<std::size_t>(i - 1)].a;
    twiceQ += at(i) * at(i) + d[static_cast<std::size_t>(i - 1)].b;
  }
  ex(0) -= sumA;
  ex(1) += sumA;
  ex(n - 1) -= sumA;
  ex(n) -= sumA;
  // Interaction between uncoloured rulers: blocks of the bottom row swap 0 <-> 1.
  ex(0) += T.a;
  ex(1) -= T.a;

  const Int bars = twiceQ / 2 + x * x + y * y + T.b * (x + y);
  const MultiWeight bar = bar_weight(rank);
  for (std::size_t j = 0; j < e.size(); ++j) e[j] += bar[j] * bars;
  for (int k = 1; k <= n - 2; ++k) ex(k) -= T.c * (x + y);
  ex(n - 1) -= T.c * x;
  ex(n) -= T.c * y;

  if (std::any_of(e.begin(), e.end(), [](Int v) { return v < 0; }))
    throw std::logic_error("core_multiweight: negative exponent");
  return e;
}

MCoords z_to_m(const CoreCoords& z, RankD rank) {
  check_size(z, rank, "z_to_m");
  const int n = rank.n();
  const ZDecomposition T = interval_decompose(z, 1, n - 2);
  const Int x = z[static_cast<std::size_t>(n - 2)];
  const Int y = z[static_cast<std::size_t>(n - 1)];
  MCoords m;
  m.push_back(-T.b - T.c * (x + y));
  for (int i = 2; i <= n - 2; ++i) {
    const ZDecomposition head = interval_decompose(z, 1, i - 1);
    const ZDecomposition tail = interval_decompose(z, i, n - 2);
    m.push_back(-2 * head.a + head.c * tail.b - T.c * (x + y));
  }
  m.push_back(-T.a - T.c * x);
  m.push_back(-T.a - T.c * y);
  return m;
}

CoreCoords m_to_z(const MCoords& m, RankD rank) {
  check_size(m, rank, "m_to_z");
  const int n = rank.n();
  const auto at = [&](int i) { return m[static_cast<std::size_t>(i - 1)]; };
  const Int zT = at(1) - at(n - 1) - at(n);
  const ZDecomposition T = z_decompose(zT);
  const Int sum = -T.c * (at(1) + T.b);
  const Int diff = -T.c * (at(n - 1) - at(n));
  // prefix[i] = z_1 + ... + z_i
  std::vector<Int> prefix(static_cast<std::size_t>(n - 1), 0);
  for (int i = 2; i <= n - 2; ++i)
    prefix[static_cast<std::size_t>(i - 1)] = -(at(i) + T.c * sum) - T.b;
  prefix[static_cast<std::size_t>(n - 2)] = zT;
  CoreCoords z;
  for (int i = 1; i <= n - 2; ++i)
    z.push_back(prefix[static_cast<std::size_t>(i)] - prefix[static_cast<std::size_t>(i - 1)]);
  z.push_back((sum + diff) / 2);
  z.push_back((sum - diff) / 2);
  return z;
}

CartanD cartan_d(RankD rank) {
  const int n = rank.n();
  CartanD c{n, std::vector<std::vector<int>>(static_cast<std::size_t>(n),
                                             std::vector<int>(static_cast<std::size_t>(n), 0))};
  auto link = [&](int i, int j) {
    c.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = -1;
    c.matrix[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = -1;
  };
  for (int i = 0; i < n; ++i) c.matrix[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 2;
  for (int i = 0; i + 1 <= n - 3; ++i) link(i, i + 1);
  link(n - 3, n - 2);
  link(n - 3, n - 1);
  return c;
}

Int cartan_quadratic(const MCoords& m, RankD rank) {
  check_size(m, rank, "cartan_quadratic");
  const std::size_t n = m.size();
  Int q = 0;
  for (Int v : m) q += v * v;
  for (std::size_t i = 0; i + 1 <= n - 3; ++i) q -= m[i] * m[i + 1];
  q -= m[n - 3] * (m[n - 2] + m[n - 1]);
  return q;
}

MultiWeight theta_exponents(const MCoords& m, RankD rank) {
  const Int Q = cartan_quadratic(m, rank);
  const std::size_t n = m.size();
  MultiWeight e(n + 1);
  e[0] = Q;
  for (std::size_t i = 1; i <= n; ++i) e[i] = m[i - 1] + (i == 1 || i >= n - 1 ? Q : 2 * Q);
  return e;
}

}  // namespace ywalls
