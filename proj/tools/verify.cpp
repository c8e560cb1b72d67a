#include "verify.hpp"

#include <atomic>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "ywalls/abacus.hpp"
#include "ywalls/coords.hpp"
#include "ywalls/io.hpp"
#include "ywalls/parallel.hpp"
#include "ywalls/series.hpp"
#include "ywalls/type_a.hpp"
#include "ywalls/young_wall.hpp"

namespace ywalls::cli {

namespace {

std::string join(const std::vector<Int>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + std::to_string(v[i]);
  return "(" + out + ")";
}

CheckOutcome compare(const TruncatedSeries& lhs, const TruncatedSeries& rhs,
                     const std::string& what, const std::string& lhsName,
                     const std::string& rhsName) {
  if (auto diff = first_mismatch(lhs, rhs, lhsName, rhsName)) return {false, what + ": " + *diff};
  return {true, what + ": OK (" + std::to_string(lhs.terms().size()) + " terms)"};
}

std::string shape(const RunConfig& c) {
  return std::string("type ") + (c.type == RootType::A ? "A" : "D") + ", n=" +
         std::to_string(c.rank) + ", N=" + std::to_string(c.maxDegree);
}

template <class Fn>
bool for_each_in_box(int dim, Int radius, Fn&& fn) {
  std::vector<Int> z(static_cast<std::size_t>(dim), -radius);
  for (;;) {
    if (!fn(z)) return false;
    std::size_t i = 0;
    while (i < z.size() && z[i] == radius) z[i++] = -radius;
    if (i == z.size()) return true;
    ++z[i];
  }
}

}  // namespace

std::uint64_t order_seed(std::uint64_t base, std::uint64_t i) {
  // splitmix64 finaliser
  std::uint64_t x = base + 0x9E3779B97F4A7C15ull * (i + 1);
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

CheckOutcome verify_main(const RunConfig& c) {
  if (c.type == RootType::A)
    return compare(type_a::brute_force_euler(c.rank, c.maxDegree, c.coloring),
                   type_a::closed_form_euler(c.rank, c.maxDegree), "main identity, " + shape(c),
                   "brute", "closed");
  const RankD rank(c.rank);
  return compare(brute_force_euler(rank, c.maxDegree, c.threads),
                 closed_form_euler(rank, c.maxDegree), "main identity, " + shape(c), "brute",
                 "closed");
}

CheckOutcome verify_motivic(const RunConfig& c) {
  if (c.type == RootType::A) throw std::invalid_argument("verify motivic is defined for type D only");
  const RankD rank(c.rank);
  return compare(brute_force_motivic_divisor(rank, c.maxDegree, c.threads),
                 motivic_divisor(rank, c.maxDegree), "motivic divisor identity, " + shape(c),
                 "brute", "closed");
}

CheckOutcome verify_specialize(const RunConfig& c) {
  TruncatedSeries euler(c.rank + 1, c.maxDegree);
  std::vector<std::pair<std::string, TruncatedSeries>> forms;
  const MotivicKind kinds[] = {MotivicKind::Full, MotivicKind::Punctual, MotivicKind::Divisor};
  const char* names[] = {"full", "punctual", "divisor"};
  if (c.type == RootType::A) {
    euler = type_a::closed_form_euler(c.rank, c.maxDegree);
    for (int i = 0; i < 3; ++i)
      forms.emplace_back(names[i], type_a::motivic_closed_form(c.rank, c.maxDegree, kinds[i]));
  } else {
    const RankD rank(c.rank);
    euler = closed_form_euler(rank, c.maxDegree);
    forms.emplace_back(names[0], motivic_full(rank, c.maxDegree));
    forms.emplace_back(names[1], motivic_punctual(rank, c.maxDegree));
    forms.emplace_back(names[2], motivic_divisor(rank, c.maxDegree));
  }
  for (const auto& [name, s] : forms) {
    auto r = compare(specialize_L(s, 1), euler, "L=1 specialisation of motivic " + name, "motivic",
                     "euler");
    if (!r.ok) return r;
  }
  return {true, "L=1 specialisations of full, punctual and divisor forms, " + shape(c) + ": OK"};
}

CheckOutcome verify_coords(const RunConfig& c) {
  const RankD rank(c.rank);
  const int n = c.rank;
  std::string failure;
  Int checked = 0;
  auto fail = [&](const std::vector<Int>& z, const std::string& what) {
    failure = "coordinate identities, n=" + std::to_string(n) + ": " + what + " fails at z=" + join(z);
    return false;
  };
  const bool ok = for_each_in_box(n, c.box, [&](const std::vector<Int>& z) {
    ++checked;
    const AbacusConfig core = z_to_core(z, rank);
    if (!is_core(core)) return fail(z, "z_to_core gives a core");
    if (core_to_z(core) != z) return fail(z, "core_to_z(z_to_core(z)) = z");
    const YoungWallD wall = abacus_to_wall(core);
    const MultiWeight wt = core_multiweight(z, rank);
    if (wt != multiweight(wall)) return fail(z, "content formula vs block count");
    if (total(wt) != core_weight_total(z, rank) || total_weight(wall) != total(wt))
      return fail(z, "total weight formula");
    const MCoords m = z_to_m(z, rank);
    if (m_to_z(m, rank) != z) return fail(z, "m_to_z(z_to_m(z)) = z");
    if (theta_exponents(m, rank) != wt) return fail(z, "change of coordinates");
    const ZDecomposition T = interval_decompose(z, 1, n - 2);
    Int lhs = 0, rhs = 0;
    for (Int v : m) lhs += v;
    for (int i = 1; i <= n - 2; ++i) rhs -= (n - 1 - i) * z[static_cast<std::size_t>(i - 1)];
    rhs -= (n - 1) * T.c * (z[static_cast<std::size_t>(n - 2)] + z[static_cast<std::size_t>(n - 1)]);
    rhs -= (n - 1) * T.b;
    if (lhs != rhs) return fail(z, "sum of m-coordinates");
    for (int i = 1; i <= n - 2; ++i) {
      const ZDecomposition head = interval_decompose(z, 1, i);
      const ZDecomposition tail = interval_decompose(z, i + 1, n - 2);
      Int prefix = 0;
      for (int j = 1; j <= i; ++j) prefix += z[static_cast<std::size_t>(j - 1)];
      if (2 * head.a - head.c * tail.b != prefix + T.b) return fail(z, "a/b/c prefix identity");
    }
    Int bb = 0;
    for (int i = 2; i <= n - 2; ++i)
      bb += interval_decompose(z, 1, i - 1).b * interval_decompose(z, i, i).b;
    if (bb != -r_prefix(z, n - 2)) return fail(z, "r identity");
    return true;
  });
  if (!ok) return {false, failure};
  return {true, "coordinate identities, n=" + std::to_string(n) + ", box [-" + std::to_string(c.box) +
                    "," + std::to_string(c.box) + "]: OK (" + std::to_string(checked) + " points)"};
}

CheckOutcome verify_confluence(const RunConfig& c) {
  const RankD rank(c.rank);
  const auto walls = enumerate_walls(rank, c.maxDegree, c.threads);
  std::mutex mutex;
  std::size_t firstBad = walls.size();
  std::string detail;
  parallel_for(walls.size(), c.threads, [&](std::size_t w) {
    const AbacusConfig a = wall_to_abacus(walls[w]);
    const CoreResult ref = compute_core(a);
    for (int i = 0; i < c.orders; ++i) {
      const std::uint64_t seed = order_seed(c.seed, static_cast<std::uint64_t>(i));
      const CoreResult r = compute_core_random(a, seed);
      if (r.core != ref.core || r.barsRemoved != ref.barsRemoved) {
        std::lock_guard lock(mutex);
        if (w < firstBad) {
          firstBad = w;
          detail = "wall " + to_text(walls[w]) + " with order seed " + std::to_string(seed);
        }
        return;
      }
    }
  });
  const std::string what = "core confluence, n=" + std::to_string(c.rank) +
                           ", N=" + std::to_string(c.maxDegree) + ", " + std::to_string(c.orders) +
                           " orders";
  if (firstBad != walls.size()) return {false, what + ": different core for " + detail};
  return {true, what + ": OK (" + std::to_string(walls.size()) + " walls)"};
}

CheckOutcome verify_fibers(const RunConfig& c) {
  const RankD rank(c.rank);
  const Int P = rank.period();
  const Int N = c.maxDegree;
  // tuples[k]: (n+1)-tuples of partitions of total size k.
  std::vector<Int> partitions(static_cast<std::size_t>(N / P) + 1, 0);
  partitions[0] = 1;
  for (Int part = 1; part < static_cast<Int>(partitions.size()); ++part)
    for (std::size_t k = static_cast<std::size_t>(part); k < partitions.size(); ++k)
      partitions[k] += partitions[k - static_cast<std::size_t>(part)];
  std::vector<Int> tuples(partitions.size(), 0);
  tuples[0] = 1;
  for (int f = 0; f < c.rank + 1; ++f) {
    std::vector<Int> next(tuples.size(), 0);
    for (std::size_t i = 0; i < tuples.size(); ++i)
      for (std::size_t j = 0; i + j < tuples.size(); ++j) next[i + j] += tuples[i] * partitions[j];
    tuples = next;
  }

  std::map<std::string, std::vector<Int>> fibers;  // core JSON -> walls per bar count
  std::map<std::string, Int> coreWeight;
  for (const auto& w : enumerate_walls(rank, N, c.threads)) {
    const CoreResult r = compute_core(wall_to_abacus(w));
    const std::string key = abacus_to_json(r.core);
    auto& counts = fibers[key];
    coreWeight[key] = abacus_weight(r.core);
    if (counts.size() <= static_cast<std::size_t>(r.barsRemoved))
      counts.resize(static_cast<std::size_t>(r.barsRemoved) + 1, 0);
    ++counts[static_cast<std::size_t>(r.barsRemoved)];
  }
  for (const auto& [key, counts] : fibers) {
    const Int base = coreWeight[key];
    for (Int k = 0; base + k * P <= N; ++k) {
      const Int got = static_cast<std::size_t>(k) < counts.size() ? counts[static_cast<std::size_t>(k)] : 0;
      if (got != tuples[static_cast<std::size_t>(k)])
        return {false, "fiber count for core " + key + " with " + std::to_string(k) + " bars: walls=" +
                           std::to_string(got) + " tuples=" + std::to_string(tuples[static_cast<std::size_t>(k)])};
    }
  }
  return {true, "fiber counts, n=" + std::to_string(c.rank) + ", N=" + std::to_string(N) + ": OK (" +
                    std::to_string(fibers.size()) + " cores)"};
}

}  // namespace ywalls::cli
