#ifndef YWALLS_COORDS_HPP
#define YWALLS_COORDS_HPP

#include <vector>

#include "ywalls/abacus.hpp"
#include "ywalls/rank.hpp"

namespace ywalls {

// z_1..z_n; z_{n-1}, z_n describe the coloured rulers.
using CoreCoords = std::vector<Int>;
// m_1..m_n.
using MCoords = std::vector<Int>;

struct ZDecomposition {
  Int a;
  int b;  // 0 or 1
  int c;  // 2b - 1
  friend bool operator==(const ZDecomposition&, const ZDecomposition&) = default;
};

/// The unique zI = 2a - b with b in {0,1}.
ZDecomposition z_decompose(Int zI);

/// Decomposition of z_first + ... + z_last (1-based, inclusive); an empty
/// range decomposes 0.
ZDecomposition interval_decompose(const CoreCoords& z, int first, int last);

/// r_{1..i} = a_{1..i} - (a_1 + ... + a_i).
Int r_prefix(const CoreCoords& z, int i);

/// Throws std::invalid_argument unless `core` is a core.
CoreCoords core_to_z(const AbacusConfig& core);
AbacusConfig z_to_core(const CoreCoords& z, RankD rank);

/// |Y| of the core with coordinates z, from the closed formula.
Int core_weight_total(const CoreCoords& z, RankD rank);

/// Multiweight of the core with coordinates z, from the content formula in
/// terms of the a/b/c decompositions.
MultiWeight core_multiweight(const CoreCoords& z, RankD rank);

MCoords z_to_m(const CoreCoords& z, RankD rank);
CoreCoords m_to_z(const MCoords& m, RankD rank);

struct CartanD {
  int n;
  std::vector<std::vector<int>> matrix;
};

CartanD cartan_d(RankD rank);

/// (1/2) m^T C m for the D_n Cartan matrix.
Int cartan_quadratic(const MCoords& m, RankD rank);

/// Exponents of q_1^{m_1}...q_n^{m_n} q^{Q(m)} in q_0..q_n.
MultiWeight theta_exponents(const MCoords& m, RankD rank);

}  // namespace ywalls

#endif
