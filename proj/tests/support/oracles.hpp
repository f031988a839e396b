#pragma once

// Independent reference implementations used to check the library. They are
// deliberately naive and share no code with src/ beyond the Rational type.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nmfr/matrix.hpp"
#include "nmfr/patterns.hpp"

namespace oracle {

using nmfr::Rational;
using Vec = std::vector<Rational>;
using Columns = std::vector<Vec>;

// Rank by plain Gaussian elimination with a fresh implementation.
std::size_t rank_of(Columns columns);

// Largest k such that every k-subset of columns is independent, checking
// every subset (columns.size() <= 20).
std::size_t kruskal_rank(const Columns& columns);

// Conic Caratheodory: v is in cone(G) iff it is a nonnegative combination of
// a linearly independent subset of G. Only for ambient dimension 3.
bool cone_member_r3(const Columns& generators, const Vec& v);

// Dual-cone generators straight from the definition: for each zero A(i,j)
// the r x r matrix with column j equal to row i of A; for each zero B(i,j)
// the matrix with row i equal to minus column j of B. Row-major, A first.
Columns dual_generators(const nmfr::RationalMatrix& a, const nmfr::RationalMatrix& b);

// sum_g lambda_g g == 0 and every lambda_g >= 1.
bool positive_zero_combination(const Columns& generators, const Vec& lambda);

// Orbit representatives of all placements of `zeros` zeros in an m x r / r x n
// pattern passing `keep`, deduplicated by the full group action (row, column
// and inner permutations, and the swap when m == n). Tiny sizes only.
template <class Keep>
std::vector<std::vector<std::uint8_t>> brute_force_orbits(std::size_t m, std::size_t n, std::size_t r,
                                                          std::size_t zeros, Keep keep);

// Least flattened encoding (A row-major then B row-major) over the whole group.
std::vector<std::uint8_t> brute_canonical(const nmfr::ZeroPattern& p);

// For r = 2 the only tangent directions of the orthogonal group are
// D = [[0, d], [-d, 0]]. A factor is rigid iff no sampled d != 0 keeps every
// zero of A nonnegative to first order: d_j^T a_i >= 0 for each zero (i, j).
bool cp_rank2_rigid_by_sampling(const nmfr::RationalMatrix& a);

}  // namespace oracle

#include "oracles_impl.hpp"
