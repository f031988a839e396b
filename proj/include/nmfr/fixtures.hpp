#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "nmfr/patterns.hpp"
#include "nmfr/rigidity.hpp"

namespace nmfr {

// The 15 reference 5 x 5 factorizations of rank 4 with 13 zeros, each stored
// with its expected product.
struct Fixture {
  std::size_t index;  // 1-based
  RationalMatrix m;
  RationalMatrix a;
  RationalMatrix b;
};

const std::vector<Fixture>& reference_fixtures();

struct FixtureCheck {
  std::size_t index = 0;
  bool product_matches = false;
  std::vector<std::string> product_diffs;  // "(i,j): expected x, got y"
  Classification classification = Classification::Undetermined;
  std::size_t dim_w = 0;
  std::optional<std::size_t> kruskal_rank;
  bool passed = false;
};

// Exact AB == M, InfinitesimallyRigid, dim W = 4 and Kruskal rank 12.
FixtureCheck verify_fixture(const Fixture& fixture);

// Small worked examples used by tests, the acceptance suite and the CLI.
namespace examples {

// A = B = J - I for r = 3: not on the boundary, W has dimension 4.
FactorizationPair triangles();
// An infinitesimally rigid 4 x 3 pair and a rank 4 partially rigid lift of it.
FactorizationPair partial_rigid_input();
FactorizationPair partial_rigid_lift();
// The unique rank 3 pattern with seven zeros, on the given shape
// (m >= 4, n >= 3); the remaining rows and columns are zero free.
ZeroPattern rank3_pattern(std::size_t m, std::size_t n);
// A 6 x 5 pattern with 13 zeros passing every condition except the
// zero-rectangle inequality.
ZeroPattern rectangle_violator_6x5();
// A 12-zero pattern (5 x 4 A, 4 x 7 B) of a locally rigid factorization that
// is not infinitesimally rigid.
ZeroPattern twelve_zero_pattern();

}  // namespace examples

}  // namespace nmfr
