#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

#include "nmfr/execution.hpp"
#include "nmfr/patterns.hpp"
#include "nmfr/rigidity.hpp"

namespace nmfr {

struct RealizationSearchConfig {
  std::int64_t entry_low = 1;  // inclusive range for the nonzero entries
  std::int64_t entry_high = 1000;
  std::size_t max_samples = 10'000;
  std::uint64_t seed = 0;
};

struct Realization {
  FactorizationPair pair;
  std::size_t sample_index;  // 0-based index of the accepted sample
  RigidityCertificate certificate;
};

// The pair drawn for `index`: zeros on the pattern, independent uniform
// integers in [entry_low, entry_high] elsewhere. Depends only on
// (pattern shape, cfg range, seed, index). Throws InputError if the sample is
// rank deficient.
FactorizationPair sample_realization(const ZeroPattern& p, const RealizationSearchConfig& cfg, std::size_t index);

// Draws samples 0, 1, ... and returns the first (in index order) that
// certifies InfinitesimallyRigid, or nullopt after max_samples. The parallel
// path returns the same sample as the serial one. Rank-deficient samples count
// as failures. Requires check_wpoint(p).
std::optional<Realization> realize_pattern(const ZeroPattern& p, const RealizationSearchConfig& cfg,
                                           Execution exec = Execution::Parallel);

// Appends r rows e_i + delta(1 - e_i) to A and r columns e_j + delta 1 to B.
// No zeros are added, so the certificate of the zero pattern is unchanged.
// Global rigidity of the result is not asserted: that needs delta small
// enough, with no effective bound.
FactorizationPair extend_positive(const FactorizationPair& f, const Rational& delta);

class LiftError : public std::runtime_error {
 public:
  explicit LiftError(const std::string& what) : std::runtime_error(what) {}
};

struct Lift {
  FactorizationPair pair;
  RationalVector new_column;  // appended column of A'
  RationalVector target;      // the interior point w of cone(columns of B) used
  std::size_t attempt = 0;    // 0 for the default w, k for the k-th retry
  RigidityCertificate certificate;
};

// Rank r -> r + 1 construction of a partially infinitesimally rigid pair from
// an infinitesimally rigid one: a positive column x is appended to A, and B
// gets a zero row followed by an all-ones column. x solves
//   sum_j sum_{i zero in row j} c_{i,j} x_j e_i = s w,  x >= 1, s >= 1
// where c are the A-zero coefficients of the relative-interior witness.
// w is the column sum of B, then the weighted sums with weights
// ((j + k) mod r) + 1 for k = 1..r. Throws PreconditionError (naming the
// actual classification) unless f is InfinitesimallyRigid, and LiftError when
// no attempt gives a partially rigid pair.
Lift lift_partially_rigid(const FactorizationPair& f);

}  // namespace nmfr
