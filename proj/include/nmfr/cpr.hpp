#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "nmfr/matrix.hpp"
#include "nmfr/rigidity.hpp"

namespace nmfr {

// Nonnegative n x r factor A of M = A A^T with rank r. The constructor
// rejects negative entries and rank deficiency with InputError.
class SymmetricFactor {
 public:
  explicit SymmetricFactor(RationalMatrix a);

  const RationalMatrix& a() const { return a_; }
  std::size_t n() const { return a_.rows(); }
  std::size_t r() const { return a_.cols(); }
  RationalMatrix product() const { return matmul(a_, a_.transpose()); }

  friend bool operator==(const SymmetricFactor&, const SymmetricFactor&) = default;

 private:
  RationalMatrix a_;
};

// Skew coordinates: pairs (k, l), k < l, in row-major order.
std::size_t skew_dimension(std::size_t r);
std::size_t skew_index(std::size_t r, std::size_t k, std::size_t l);

// One generator per zero A(i, j): the functional D -> d_j^T a_i on skew D.
struct SkewGenerators {
  std::size_t r = 0;
  std::vector<RationalVector> vectors;
  std::vector<GeneratorSource> sources;  // side is always A

  std::size_t count() const { return vectors.size(); }
  ConeByGenerators cone() const { return {skew_dimension(r), vectors}; }
  RationalMatrix matrix() const { return RationalMatrix::from_columns(skew_dimension(r), vectors); }
};

SkewGenerators build_skew_generators(const SymmetricFactor& f);

// Same record as the nonsymmetric case. There are no trivial deformations, so
// dim_w = r(r-1)/2 - lineality_dim and the classification is
// InfinitesimallyRigid (W_A = 0) or Undetermined. v_basis stays empty.
RigidityCertificate certify_cp(const SymmetricFactor& f, const CertifyOptions& options = {});

ConditionReport cp_necessary_conditions(const SymmetricFactor& f);

// bound = min(c, r(r-1)/2).
KruskalReport cp_kruskal_criterion(const SymmetricFactor& f, std::size_t budget = kDefaultKruskalBudget);

// Zero pattern of a symmetric factor: one r-bit mask per row of A, with the
// same bit convention as ZeroPattern (inner index k is bit r-1-k).
struct SymmetricPattern {
  std::size_t n = 0;
  std::size_t r = 0;
  std::vector<std::uint64_t> rows;

  std::size_t zero_count() const;
  friend auto operator<=>(const SymmetricPattern&, const SymmetricPattern&) = default;
};

SymmetricPattern symmetric_pattern(const SymmetricFactor& f);

// Least sorted row list over all column permutations.
SymmetricPattern canonical_form(const SymmetricPattern& p);

// At least (r^2-r)/2 + 1 zeros and, for each ordered pair i != j, a row zero
// at i and not at j.
bool check_swpoint(const SymmetricPattern& p);

// All canonical patterns with n rows, r columns and `zeros` zeros (no row of
// A entirely zero), optionally restricted to those passing check_swpoint.
std::vector<SymmetricPattern> enumerate_symmetric_patterns(std::size_t n, std::size_t r, std::size_t zeros,
                                                           bool require_swpoint);

}  // namespace nmfr
