#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nmfr/cone.hpp"
#include "nmfr/execution.hpp"
#include "nmfr/matrix.hpp"
#include "nmfr/patterns.hpp"

namespace nmfr {

// A rank-r nonnegative factorization (A: m x r, B: r x n). The constructor
// rejects negative entries and rank deficiency with InputError.
class FactorizationPair {
 public:
  FactorizationPair(RationalMatrix a, RationalMatrix b);

  const RationalMatrix& a() const { return a_; }
  const RationalMatrix& b() const { return b_; }
  std::size_t m() const { return a_.rows(); }
  std::size_t n() const { return b_.cols(); }
  std::size_t r() const { return a_.cols(); }

  RationalMatrix product() const { return matmul(a_, b_); }
  ZeroPattern zero_pattern() const;

  friend bool operator==(const FactorizationPair&, const FactorizationPair&) = default;

 private:
  RationalMatrix a_;
  RationalMatrix b_;
};

enum class ZeroSide { A, B };

struct GeneratorSource {
  ZeroSide side = ZeroSide::A;
  std::size_t row = 0;  // 0-based position of the zero in A or B
  std::size_t col = 0;
  friend bool operator==(const GeneratorSource&, const GeneratorSource&) = default;
};

// Generators of the dual deformation cone, one per zero of (A, B). Each
// vector is an r x r matrix vectorized row-major (entry (k, l) at k*r + l):
// A-zero(i, j) gives a_i e_j^T, B-zero(i, j) gives -e_i b_j^T.
struct DualConeGenerators {
  std::size_t r = 0;
  std::vector<RationalVector> vectors;
  std::vector<GeneratorSource> sources;

  std::size_t count() const { return vectors.size(); }
  ConeByGenerators cone() const { return {r * r, vectors}; }
  RationalMatrix matrix() const { return RationalMatrix::from_columns(r * r, vectors); }
};

DualConeGenerators build_dual_generators(const FactorizationPair& f);

enum class Classification { InfinitesimallyRigid, PartiallyInfinitesimallyRigid, InteriorCertified, Undetermined };

std::string to_string(Classification c);
std::optional<Classification> classification_from_string(const std::string& s);

inline constexpr std::size_t kDefaultKruskalBudget = 1'000'000;

struct CertifyOptions {
  // Subset rank tests allowed for the Kruskal rank; nullopt skips it.
  std::optional<std::size_t> kruskal_budget = kDefaultKruskalBudget;
  Execution execution = Execution::Parallel;
};

struct RigidityCertificate {
  std::size_t r = 0;
  std::size_t generator_count = 0;
  std::size_t span_rank = 0;
  std::size_t lineality_dim = 0;
  std::optional<PositiveCombinationWitness> relint_witness;
  std::size_t dim_w = 0;  // r^2 - lineality_dim
  Classification classification = Classification::Undetermined;
  // Zero-diagonal slice of W when W is a linear space, as r x r matrices.
  std::vector<RationalMatrix> v_basis;
  // Entries (0-based) on which some V-basis element is nonzero.
  std::vector<std::pair<std::size_t, std::size_t>> v_support;
  std::optional<std::size_t> kruskal_rank;

  friend bool operator==(const RigidityCertificate&, const RigidityCertificate&) = default;
};

RigidityCertificate certify(const FactorizationPair& f, const CertifyOptions& options = {});

std::size_t dim_w(const FactorizationPair& f);

// Largest k such that every k generators are linearly independent, found by
// testing subset sizes from min(c, rank) downward. Returns nullopt when the
// subsets needed exceed `budget`.
std::optional<std::size_t> kruskal_rank(const RationalMatrix& columns, std::size_t budget,
                                        Execution exec = Execution::Parallel);
std::optional<std::size_t> kruskal_rank(const DualConeGenerators& z, std::size_t budget,
                                        Execution exec = Execution::Parallel);

struct KruskalReport {
  std::size_t generator_count = 0;
  std::size_t bound = 0;  // min(c, dim), with min(0, .) = 0
  std::optional<std::size_t> kruskal_rank;
  bool holds = false;  // kruskal_rank == bound
};

// If the criterion holds and the factorization is known to be locally rigid,
// it is infinitesimally rigid.
KruskalReport check_kruskal_criterion(const FactorizationPair& f, std::size_t budget = kDefaultKruskalBudget);

struct ConditionResult {
  std::string name;
  bool applicable = true;
  bool passed = true;
  std::string detail;
};

struct ConditionReport {
  std::vector<ConditionResult> conditions;
  bool all_applicable_pass() const;
  const ConditionResult* find(const std::string& name) const;
};

// Combinatorial necessary conditions for infinitesimal rigidity evaluated on
// the zero pattern of f (and on AB where a condition concerns the product).
ConditionReport necessary_conditions_report(const FactorizationPair& f);

// D1 D2 + D2 D1 == 0 for every pair (including D == D, i.e. D^2 == 0).
bool squares_to_zero_on_span(const std::vector<RationalMatrix>& basis);

}  // namespace nmfr
