#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <vector>

#include "nmfr/execution.hpp"

namespace nmfr {

// Boolean support of forced zeros of a factorization pair (A: m x r, B: r x n).
class ZeroPattern {
 public:
  ZeroPattern() = default;
  ZeroPattern(std::size_t m, std::size_t n, std::size_t r);

  // Row masks of A and column masks of B over the inner index set. Inner
  // index k corresponds to bit (r - 1 - k), so ascending mask order is
  // lexicographic order of the 0/1 strings.
  static ZeroPattern from_masks(std::size_t m, std::size_t n, std::size_t r, const std::vector<std::uint64_t>& a_rows,
                                const std::vector<std::uint64_t>& b_cols);

  std::size_t m() const { return m_; }
  std::size_t n() const { return n_; }
  std::size_t r() const { return r_; }

  bool zero_a(std::size_t i, std::size_t k) const { return zeros_a_[i * r_ + k] != 0; }
  bool zero_b(std::size_t k, std::size_t j) const { return zeros_b_[k * n_ + j] != 0; }
  void set_zero_a(std::size_t i, std::size_t k, bool z) { zeros_a_[i * r_ + k] = z; }
  void set_zero_b(std::size_t k, std::size_t j, bool z) { zeros_b_[k * n_ + j] = z; }

  std::size_t zero_count() const;
  std::uint64_t a_row_mask(std::size_t i) const;
  std::uint64_t b_col_mask(std::size_t j) const;
  std::vector<std::uint64_t> a_row_masks() const;
  std::vector<std::uint64_t> b_col_masks() const;

  // Row-major bits of zerosA followed by row-major bits of zerosB, packed as
  // m masks of r bits then r masks of n bits (first column most significant).
  std::vector<std::uint64_t> encoding() const;

  // True when no row of zerosA and no column of zerosB is entirely zero.
  bool satisfies_invariants() const;

  friend bool operator==(const ZeroPattern&, const ZeroPattern&) = default;

 private:
  std::size_t m_ = 0, n_ = 0, r_ = 0;
  std::vector<std::uint8_t> zeros_a_;
  std::vector<std::uint8_t> zeros_b_;
};

// Lexicographic order on (shape, encoding).
bool pattern_less(const ZeroPattern& a, const ZeroPattern& b);

struct PatternGroupElement {
  std::vector<std::size_t> row_perm_a;  // old row i of A -> row row_perm_a[i]
  std::vector<std::size_t> col_perm_b;  // old column j of B -> column col_perm_b[j]
  std::vector<std::size_t> inner_perm;  // inner index k -> inner_perm[k]
  bool transposed = false;              // (zerosA, zerosB) -> (zerosB^T, zerosA^T) after permuting
};

ZeroPattern apply(const PatternGroupElement& g, const ZeroPattern& p);

// ---- individual conditions ----

std::size_t min_rigid_zero_count(std::size_t r);  // r^2 - r + 1

// Every ordered pair i != j has a row of A zero at i and not at j, and a
// column of B zero at i and not at j.
bool boundary_closed(const ZeroPattern& p);

// Zero count >= r^2 - r + 1 and boundary_closed.
bool check_wpoint(const ZeroPattern& p);

// At most r - 1 zeros in every column of A and every row of B. Requires
// exactly r^2 - r + 1 zeros (throws PreconditionError otherwise).
bool check_column_bound(const ZeroPattern& p);
bool column_bound_holds(const ZeroPattern& p);  // same test, no precondition

bool row_coverage_a(const ZeroPattern& p);     // every row of A has a zero
bool all_columns_covered_b(const ZeroPattern& p);  // every column of B has a zero

// Counting-class side condition on B: the number of columns of B is five, or every
// column of B contains a zero.
inline constexpr std::size_t kColumnCoverageExemptWidth = 5;
bool column_coverage_b(const ZeroPattern& p);

// No row of A and column of B have complementary zero sets, so the support
// does not force a zero entry of AB.
bool forces_positive_product(const ZeroPattern& p);

struct ZeroRectangleViolation {
  std::vector<std::size_t> alpha;  // 0-based inner indices
  std::vector<std::size_t> beta;
  std::size_t k = 0;  // rows of A zero on all of alpha
  std::size_t l = 0;  // columns of B zero on all of beta
  long lhs = 0;       // k|alpha| + l|beta|
  long rhs = 0;       // (r-|alpha|)|alpha| + (r-|beta|)|beta| - |alpha\beta||beta\alpha|
};

// Evaluates the zero-rectangle inequality for one (alpha, beta), given as
// inner-index bitmasks (bit k <-> index k).
ZeroRectangleViolation zero_rectangle_terms(const ZeroPattern& p, std::uint64_t alpha, std::uint64_t beta);

// First violating (alpha, beta) in increasing (alpha, beta) bitmask order.
// Requires exactly r^2 - r + 1 zeros.
std::optional<ZeroRectangleViolation> check_zero_rectangles(const ZeroPattern& p);
std::optional<ZeroRectangleViolation> find_zero_rectangle_violation(const ZeroPattern& p);

// ---- filters and enumeration ----

enum class PatternFilter : unsigned {
  Wpoint = 1u << 0,
  ColumnBound = 1u << 1,
  RowCoverageA = 1u << 2,
  ColumnCoverageB = 1u << 3,
  ZeroRectangles = 1u << 4,
  PositiveProduct = 1u << 5,
};

class FilterSet {
 public:
  constexpr FilterSet() = default;
  constexpr FilterSet(std::initializer_list<PatternFilter> filters) {
    for (auto f : filters) bits_ |= static_cast<unsigned>(f);
  }
  constexpr bool has(PatternFilter f) const { return (bits_ & static_cast<unsigned>(f)) != 0; }
  constexpr FilterSet with(PatternFilter f) const {
    FilterSet s = *this;
    s.bits_ |= static_cast<unsigned>(f);
    return s;
  }
  constexpr FilterSet without(PatternFilter f) const {
    FilterSet s = *this;
    s.bits_ &= ~static_cast<unsigned>(f);
    return s;
  }
  constexpr unsigned bits() const { return bits_; }
  friend constexpr bool operator==(FilterSet, FilterSet) = default;

 private:
  unsigned bits_ = 0;
};

// Theorem conditions on a pattern whose product must be strictly positive.
FilterSet theorem_filters();
// Counting class of the "table1" preset: theorem + column bound + A-row coverage + the
// five-columns-or-covered rule for B.
FilterSet table1_filters();

// Parses a comma-separated list of filter names (wpoint, column-bound,
// row-coverage-a, column-coverage-b, zero-rectangles, positive-product) or a
// preset name (theorem, table1). Throws InputError on unknown names.
FilterSet parse_filters(const std::string& spec);
std::string describe(FilterSet filters);

bool passes(const ZeroPattern& p, FilterSet filters);

// Lexicographically least pattern in the orbit of p. Transposition is used
// only when m == n.
ZeroPattern canonical_form(const ZeroPattern& p);

struct EnumerationResult {
  std::vector<ZeroPattern> patterns;       // canonical, sorted by encoding
  std::size_t removed_by_zero_rectangles = 0;
};

// All canonical orbit representatives with exactly `zeros` zeros passing the
// filters. ZeroRectangles is applied after deduplication.
EnumerationResult enumerate_patterns(std::size_t m, std::size_t n, std::size_t r, std::size_t zeros,
                                     FilterSet filters, Execution exec = Execution::Parallel);

}  // namespace nmfr
