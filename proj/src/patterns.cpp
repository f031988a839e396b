#include "nmfr/patterns.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>

#include "nmfr/errors.hpp"

namespace nmfr {

ZeroPattern::ZeroPattern(std::size_t m, std::size_t n, std::size_t r)
    : m_(m), n_(n), r_(r), zeros_a_(m * r, 0), zeros_b_(r * n, 0) {}

ZeroPattern ZeroPattern::from_masks(std::size_t m, std::size_t n, std::size_t r,
                                    const std::vector<std::uint64_t>& a_rows,
                                    const std::vector<std::uint64_t>& b_cols) {
  if (a_rows.size() != m || b_cols.size() != n) throw DimensionMismatch("from_masks: mask count mismatch");
  ZeroPattern p(m, n, r);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < r; ++k) p.set_zero_a(i, k, (a_rows[i] >> (r - 1 - k)) & 1u);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < r; ++k) p.set_zero_b(k, j, (b_cols[j] >> (r - 1 - k)) & 1u);
  return p;
}

std::size_t ZeroPattern::zero_count() const {
  return static_cast<std::size_t>(std::count(zeros_a_.begin(), zeros_a_.end(), 1) +
                                  std::count(zeros_b_.begin(), zeros_b_.end(), 1));
}

std::uint64_t ZeroPattern::a_row_mask(std::size_t i) const {
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < r_; ++k) mask = (mask << 1) | (zero_a(i, k) ? 1u : 0u);
  return mask;
}

std::uint64_t ZeroPattern::b_col_mask(std::size_t j) const {
  std::uint64_t mask = 0;
  for (std::size_t k = 0; k < r_; ++k) mask = (mask << 1) | (zero_b(k, j) ? 1u : 0u);
  return mask;
}

std::vector<std::uint64_t> ZeroPattern::a_row_masks() const {
  std::vector<std::uint64_t> out(m_);
  for (std::size_t i = 0; i < m_; ++i) out[i] = a_row_mask(i);
  return out;
}

std::vector<std::uint64_t> ZeroPattern::b_col_masks() const {
  std::vector<std::uint64_t> out(n_);
  for (std::size_t j = 0; j < n_; ++j) out[j] = b_col_mask(j);
  return out;
}

std::vector<std::uint64_t> ZeroPattern::encoding() const {
  std::vector<std::uint64_t> key(m_ + r_, 0);
  for (std::size_t i = 0; i < m_; ++i) key[i] = a_row_mask(i);
  for (std::size_t k = 0; k < r_; ++k) {
    std::uint64_t row = 0;
    for (std::size_t j = 0; j < n_; ++j) row = (row << 1) | (zero_b(k, j) ? 1u : 0u);
    key[m_ + k] = row;
  }
  return key;
}

bool ZeroPattern::satisfies_invariants() const {
  const std::uint64_t full = (std::uint64_t{1} << r_) - 1;
  if (r_ == 0) return true;
  for (std::size_t i = 0; i < m_; ++i)
    if (a_row_mask(i) == full) return false;
  for (std::size_t j = 0; j < n_; ++j)
    if (b_col_mask(j) == full) return false;
  return true;
}

bool pattern_less(const ZeroPattern& a, const ZeroPattern& b) {
  if (a.m() != b.m()) return a.m() < b.m();
  if (a.n() != b.n()) return a.n() < b.n();
  if (a.r() != b.r()) return a.r() < b.r();
  return a.encoding() < b.encoding();
}

ZeroPattern apply(const PatternGroupElement& g, const ZeroPattern& p) {
  const std::size_t m = p.m(), n = p.n(), r = p.r();
  if (g.row_perm_a.size() != m || g.col_perm_b.size() != n || g.inner_perm.size() != r) {
    throw DimensionMismatch("group element does not match pattern shape");
  }
  ZeroPattern q(m, n, r);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < r; ++k) q.set_zero_a(g.row_perm_a[i], g.inner_perm[k], p.zero_a(i, k));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < n; ++j) q.set_zero_b(g.inner_perm[k], g.col_perm_b[j], p.zero_b(k, j));
  if (!g.transposed) return q;
  ZeroPattern t(n, m, r);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < r; ++k) t.set_zero_a(j, k, q.zero_b(k, j));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t i = 0; i < m; ++i) t.set_zero_b(k, i, q.zero_a(i, k));
  return t;
}

std::size_t min_rigid_zero_count(std::size_t r) { return r * r - r + 1; }

namespace {

// Ordered pairs (i, j), i != j, covered by a mask: bit i*r + j set when the
// mask contains inner index i and not j. Masks use the MSB-first convention.
std::uint64_t pair_cover(std::uint64_t mask, std::size_t r) {
  std::uint64_t cover = 0;
  for (std::size_t i = 0; i < r; ++i) {
    if (!((mask >> (r - 1 - i)) & 1u)) continue;
    for (std::size_t j = 0; j < r; ++j) {
      if (i != j && !((mask >> (r - 1 - j)) & 1u)) cover |= std::uint64_t{1} << (i * r + j);
    }
  }
  return cover;
}

std::uint64_t all_pairs(std::size_t r) {
  std::uint64_t all = 0;
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (i != j) all |= std::uint64_t{1} << (i * r + j);
  return all;
}

bool side_boundary_closed(const std::vector<std::uint64_t>& masks, std::size_t r) {
  if (r > 8) {
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        if (i == j) continue;
        const bool ok = std::any_of(masks.begin(), masks.end(), [&](std::uint64_t m) {
          return ((m >> (r - 1 - i)) & 1u) && !((m >> (r - 1 - j)) & 1u);
        });
        if (!ok) return false;
      }
    return true;
  }
  std::uint64_t cover = 0;
  for (auto m : masks) cover |= pair_cover(m, r);
  return cover == all_pairs(r);
}

bool side_column_bound(const std::vector<std::uint64_t>& masks, std::size_t r) {
  for (std::size_t k = 0; k < r; ++k) {
    std::size_t count = 0;
    for (auto m : masks) count += (m >> (r - 1 - k)) & 1u;
    if (count > r - 1) return false;
  }
  return true;
}

std::vector<std::size_t> indices_of(std::uint64_t lsb_mask, std::size_t r) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < r; ++k)
    if ((lsb_mask >> k) & 1u) out.push_back(k);
  return out;
}

}  // namespace

bool boundary_closed(const ZeroPattern& p) {
  return side_boundary_closed(p.a_row_masks(), p.r()) && side_boundary_closed(p.b_col_masks(), p.r());
}

bool check_wpoint(const ZeroPattern& p) {
  return p.zero_count() >= min_rigid_zero_count(p.r()) && boundary_closed(p);
}

bool column_bound_holds(const ZeroPattern& p) {
  if (p.r() == 0) return true;
  return side_column_bound(p.a_row_masks(), p.r()) && side_column_bound(p.b_col_masks(), p.r());
}

bool check_column_bound(const ZeroPattern& p) {
  if (p.zero_count() != min_rigid_zero_count(p.r())) {
    throw PreconditionError("column bound applies only to patterns with exactly r^2 - r + 1 = " +
                            std::to_string(min_rigid_zero_count(p.r())) + " zeros (pattern has " +
                            std::to_string(p.zero_count()) + ")");
  }
  return column_bound_holds(p);
}

bool row_coverage_a(const ZeroPattern& p) {
  for (std::size_t i = 0; i < p.m(); ++i)
    if (p.a_row_mask(i) == 0) return false;
  return true;
}

bool all_columns_covered_b(const ZeroPattern& p) {
  for (std::size_t j = 0; j < p.n(); ++j)
    if (p.b_col_mask(j) == 0) return false;
  return true;
}

bool column_coverage_b(const ZeroPattern& p) {
  return p.n() == kColumnCoverageExemptWidth || all_columns_covered_b(p);
}

bool forces_positive_product(const ZeroPattern& p) {
  const std::uint64_t full = (std::uint64_t{1} << p.r()) - 1;
  const auto a = p.a_row_masks();
  const auto b = p.b_col_masks();
  for (auto x : a)
    for (auto y : b)
      if ((x | y) == full) return false;
  return true;
}

ZeroRectangleViolation zero_rectangle_terms(const ZeroPattern& p, std::uint64_t alpha, std::uint64_t beta) {
  const std::size_t r = p.r();
  ZeroRectangleViolation t;
  t.alpha = indices_of(alpha, r);
  t.beta = indices_of(beta, r);
  for (std::size_t i = 0; i < p.m(); ++i) {
    bool all = true;
    for (auto k : t.alpha) all = all && p.zero_a(i, k);
    t.k += all ? 1 : 0;
  }
  for (std::size_t j = 0; j < p.n(); ++j) {
    bool all = true;
    for (auto k : t.beta) all = all && p.zero_b(k, j);
    t.l += all ? 1 : 0;
  }
  const long a = static_cast<long>(t.alpha.size());
  const long b = static_cast<long>(t.beta.size());
  const long rr = static_cast<long>(r);
  const long a_minus_b = std::popcount(alpha & ~beta);
  const long b_minus_a = std::popcount(beta & ~alpha);
  t.lhs = static_cast<long>(t.k) * a + static_cast<long>(t.l) * b;
  t.rhs = (rr - a) * a + (rr - b) * b - a_minus_b * b_minus_a;
  return t;
}

std::optional<ZeroRectangleViolation> find_zero_rectangle_violation(const ZeroPattern& p) {
  const std::uint64_t subsets = std::uint64_t{1} << p.r();
  for (std::uint64_t alpha = 0; alpha < subsets; ++alpha) {
    for (std::uint64_t beta = 0; beta < subsets; ++beta) {
      auto t = zero_rectangle_terms(p, alpha, beta);
      if (t.lhs > t.rhs) return t;
    }
  }
  return std::nullopt;
}

std::optional<ZeroRectangleViolation> check_zero_rectangles(const ZeroPattern& p) {
  if (p.zero_count() != min_rigid_zero_count(p.r())) {
    throw PreconditionError("zero-rectangle test applies only to patterns with exactly r^2 - r + 1 = " +
                            std::to_string(min_rigid_zero_count(p.r())) + " zeros (pattern has " +
                            std::to_string(p.zero_count()) + ")");
  }
  return find_zero_rectangle_violation(p);
}

FilterSet theorem_filters() { return {PatternFilter::Wpoint, PatternFilter::PositiveProduct}; }

FilterSet table1_filters() {
  return {PatternFilter::Wpoint, PatternFilter::PositiveProduct, PatternFilter::ColumnBound,
          PatternFilter::RowCoverageA, PatternFilter::ColumnCoverageB};
}

namespace {

struct FilterName {
  const char* name;
  PatternFilter filter;
};

constexpr FilterName kFilterNames[] = {
    {"wpoint", PatternFilter::Wpoint},
    {"column-bound", PatternFilter::ColumnBound},
    {"row-coverage-a", PatternFilter::RowCoverageA},
    {"column-coverage-b", PatternFilter::ColumnCoverageB},
    {"zero-rectangles", PatternFilter::ZeroRectangles},
    {"positive-product", PatternFilter::PositiveProduct},
};

}  // namespace

FilterSet parse_filters(const std::string& spec) {
  FilterSet out;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "none") continue;
    if (item == "theorem") {
      for (auto f : {PatternFilter::Wpoint, PatternFilter::PositiveProduct}) out = out.with(f);
      continue;
    }
    if (item == "table1") {
      for (const auto& fn : kFilterNames)
        if (table1_filters().has(fn.filter)) out = out.with(fn.filter);
      continue;
    }
    bool found = false;
    for (const auto& fn : kFilterNames) {
      if (item == fn.name) {
        out = out.with(fn.filter);
        found = true;
      }
    }
    if (!found) throw InputError("unknown pattern filter '" + item + "'");
  }
  return out;
}

std::string describe(FilterSet filters) {
  std::string out;
  for (const auto& fn : kFilterNames) {
    if (!filters.has(fn.filter)) continue;
    if (!out.empty()) out += ",";
    out += fn.name;
  }
  return out.empty() ? "none" : out;
}

bool passes(const ZeroPattern& p, FilterSet filters) {
  if (filters.has(PatternFilter::Wpoint) && !check_wpoint(p)) return false;
  if (filters.has(PatternFilter::ColumnBound) && !column_bound_holds(p)) return false;
  if (filters.has(PatternFilter::RowCoverageA) && !row_coverage_a(p)) return false;
  if (filters.has(PatternFilter::ColumnCoverageB) && !column_coverage_b(p)) return false;
  if (filters.has(PatternFilter::PositiveProduct) && !forces_positive_product(p)) return false;
  if (filters.has(PatternFilter::ZeroRectangles) && find_zero_rectangle_violation(p)) return false;
  return true;
}

namespace {

using Key = std::vector<std::uint64_t>;

// All permutations of the inner index set with a lookup table mapping masks
// (MSB-first convention) through each permutation.
class InnerPermutations {
 public:
  explicit InnerPermutations(std::size_t r) : r_(r), masks_(std::size_t{1} << r) {
    std::vector<std::size_t> perm(r);
    std::iota(perm.begin(), perm.end(), 0);
    do {
      for (std::uint64_t mask = 0; mask < masks_; ++mask) {
        std::uint64_t out = 0;
        for (std::size_t k = 0; k < r; ++k)
          if ((mask >> (r - 1 - k)) & 1u) out |= std::uint64_t{1} << (r - 1 - perm[k]);
        table_.push_back(out);
      }
      ++count_;
    } while (std::next_permutation(perm.begin(), perm.end()));
  }

  std::size_t count() const { return count_; }
  std::uint64_t map(std::size_t perm, std::uint64_t mask) const { return table_[perm * masks_ + mask]; }

  std::vector<std::uint64_t> sorted_image(std::size_t perm, const std::vector<std::uint64_t>& masks) const {
    std::vector<std::uint64_t> out(masks.size());
    for (std::size_t i = 0; i < masks.size(); ++i) out[i] = map(perm, masks[i]);
    std::sort(out.begin(), out.end());
    return out;
  }

 private:
  std::size_t r_;
  std::uint64_t masks_;
  std::size_t count_ = 0;
  std::vector<std::uint64_t> table_;
};

// Encoding of the pattern with sorted A row masks and sorted B column masks.
Key build_key(const std::vector<std::uint64_t>& a_rows, const std::vector<std::uint64_t>& b_cols, std::size_t r) {
  const std::size_t n = b_cols.size();
  Key key(a_rows.size() + r, 0);
  std::copy(a_rows.begin(), a_rows.end(), key.begin());
  for (std::size_t k = 0; k < r; ++k) {
    std::uint64_t row = 0;
    for (std::size_t j = 0; j < n; ++j) row = (row << 1) | ((b_cols[j] >> (r - 1 - k)) & 1u);
    key[a_rows.size() + k] = row;
  }
  return key;
}

Key canonical_key(const std::vector<std::uint64_t>& a_rows, const std::vector<std::uint64_t>& b_cols, std::size_t r,
                  bool allow_transpose, const InnerPermutations& perms) {
  Key best;
  for (std::size_t s = 0; s < perms.count(); ++s) {
    const auto pa = perms.sorted_image(s, a_rows);
    const auto pb = perms.sorted_image(s, b_cols);
    Key key = build_key(pa, pb, r);
    if (best.empty() || key < best) best = std::move(key);
    if (allow_transpose) {
      Key t = build_key(pb, pa, r);
      if (t < best) best = std::move(t);
    }
  }
  return best;
}

ZeroPattern pattern_from_key(const Key& key, std::size_t m, std::size_t n, std::size_t r) {
  ZeroPattern p(m, n, r);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < r; ++k) p.set_zero_a(i, k, (key[i] >> (r - 1 - k)) & 1u);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < n; ++j) p.set_zero_b(k, j, (key[m + k] >> (n - 1 - j)) & 1u);
  return p;
}

// Multisets of `count` masks drawn (non-decreasing) from `allowed`, bucketed
// by total zero count up to `max_zeros`, pruned by the per-index bound when
// requested and filtered by boundary closure when requested.
std::vector<std::vector<std::vector<std::uint64_t>>> side_multisets(std::size_t count,
                                                                    const std::vector<std::uint64_t>& allowed,
                                                                    std::size_t max_zeros, std::size_t r,
                                                                    bool column_bound, bool closed) {
  std::vector<std::vector<std::vector<std::uint64_t>>> buckets(max_zeros + 1);
  std::vector<std::uint64_t> current;
  std::vector<std::size_t> per_index(r, 0);
  const std::uint64_t target = all_pairs(r);
  std::vector<std::uint64_t> cover(allowed.size());
  for (std::size_t t = 0; t < allowed.size(); ++t) cover[t] = pair_cover(allowed[t], r);

  auto rec = [&](auto&& self, std::size_t start, std::size_t zeros, std::uint64_t covered) -> void {
    if (current.size() == count) {
      if (closed && covered != target) return;
      buckets[zeros].push_back(current);
      return;
    }
    for (std::size_t t = start; t < allowed.size(); ++t) {
      const std::uint64_t mask = allowed[t];
      const std::size_t w = static_cast<std::size_t>(std::popcount(mask));
      if (zeros + w > max_zeros) continue;
      bool ok = true;
      if (column_bound) {
        for (std::size_t k = 0; k < r && ok; ++k)
          if (((mask >> (r - 1 - k)) & 1u) && per_index[k] + 1 > r - 1) ok = false;
      }
      if (!ok) continue;
      for (std::size_t k = 0; k < r; ++k) per_index[k] += (mask >> (r - 1 - k)) & 1u;
      current.push_back(mask);
      self(self, t, zeros + w, covered | cover[t]);
      current.pop_back();
      for (std::size_t k = 0; k < r; ++k) per_index[k] -= (mask >> (r - 1 - k)) & 1u;
    }
  };
  rec(rec, 0, 0, 0);
  return buckets;
}

}  // namespace

ZeroPattern canonical_form(const ZeroPattern& p) {
  const InnerPermutations perms(p.r());
  const Key key = canonical_key(p.a_row_masks(), p.b_col_masks(), p.r(), p.m() == p.n(), perms);
  return pattern_from_key(key, p.m(), p.n(), p.r());
}

EnumerationResult enumerate_patterns(std::size_t m, std::size_t n, std::size_t r, std::size_t zeros,
                                     FilterSet filters, Execution exec) {
  if (r == 0 || r > 8) throw InputError("enumeration supports inner rank 1..8, got " + std::to_string(r));
  if (m == 0 || n == 0) throw InputError("enumeration needs a nonempty shape");
  EnumerationResult result;
  const bool wpoint = filters.has(PatternFilter::Wpoint);
  if (wpoint && zeros < min_rigid_zero_count(r)) return result;

  const std::uint64_t full = (std::uint64_t{1} << r) - 1;
  std::vector<std::uint64_t> allowed_a, allowed_b;
  for (std::uint64_t mask = 0; mask < full; ++mask) {
    if (!(mask == 0 && filters.has(PatternFilter::RowCoverageA))) allowed_a.push_back(mask);
    const bool need_b_cover = filters.has(PatternFilter::ColumnCoverageB) && n != kColumnCoverageExemptWidth;
    if (!(mask == 0 && need_b_cover)) allowed_b.push_back(mask);
  }
  const bool bound = filters.has(PatternFilter::ColumnBound);
  const auto a_side = side_multisets(m, allowed_a, zeros, r, bound, wpoint);
  const auto b_side = side_multisets(n, allowed_b, zeros, r, bound, wpoint);
  const InnerPermutations perms(r);

  // A-side orbit representatives under inner permutations, tagged with
  // their zero count.
  struct Rep {
    std::vector<std::uint64_t> rows;
    std::size_t zeros;
  };
  std::vector<Rep> reps;
  for (std::size_t za = 0; za <= zeros; ++za) {
    if (b_side[zeros - za].empty()) continue;
    std::vector<std::vector<std::uint64_t>> canon;
    canon.reserve(a_side[za].size());
    for (const auto& rows : a_side[za]) {
      std::vector<std::uint64_t> best;
      for (std::size_t s = 0; s < perms.count(); ++s) {
        auto img = perms.sorted_image(s, rows);
        if (best.empty() || img < best) best = std::move(img);
      }
      canon.push_back(std::move(best));
    }
    std::sort(canon.begin(), canon.end());
    canon.erase(std::unique(canon.begin(), canon.end()), canon.end());
    for (auto& c : canon) reps.push_back({std::move(c), za});
  }

  const bool positive = filters.has(PatternFilter::PositiveProduct);
  const bool transpose = m == n;
  std::vector<std::vector<Key>> found(reps.size());
  const long rep_count = static_cast<long>(reps.size());

#pragma omp parallel for schedule(dynamic) if (exec == Execution::Parallel)
  for (long t = 0; t < rep_count; ++t) {
    const Rep& rep = reps[static_cast<std::size_t>(t)];
    std::vector<Key> local;
    for (const auto& cols : b_side[zeros - rep.zeros]) {
      if (positive) {
        bool ok = true;
        for (auto x : rep.rows) {
          for (auto y : cols) {
            if ((x | y) == full) {
              ok = false;
              break;
            }
          }
          if (!ok) break;
        }
        if (!ok) continue;
      }
      local.push_back(canonical_key(rep.rows, cols, r, transpose, perms));
    }
    std::sort(local.begin(), local.end());
    local.erase(std::unique(local.begin(), local.end()), local.end());
    found[static_cast<std::size_t>(t)] = std::move(local);
  }

  std::vector<Key> keys;
  for (auto& f : found) keys.insert(keys.end(), std::make_move_iterator(f.begin()), std::make_move_iterator(f.end()));
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

  const bool rectangles = filters.has(PatternFilter::ZeroRectangles);
  for (const auto& key : keys) {
    ZeroPattern p = pattern_from_key(key, m, n, r);
    if (rectangles && find_zero_rectangle_violation(p)) {
      ++result.removed_by_zero_rectangles;
      continue;
    }
    result.patterns.push_back(std::move(p));
  }
  return result;
}

}  // namespace nmfr
