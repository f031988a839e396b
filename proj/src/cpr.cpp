#include "nmfr/cpr.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <set>

#include "nmfr/errors.hpp"

namespace nmfr {

SymmetricFactor::SymmetricFactor(RationalMatrix a) : a_(std::move(a)) {
  for (std::size_t i = 0; i < a_.rows(); ++i)
    for (std::size_t j = 0; j < a_.cols(); ++j)
      if (a_(i, j) < 0) {
        throw InputError("negative entry A(" + std::to_string(i + 1) + "," + std::to_string(j + 1) +
                         ") = " + to_string(a_(i, j)));
      }
  if (const auto ra = rank(a_); ra < a_.cols()) {
    throw InputError("rank deficiency: rank(A) = " + std::to_string(ra) + " < r = " + std::to_string(a_.cols()));
  }
}

std::size_t skew_dimension(std::size_t r) { return r * (r - (r > 0 ? 1 : 0)) / 2; }

std::size_t skew_index(std::size_t r, std::size_t k, std::size_t l) {
  // Pairs (t, .) for t < k come first: (r-1) + (r-2) + ... + (r-k).
  return k * (2 * r - k - 1) / 2 + (l - k - 1);
}

SkewGenerators build_skew_generators(const SymmetricFactor& f) {
  const std::size_t r = f.r();
  const auto& a = f.a();
  SkewGenerators z;
  z.r = r;
  for (std::size_t i = 0; i < f.n(); ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (a(i, j) != 0) continue;
      RationalVector v(skew_dimension(r));
      for (std::size_t k = 0; k < r; ++k) {
        if (k < j) v[skew_index(r, k, j)] += a(i, k);
        if (k > j) v[skew_index(r, j, k)] -= a(i, k);
      }
      z.vectors.push_back(std::move(v));
      z.sources.push_back({ZeroSide::A, i, j});
    }
  }
  return z;
}

RigidityCertificate certify_cp(const SymmetricFactor& f, const CertifyOptions& options) {
  const SkewGenerators z = build_skew_generators(f);
  const ConeByGenerators cone = z.cone();
  const std::size_t dim = skew_dimension(f.r());

  RigidityCertificate cert;
  cert.r = f.r();
  cert.generator_count = z.count();
  cert.span_rank = z.count() == 0 ? 0 : rank(z.matrix());
  cert.relint_witness = zero_in_relative_interior(cone);
  cert.lineality_dim = lineality_dimension(cone);
  cert.dim_w = dim - cert.lineality_dim;
  const bool rigid = cert.relint_witness && cert.span_rank == dim && cert.lineality_dim == dim;
  cert.classification = rigid ? Classification::InfinitesimallyRigid : Classification::Undetermined;
  if (options.kruskal_budget) cert.kruskal_rank = kruskal_rank(z.matrix(), *options.kruskal_budget, options.execution);
  return cert;
}

KruskalReport cp_kruskal_criterion(const SymmetricFactor& f, std::size_t budget) {
  const SkewGenerators z = build_skew_generators(f);
  KruskalReport report;
  report.generator_count = z.count();
  report.bound = std::min(z.count(), skew_dimension(f.r()));
  report.kruskal_rank = kruskal_rank(z.matrix(), budget);
  report.holds = report.kruskal_rank && *report.kruskal_rank == report.bound;
  return report;
}

SymmetricPattern symmetric_pattern(const SymmetricFactor& f) {
  SymmetricPattern p{f.n(), f.r(), std::vector<std::uint64_t>(f.n(), 0)};
  for (std::size_t i = 0; i < f.n(); ++i)
    for (std::size_t k = 0; k < f.r(); ++k)
      if (f.a()(i, k) == 0) p.rows[i] |= std::uint64_t{1} << (f.r() - 1 - k);
  return p;
}

std::size_t SymmetricPattern::zero_count() const {
  std::size_t c = 0;
  for (auto m : rows) c += static_cast<std::size_t>(std::popcount(m));
  return c;
}

namespace {

bool bit(std::uint64_t mask, std::size_t r, std::size_t k) { return (mask >> (r - 1 - k)) & 1U; }

bool rows_boundary_closed(const SymmetricPattern& p) {
  for (std::size_t i = 0; i < p.r; ++i) {
    for (std::size_t j = 0; j < p.r; ++j) {
      if (i == j) continue;
      const bool ok = std::any_of(p.rows.begin(), p.rows.end(),
                                  [&](std::uint64_t m) { return bit(m, p.r, i) && !bit(m, p.r, j); });
      if (!ok) return false;
    }
  }
  return true;
}

std::size_t min_cp_zero_count(std::size_t r) { return skew_dimension(r) + 1; }

}  // namespace

bool check_swpoint(const SymmetricPattern& p) {
  return p.zero_count() >= min_cp_zero_count(p.r) && rows_boundary_closed(p);
}

SymmetricPattern canonical_form(const SymmetricPattern& p) {
  std::vector<std::size_t> perm(p.r);
  std::iota(perm.begin(), perm.end(), 0);
  SymmetricPattern best;
  bool first = true;
  do {
    SymmetricPattern q{p.n, p.r, {}};
    q.rows.reserve(p.n);
    for (auto m : p.rows) {
      std::uint64_t image = 0;
      for (std::size_t k = 0; k < p.r; ++k)
        if (bit(m, p.r, k)) image |= std::uint64_t{1} << (p.r - 1 - perm[k]);
      q.rows.push_back(image);
    }
    std::sort(q.rows.begin(), q.rows.end());
    if (first || q < best) best = std::move(q);
    first = false;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

namespace {

void symmetric_multisets(std::size_t n, std::size_t r, std::size_t zeros, std::uint64_t min_mask,
                         std::vector<std::uint64_t>& rows, std::size_t used, std::set<SymmetricPattern>& out,
                         bool require_swpoint) {
  const std::uint64_t full = (std::uint64_t{1} << r) - 1;
  if (rows.size() == n) {
    if (used != zeros) return;
    SymmetricPattern p{n, r, rows};
    if (require_swpoint && !check_swpoint(p)) return;
    out.insert(canonical_form(p));
    return;
  }
  for (std::uint64_t m = min_mask; m < full; ++m) {
    const auto c = static_cast<std::size_t>(std::popcount(m));
    if (used + c > zeros) continue;
    if (used + c + (n - rows.size() - 1) * (r - 1) < zeros) continue;
    rows.push_back(m);
    symmetric_multisets(n, r, zeros, m, rows, used + c, out, require_swpoint);
    rows.pop_back();
  }
}

}  // namespace

std::vector<SymmetricPattern> enumerate_symmetric_patterns(std::size_t n, std::size_t r, std::size_t zeros,
                                                           bool require_swpoint) {
  if (r == 0 || r > 8) throw InputError("symmetric enumeration supports 1 <= r <= 8");
  std::set<SymmetricPattern> out;
  std::vector<std::uint64_t> rows;
  symmetric_multisets(n, r, zeros, 0, rows, 0, out, require_swpoint);
  return {out.begin(), out.end()};
}

ConditionReport cp_necessary_conditions(const SymmetricFactor& f) {
  const SymmetricPattern p = symmetric_pattern(f);
  const std::size_t r = f.r();
  const std::size_t c = p.zero_count();
  const std::size_t minimal = min_cp_zero_count(r);
  const bool exact = c == minimal;
  bool product_positive = true;
  for (const auto& x : f.product().entries()) product_positive = product_positive && x > 0;

  ConditionReport report;
  report.conditions.push_back({"zero-count", true, c >= minimal,
                               std::to_string(c) + " zeros, need >= " + std::to_string(minimal)});
  report.conditions.push_back({"boundary-closed", true, rows_boundary_closed(p),
                               "every ordered pair (i,j) has a row of A zero at i, not at j"});

  std::vector<std::size_t> per_column(r, 0);
  for (auto m : p.rows)
    for (std::size_t k = 0; k < r; ++k) per_column[k] += bit(m, r, k);
  const bool covered = std::all_of(per_column.begin(), per_column.end(), [](std::size_t z) { return z > 0; });
  report.conditions.push_back({"column-coverage", true, covered, "a zero in every column of A"});

  const bool row_bound = std::all_of(p.rows.begin(), p.rows.end(), [&](std::uint64_t m) {
    return static_cast<std::size_t>(std::popcount(m)) + 2 <= r;
  });
  report.conditions.push_back({"row-bound", product_positive, row_bound,
                               "AA^T positive: at most r-2 zeros per row of A"});

  const bool column_bound = std::all_of(per_column.begin(), per_column.end(), [&](std::size_t z) { return z + 1 <= r; });
  report.conditions.push_back(
      {"column-bound", exact, column_bound, "exactly (r^2-r)/2+1 zeros: at most r-1 per column of A"});

  // k rows of A vanishing on alpha give k|alpha| generators supported on the
  // |alpha|(r-|alpha|) coordinates pairing alpha with its complement.
  std::string rect_detail = "exactly (r^2-r)/2+1 zeros: k <= r - |alpha|";
  bool rectangles = true;
  for (std::uint64_t alpha = 1; alpha < (std::uint64_t{1} << r) && rectangles; ++alpha) {
    const auto size = static_cast<std::size_t>(std::popcount(alpha));
    const auto k = static_cast<std::size_t>(
        std::count_if(p.rows.begin(), p.rows.end(), [&](std::uint64_t m) { return (m & alpha) == alpha; }));
    if (k + size > r) {
      rectangles = false;
      rect_detail += "; violated with |alpha|=" + std::to_string(size) + ", k=" + std::to_string(k);
    }
  }
  report.conditions.push_back({"zero-rectangles", exact, rectangles, rect_detail});
  report.conditions.push_back(
      {"product-positive", exact, product_positive, "exactly (r^2-r)/2+1 zeros: AA^T strictly positive"});
  return report;
}

}  // namespace nmfr
