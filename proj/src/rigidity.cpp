#include "nmfr/rigidity.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cstdint>
#include <limits>
#include <numeric>
#include <set>

#include "nmfr/errors.hpp"

namespace nmfr {

namespace {

std::string entry_name(char which, std::size_t i, std::size_t j) {
  return std::string(1, which) + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

void require_nonnegative(const RationalMatrix& m, char which) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (m(i, j) < 0) throw InputError("negative entry " + entry_name(which, i, j) + " = " + to_string(m(i, j)));
}

}  // namespace

FactorizationPair::FactorizationPair(RationalMatrix a, RationalMatrix b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.cols() != b_.rows()) {
    throw InputError("shape mismatch: A is " + std::to_string(a_.rows()) + "x" + std::to_string(a_.cols()) +
                     " but B is " + std::to_string(b_.rows()) + "x" + std::to_string(b_.cols()));
  }
  require_nonnegative(a_, 'A');
  require_nonnegative(b_, 'B');
  const std::size_t r = a_.cols();
  if (const auto ra = rank(a_); ra < r) {
    throw InputError("rank deficiency: rank(A) = " + std::to_string(ra) + " < r = " + std::to_string(r));
  }
  if (const auto rb = rank(b_); rb < r) {
    throw InputError("rank deficiency: rank(B) = " + std::to_string(rb) + " < r = " + std::to_string(r));
  }
}

ZeroPattern FactorizationPair::zero_pattern() const {
  ZeroPattern p(m(), n(), r());
  for (std::size_t i = 0; i < m(); ++i)
    for (std::size_t k = 0; k < r(); ++k) p.set_zero_a(i, k, a_(i, k) == 0);
  for (std::size_t k = 0; k < r(); ++k)
    for (std::size_t j = 0; j < n(); ++j) p.set_zero_b(k, j, b_(k, j) == 0);
  return p;
}

DualConeGenerators build_dual_generators(const FactorizationPair& f) {
  const std::size_t r = f.r();
  DualConeGenerators z;
  z.r = r;
  const auto& a = f.a();
  const auto& b = f.b();
  for (std::size_t i = 0; i < f.m(); ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      if (a(i, j) != 0) continue;
      RationalVector v(r * r);
      for (std::size_t k = 0; k < r; ++k) v[k * r + j] = a(i, k);
      z.vectors.push_back(std::move(v));
      z.sources.push_back({ZeroSide::A, i, j});
    }
  }
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < f.n(); ++j) {
      if (b(i, j) != 0) continue;
      RationalVector v(r * r);
      for (std::size_t l = 0; l < r; ++l) v[i * r + l] = -b(l, j);
      z.vectors.push_back(std::move(v));
      z.sources.push_back({ZeroSide::B, i, j});
    }
  }
  return z;
}

std::string to_string(Classification c) {
  switch (c) {
    case Classification::InfinitesimallyRigid:
      return "InfinitesimallyRigid";
    case Classification::PartiallyInfinitesimallyRigid:
      return "PartiallyInfinitesimallyRigid";
    case Classification::InteriorCertified:
      return "InteriorCertified";
    case Classification::Undetermined:
      return "Undetermined";
  }
  return "Undetermined";
}

std::optional<Classification> classification_from_string(const std::string& s) {
  for (auto c : {Classification::InfinitesimallyRigid, Classification::PartiallyInfinitesimallyRigid,
                 Classification::InteriorCertified, Classification::Undetermined}) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

bool squares_to_zero_on_span(const std::vector<RationalMatrix>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i; j < basis.size(); ++j) {
      RationalMatrix s = matmul(basis[i], basis[j]);
      const RationalMatrix t = matmul(basis[j], basis[i]);
      for (std::size_t p = 0; p < s.rows(); ++p)
        for (std::size_t q = 0; q < s.cols(); ++q)
          if (s(p, q) + t(p, q) != 0) return false;
    }
  }
  return true;
}

namespace {

// Basis of {D in W : diag(D) = 0} where W = span(Z)^perp.
std::vector<RationalMatrix> zero_diagonal_slice(const DualConeGenerators& z) {
  const std::size_t r = z.r;
  const std::size_t dim = r * r;
  RationalMatrix constraints(z.count() + r, dim);
  for (std::size_t g = 0; g < z.count(); ++g)
    for (std::size_t t = 0; t < dim; ++t) constraints(g, t) = z.vectors[g][t];
  for (std::size_t k = 0; k < r; ++k) constraints(z.count() + k, k * r + k) = 1;

  std::vector<RationalMatrix> out;
  for (auto& v : nullspace_basis(constraints)) out.emplace_back(r, r, std::move(v));
  return out;
}

// Saturating binomial coefficient.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
  std::uint64_t acc = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // acc * (n-k+i) is divisible by i; split to avoid overflow.
    const std::uint64_t g = std::gcd(acc, i);
    const std::uint64_t lhs = acc / g;
    const std::uint64_t rhs = (n - k + i) / (i / g);
    if (rhs != 0 && lhs > kMax / rhs) return kMax;
    acc = lhs * rhs;
  }
  return acc;
}

// The t-th k-subset of {0..c-1} in lexicographic order.
std::vector<std::size_t> unrank_combination(std::uint64_t t, std::size_t c, std::size_t k) {
  std::vector<std::size_t> out;
  out.reserve(k);
  std::size_t next = 0;
  for (std::size_t slot = 0; slot < k; ++slot) {
    for (std::size_t v = next; v < c; ++v) {
      const std::uint64_t block = binomial(c - v - 1, k - slot - 1);
      if (t < block) {
        out.push_back(v);
        next = v + 1;
        break;
      }
      t -= block;
    }
  }
  return out;
}

bool columns_independent(const RationalMatrix& m, const std::vector<std::size_t>& cols) {
  RationalMatrix sub(m.rows(), cols.size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j) sub(i, j) = m(i, cols[j]);
  return rank(sub) == cols.size();
}

}  // namespace

std::optional<std::size_t> kruskal_rank(const RationalMatrix& columns, std::size_t budget, Execution exec) {
  const std::size_t c = columns.cols();
  if (c == 0) return 0;
  const std::size_t upper = std::min(c, rank(columns));
  std::uint64_t used = 0;
  for (std::size_t k = upper; k >= 1; --k) {
    const std::uint64_t subsets = binomial(c, k);
    if (subsets > budget || used + subsets > budget) return std::nullopt;
    used += subsets;

    std::atomic<bool> dependent{false};
    const long total = static_cast<long>(subsets);
#pragma omp parallel for schedule(dynamic, 16) if (exec == Execution::Parallel)
    for (long t = 0; t < total; ++t) {
      if (dependent.load(std::memory_order_relaxed)) continue;
      if (!columns_independent(columns, unrank_combination(static_cast<std::uint64_t>(t), c, k))) {
        dependent.store(true, std::memory_order_relaxed);
      }
    }
    if (!dependent.load()) return k;
  }
  return 0;
}

std::optional<std::size_t> kruskal_rank(const DualConeGenerators& z, std::size_t budget, Execution exec) {
  return kruskal_rank(z.matrix(), budget, exec);
}

RigidityCertificate certify(const FactorizationPair& f, const CertifyOptions& options) {
  const std::size_t r = f.r();
  const DualConeGenerators z = build_dual_generators(f);
  const ConeByGenerators cone = z.cone();

  RigidityCertificate cert;
  cert.r = r;
  cert.generator_count = z.count();
  cert.span_rank = z.count() == 0 ? 0 : rank(z.matrix());
  cert.relint_witness = zero_in_relative_interior(cone);
  cert.lineality_dim = lineality_dimension(cone);
  cert.dim_w = r * r - cert.lineality_dim;

  const std::size_t off_diagonal = r * r - r;
  if (cert.relint_witness && cert.span_rank == off_diagonal && cert.lineality_dim == off_diagonal) {
    cert.classification = Classification::InfinitesimallyRigid;
  } else if (cert.dim_w == r * r) {
    cert.classification = Classification::InteriorCertified;
  } else if (cert.relint_witness && cert.dim_w > r) {
    auto basis = zero_diagonal_slice(z);
    if (squares_to_zero_on_span(basis)) {
      std::set<std::pair<std::size_t, std::size_t>> support;
      for (const auto& d : basis)
        for (std::size_t i = 0; i < r; ++i)
          for (std::size_t j = 0; j < r; ++j)
            if (d(i, j) != 0) support.insert({i, j});
      cert.v_basis = std::move(basis);
      cert.v_support.assign(support.begin(), support.end());
      cert.classification = Classification::PartiallyInfinitesimallyRigid;
    }
  }

  if (options.kruskal_budget) cert.kruskal_rank = kruskal_rank(z, *options.kruskal_budget, options.execution);
  return cert;
}

std::size_t dim_w(const FactorizationPair& f) {
  const std::size_t r = f.r();
  return r * r - lineality_dimension(build_dual_generators(f).cone());
}

KruskalReport check_kruskal_criterion(const FactorizationPair& f, std::size_t budget) {
  const DualConeGenerators z = build_dual_generators(f);
  KruskalReport report;
  report.generator_count = z.count();
  report.bound = std::min(z.count(), f.r() * f.r() - f.r());
  report.kruskal_rank = kruskal_rank(z, budget);
  report.holds = report.kruskal_rank && *report.kruskal_rank == report.bound;
  return report;
}

bool ConditionReport::all_applicable_pass() const {
  return std::all_of(conditions.begin(), conditions.end(),
                     [](const ConditionResult& c) { return !c.applicable || c.passed; });
}

const ConditionResult* ConditionReport::find(const std::string& name) const {
  for (const auto& c : conditions)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

bool strictly_positive(const RationalMatrix& m) {
  for (const auto& x : m.entries())
    if (x <= 0) return false;
  return true;
}

}  // namespace

ConditionReport necessary_conditions_report(const FactorizationPair& f) {
  const ZeroPattern p = f.zero_pattern();
  const std::size_t r = f.r();
  const std::size_t c = p.zero_count();
  const std::size_t minimal = min_rigid_zero_count(r);
  const bool exact = c == minimal;
  const bool product_positive = strictly_positive(f.product());
  ConditionReport report;

  report.conditions.push_back({"zero-count", true, c >= minimal,
                               std::to_string(c) + " zeros, need >= " + std::to_string(minimal)});
  report.conditions.push_back({"boundary-closed", true, boundary_closed(p),
                               "every ordered pair (i,j) has a row of A and a column of B zero at i, not at j"});

  bool covered = true;
  for (std::size_t k = 0; k < r; ++k) {
    bool col_a = false, row_b = false;
    for (std::size_t i = 0; i < p.m(); ++i) col_a = col_a || p.zero_a(i, k);
    for (std::size_t j = 0; j < p.n(); ++j) row_b = row_b || p.zero_b(k, j);
    covered = covered && col_a && row_b;
  }
  report.conditions.push_back({"column-coverage", true, covered, "a zero in every column of A and every row of B"});

  bool row_bound = true;
  for (std::size_t i = 0; i < p.m(); ++i)
    row_bound = row_bound && static_cast<std::size_t>(std::popcount(p.a_row_mask(i))) + 2 <= r;
  for (std::size_t j = 0; j < p.n(); ++j)
    row_bound = row_bound && static_cast<std::size_t>(std::popcount(p.b_col_mask(j))) + 2 <= r;
  report.conditions.push_back({"row-bound", product_positive, row_bound,
                               "AB positive: at most r-2 zeros per row of A and column of B"});

  report.conditions.push_back(
      {"column-bound", exact, column_bound_holds(p), "exactly r^2-r+1 zeros: at most r-1 per column of A / row of B"});

  const auto violation = find_zero_rectangle_violation(p);
  std::string rect_detail = "exactly r^2-r+1 zeros: zero-rectangle inequality";
  if (violation) {
    rect_detail += "; violated with k=" + std::to_string(violation->k) + ", l=" + std::to_string(violation->l) +
                   " (" + std::to_string(violation->lhs) + " > " + std::to_string(violation->rhs) + ")";
  }
  report.conditions.push_back({"zero-rectangles", exact, !violation.has_value(), rect_detail});

  report.conditions.push_back({"product-positive", exact, product_positive,
                               "exactly r^2-r+1 zeros: AB strictly positive"});
  return report;
}

}  // namespace nmfr
