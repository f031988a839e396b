#include "oracles.hpp"

#include <algorithm>
#include <numeric>

namespace oracle {

std::size_t rank_of(Columns columns) {
  if (columns.empty()) return 0;
  const std::size_t rows = columns[0].size();
  std::size_t rank = 0;
  // Eliminate on the transpose: each column is a row of the working matrix.
  for (std::size_t c = 0; c < rows && rank < columns.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < columns.size() && columns[pivot][c] == 0) ++pivot;
    if (pivot == columns.size()) continue;
    std::swap(columns[rank], columns[pivot]);
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (i == rank || columns[i][c] == 0) continue;
      const Rational f = columns[i][c] / columns[rank][c];
      for (std::size_t t = 0; t < rows; ++t) columns[i][t] -= f * columns[rank][t];
    }
    ++rank;
  }
  return rank;
}

std::size_t kruskal_rank(const Columns& columns) {
  const std::size_t c = columns.size();
  std::size_t best = 0;
  for (std::size_t k = 1; k <= c; ++k) {
    bool all = true;
    for (std::uint32_t mask = 0; mask < (1U << c) && all; ++mask) {
      if (static_cast<std::size_t>(__builtin_popcount(mask)) != k) continue;
      Columns sub;
      for (std::size_t j = 0; j < c; ++j)
        if (mask & (1U << j)) sub.push_back(columns[j]);
      all = rank_of(sub) == k;
    }
    if (!all) break;
    best = k;
  }
  return best;
}

namespace {

Rational det3(const Vec& a, const Vec& b, const Vec& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) + a[2] * (b[0] * c[1] - b[1] * c[0]);
}

// Nonnegative coefficients x with sum x_i s_i == v for independent s (size <= 3).
bool nonneg_solution(const Columns& s, const Vec& v) {
  if (s.empty()) return std::all_of(v.begin(), v.end(), [](const Rational& x) { return x == 0; });
  if (s.size() == 1) {
    // v = t s with t >= 0.
    std::size_t k = 0;
    while (s[0][k] == 0) ++k;
    const Rational t = v[k] / s[0][k];
    for (std::size_t i = 0; i < 3; ++i)
      if (v[i] != t * s[0][i]) return false;
    return t >= 0;
  }
  if (s.size() == 2) {
    // Solve using the 2x2 minor with nonzero determinant, then check the rest.
    for (std::size_t p = 0; p < 3; ++p) {
      for (std::size_t q = p + 1; q < 3; ++q) {
        const Rational d = s[0][p] * s[1][q] - s[0][q] * s[1][p];
        if (d == 0) continue;
        const Rational x = (v[p] * s[1][q] - v[q] * s[1][p]) / d;
        const Rational y = (s[0][p] * v[q] - s[0][q] * v[p]) / d;
        for (std::size_t i = 0; i < 3; ++i)
          if (x * s[0][i] + y * s[1][i] != v[i]) return false;
        return x >= 0 && y >= 0;
      }
    }
    return false;
  }
  const Rational d = det3(s[0], s[1], s[2]);
  const Rational x = det3(v, s[1], s[2]) / d;
  const Rational y = det3(s[0], v, s[2]) / d;
  const Rational z = det3(s[0], s[1], v) / d;
  return x >= 0 && y >= 0 && z >= 0;
}

}  // namespace

bool cone_member_r3(const Columns& generators, const Vec& v) {
  const std::size_t g = generators.size();
  if (nonneg_solution({}, v)) return true;
  for (std::uint32_t mask = 1; mask < (1U << g); ++mask) {
    if (__builtin_popcount(mask) > 3) continue;
    Columns s;
    for (std::size_t j = 0; j < g; ++j)
      if (mask & (1U << j)) s.push_back(generators[j]);
    if (rank_of(s) != s.size()) continue;
    if (nonneg_solution(s, v)) return true;
  }
  return false;
}

Columns dual_generators(const nmfr::RationalMatrix& a, const nmfr::RationalMatrix& b) {
  const std::size_t r = a.cols();
  Columns out;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < r; ++j)
      if (a(i, j) == 0) {
        Vec g(r * r);
        for (std::size_t row = 0; row < r; ++row) g[row * r + j] = a(i, row);
        out.push_back(g);
      }
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < b.cols(); ++j)
      if (b(i, j) == 0) {
        Vec g(r * r);
        for (std::size_t col = 0; col < r; ++col) g[i * r + col] = -b(col, j);
        out.push_back(g);
      }
  return out;
}

bool positive_zero_combination(const Columns& generators, const Vec& lambda) {
  if (generators.size() != lambda.size()) return false;
  if (generators.empty()) return true;
  Vec sum(generators[0].size());
  for (std::size_t g = 0; g < generators.size(); ++g) {
    if (lambda[g] < 1) return false;
    for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += lambda[g] * generators[g][t];
  }
  return std::all_of(sum.begin(), sum.end(), [](const Rational& x) { return x == 0; });
}

std::vector<std::uint8_t> brute_canonical(const nmfr::ZeroPattern& p) {
  const std::size_t m = p.m(), n = p.n(), r = p.r();
  std::vector<std::size_t> rows(m), cols(n), inner(r);
  std::vector<std::uint8_t> best;
  for (int swap = 0; swap < (m == n ? 2 : 1); ++swap) {
    std::iota(inner.begin(), inner.end(), 0);
    do {
      std::iota(rows.begin(), rows.end(), 0);
      do {
        std::iota(cols.begin(), cols.end(), 0);
        do {
          std::vector<std::uint8_t> enc;
          // Swapped: new A(i,k) = old B(k,i), new B(k,j) = old A(j,k).
          for (std::size_t i = 0; i < m; ++i)
            for (std::size_t k = 0; k < r; ++k)
              enc.push_back(swap ? p.zero_b(inner[k], rows[i]) : p.zero_a(rows[i], inner[k]));
          for (std::size_t k = 0; k < r; ++k)
            for (std::size_t j = 0; j < n; ++j)
              enc.push_back(swap ? p.zero_a(cols[j], inner[k]) : p.zero_b(inner[k], cols[j]));
          if (best.empty() || enc < best) best = enc;
        } while (std::next_permutation(cols.begin(), cols.end()));
      } while (std::next_permutation(rows.begin(), rows.end()));
    } while (std::next_permutation(inner.begin(), inner.end()));
  }
  return best;
}

bool cp_rank2_rigid_by_sampling(const nmfr::RationalMatrix& a) {
  const Rational samples[] = {Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2), Rational(3, 7),
                              Rational(-3, 7)};
  for (const auto& d : samples) {
    // Columns of D: d_0 = (0, -d), d_1 = (d, 0).
    bool feasible = true;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (a(i, 0) == 0 && -d * a(i, 1) < 0) feasible = false;
      if (a(i, 1) == 0 && d * a(i, 0) < 0) feasible = false;
    }
    if (feasible) return false;
  }
  return true;
}

}  // namespace oracle
