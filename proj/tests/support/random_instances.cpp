#include "random_instances.hpp"

#include <algorithm>
#include <numeric>

#include "nmfr/errors.hpp"
#include "nmfr/fixtures.hpp"

namespace testing_support {

using nmfr::FactorizationPair;
using nmfr::Rational;
using nmfr::RationalMatrix;

std::size_t uniform_index(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

Rational small_positive_rational(Rng& rng) {
  return Rational(static_cast<long>(uniform_index(rng, 1, 9)), static_cast<long>(uniform_index(rng, 1, 9)));
}

RationalMatrix random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int lo, int hi, double zero_prob) {
  std::bernoulli_distribution zero(zero_prob);
  std::uniform_int_distribution<int> entry(lo, hi);
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = zero(rng) ? 0 : entry(rng);
  return m;
}

FactorizationPair random_pair(Rng& rng, std::size_t m, std::size_t n, std::size_t r, double zero_prob, int max_entry) {
  for (;;) {
    try {
      return FactorizationPair(random_matrix(rng, m, r, 1, max_entry, zero_prob),
                               random_matrix(rng, r, n, 1, max_entry, zero_prob));
    } catch (const nmfr::InputError&) {
    }
  }
}

std::vector<std::size_t> random_permutation(Rng& rng, std::size_t n) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

FactorizationPair permute(const FactorizationPair& f, const std::vector<std::size_t>& rows,
                          const std::vector<std::size_t>& cols, const std::vector<std::size_t>& inner) {
  RationalMatrix a(f.m(), f.r()), b(f.r(), f.n());
  for (std::size_t i = 0; i < f.m(); ++i)
    for (std::size_t k = 0; k < f.r(); ++k) a(i, k) = f.a()(rows[i], inner[k]);
  for (std::size_t k = 0; k < f.r(); ++k)
    for (std::size_t j = 0; j < f.n(); ++j) b(k, j) = f.b()(inner[k], cols[j]);
  return FactorizationPair(a, b);
}

FactorizationPair random_scaling(Rng& rng, const FactorizationPair& f) {
  RationalMatrix a = f.a(), b = f.b();
  for (std::size_t k = 0; k < f.r(); ++k) {
    const Rational d = small_positive_rational(rng);
    for (std::size_t i = 0; i < f.m(); ++i) a(i, k) *= d;
    for (std::size_t j = 0; j < f.n(); ++j) b(k, j) /= d;
  }
  return FactorizationPair(a, b);
}

FactorizationPair random_rigid_pair(Rng& rng) {
  const auto& fixtures = nmfr::reference_fixtures();
  const auto& fx = fixtures[uniform_index(rng, 0, fixtures.size() - 1)];
  const FactorizationPair base(fx.a, fx.b);
  return random_scaling(
      rng, permute(base, random_permutation(rng, 5), random_permutation(rng, 5), random_permutation(rng, 4)));
}

FactorizationPair random_mixed_pair(Rng& rng) {
  if (uniform_index(rng, 0, 2) == 0) return random_rigid_pair(rng);
  const std::size_t r = uniform_index(rng, 2, 3);
  return random_pair(rng, uniform_index(rng, r, 5), uniform_index(rng, r, 5), r, 0.4);
}

nmfr::ZeroPattern random_pattern(Rng& rng, std::size_t m, std::size_t n, std::size_t r, double zero_prob) {
  std::bernoulli_distribution zero(zero_prob);
  nmfr::ZeroPattern p(m, n, r);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t k = 0; k < r; ++k) p.set_zero_a(i, k, zero(rng));
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < n; ++j) p.set_zero_b(k, j, zero(rng));
  return p;
}

nmfr::PatternGroupElement random_group_element(Rng& rng, std::size_t m, std::size_t n, std::size_t r) {
  nmfr::PatternGroupElement g;
  g.row_perm_a = random_permutation(rng, m);
  g.col_perm_b = random_permutation(rng, n);
  g.inner_perm = random_permutation(rng, r);
  g.transposed = m == n && uniform_index(rng, 0, 1) == 1;
  return g;
}

}  // namespace testing_support
