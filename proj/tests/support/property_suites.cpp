#include "property_suites.hpp"

#include <functional>
#include <sstream>

#include "nmfr/cone.hpp"
#include "nmfr/cpr.hpp"
#include "nmfr/rigidity.hpp"
#include "oracles.hpp"
#include "random_instances.hpp"

namespace testing_support {

using namespace nmfr;

namespace {

std::string describe(const FactorizationPair& f) {
  std::ostringstream out;
  out << f.m() << "x" << f.n() << " r=" << f.r() << " A=[";
  for (const auto& x : f.a().entries()) out << x << ' ';
  out << "] B=[";
  for (const auto& x : f.b().entries()) out << x << ' ';
  out << "]";
  return out.str();
}

// Runs `body` on each instance; body returns an empty string on success.
PropertyOutcome run(const std::string& name, std::size_t instances, std::uint64_t seed,
                    const std::function<std::string(Rng&)>& body) {
  PropertyOutcome outcome{name, instances, 0, {}};
  Rng rng(seed);
  for (std::size_t t = 0; t < instances; ++t) {
    const std::string failure = body(rng);
    if (failure.empty()) continue;
    if (outcome.failures++ == 0) outcome.first_failure = "instance " + std::to_string(t) + ": " + failure;
  }
  return outcome;
}

bool same_shape(const RigidityCertificate& x, const RigidityCertificate& y) {
  return x.generator_count == y.generator_count && x.span_rank == y.span_rank && x.lineality_dim == y.lineality_dim &&
         x.dim_w == y.dim_w && x.classification == y.classification && x.kruskal_rank == y.kruskal_rank &&
         x.relint_witness.has_value() == y.relint_witness.has_value() && x.v_basis.size() == y.v_basis.size();
}

constexpr std::size_t kOracleGroupLimit = 50'000;

std::size_t factorial(std::size_t k) { return k <= 1 ? 1 : k * factorial(k - 1); }

std::size_t group_order(std::size_t m, std::size_t n, std::size_t r) {
  return factorial(m) * factorial(n) * factorial(r) * (m == n ? 2 : 1);
}

}  // namespace

PropertyOutcome certificate_invariance(std::size_t instances, std::uint64_t seed) {
  return run("scaling, permutation and transpose invariance", instances, seed, [](Rng& rng) -> std::string {
    const FactorizationPair f = random_mixed_pair(rng);
    const RigidityCertificate base = certify(f);
    if (!same_shape(base, certify(random_scaling(rng, f)))) return "scaling changed the certificate of " + describe(f);
    const FactorizationPair p = permute(f, random_permutation(rng, f.m()), random_permutation(rng, f.n()),
                                        random_permutation(rng, f.r()));
    if (!same_shape(base, certify(p))) return "permutation changed the certificate of " + describe(f);
    const RigidityCertificate t = certify(FactorizationPair(f.b().transpose(), f.a().transpose()));
    if (!same_shape(base, t)) return "transpose changed the certificate of " + describe(f);
    return {};
  });
}

PropertyOutcome duality_identity(std::size_t instances, std::uint64_t seed) {
  return run("lineality_dim + dim_W = r^2", instances, seed, [](Rng& rng) -> std::string {
    const FactorizationPair f = random_mixed_pair(rng);
    const RigidityCertificate c = certify(f, {std::nullopt});
    const std::size_t r = f.r();
    if (c.lineality_dim + c.dim_w != r * r) return "identity fails for " + describe(f);
    if (c.dim_w != dim_w(f)) return "dim_w disagrees with certificate for " + describe(f);
    if (c.dim_w < r) return "dim_W below r for " + describe(f);
    if ((c.dim_w == r) != (c.classification == Classification::InfinitesimallyRigid)) {
      return "dim_W = r does not match rigidity for " + describe(f);
    }
    // Lineality sits inside the span, and equals it exactly when 0 is interior.
    const std::size_t span = oracle::rank_of(oracle::dual_generators(f.a(), f.b()));
    if (span != c.span_rank || c.lineality_dim > span) return "span/lineality inconsistent for " + describe(f);
    if ((c.lineality_dim == span) != c.relint_witness.has_value()) {
      return "witness presence does not match lineality = span for " + describe(f);
    }
    return {};
  });
}

PropertyOutcome witness_reverification(std::size_t instances, std::uint64_t seed) {
  return run("witness re-verification Z lambda = 0, lambda >= 1", instances, seed, [](Rng& rng) -> std::string {
    // Bias toward pairs that have witnesses.
    const FactorizationPair f = rng() % 2 ? random_rigid_pair(rng) : random_mixed_pair(rng);
    const RigidityCertificate c = certify(f, {std::nullopt});
    if (!c.relint_witness) return {};
    if (!oracle::positive_zero_combination(oracle::dual_generators(f.a(), f.b()), c.relint_witness->coefficients)) {
      return "witness does not verify for " + describe(f);
    }
    return {};
  });
}

PropertyOutcome necessary_condition_consistency(std::size_t instances, std::uint64_t seed) {
  return run("rigid verdicts pass all applicable necessary conditions", instances, seed, [](Rng& rng) -> std::string {
    const FactorizationPair f = random_mixed_pair(rng);
    const RigidityCertificate c = certify(f, {std::nullopt});
    if (c.classification != Classification::InfinitesimallyRigid) return {};
    const ConditionReport report = necessary_conditions_report(f);
    if (!report.all_applicable_pass()) return "rigid pair fails a necessary condition: " + describe(f);
    if (c.generator_count == min_rigid_zero_count(f.r())) {
      for (const auto& x : f.product().entries())
        if (x <= 0) return "rigid pair with r^2-r+1 zeros has a zero product entry: " + describe(f);
    }
    return {};
  });
}

PropertyOutcome kruskal_against_oracle(std::size_t instances, std::uint64_t seed) {
  return run("kruskal_rank against the all-subsets oracle", instances, seed, [](Rng& rng) -> std::string {
    const std::size_t rows = uniform_index(rng, 1, 5);
    const std::size_t cols = uniform_index(rng, 0, 8);
    RationalMatrix m = random_matrix(rng, rows, cols, -2, 2, 0.3);
    // Occasionally duplicate a column to force small Kruskal ranks.
    if (cols >= 2 && rng() % 4 == 0) {
      const std::size_t from = uniform_index(rng, 0, cols - 1), to = uniform_index(rng, 0, cols - 1);
      for (std::size_t i = 0; i < rows; ++i) m(i, to) = m(i, from) * 2;
    }
    oracle::Columns columns;
    for (std::size_t j = 0; j < cols; ++j) columns.push_back(m.column(j));
    const std::size_t expected = oracle::kruskal_rank(columns);
    const auto serial = kruskal_rank(m, kDefaultKruskalBudget, Execution::Serial);
    const auto parallel = kruskal_rank(m, kDefaultKruskalBudget, Execution::Parallel);
    if (serial != std::optional<std::size_t>(expected) || parallel != serial) {
      return std::to_string(rows) + "x" + std::to_string(cols) + " matrix: expected " + std::to_string(expected);
    }
    if (*serial > rank(m)) return "kruskal rank exceeds rank";
    return {};
  });
}

PropertyOutcome cone_membership_against_oracle(std::size_t instances, std::uint64_t seed) {
  return run("cone membership in R^3 against the Caratheodory oracle", instances, seed, [](Rng& rng) -> std::string {
    const std::size_t g = uniform_index(rng, 0, 6);
    // Half of the cones are confined to the plane z = 0 to exercise
    // lower-dimensional cases.
    const bool flat = rng() % 2 == 0;
    ConeByGenerators cone{3, {}};
    for (std::size_t i = 0; i < g; ++i) {
      RationalVector v = random_matrix(rng, 3, 1, -2, 2, 0.2).column(0);
      if (flat) v[2] = 0;
      cone.generators.push_back(v);
    }
    RationalVector v = random_matrix(rng, 3, 1, -3, 3, 0.2).column(0);
    if (flat && rng() % 2 == 0) v[2] = 0;
    const bool expected = oracle::cone_member_r3(cone.generators, v);
    if (member(cone, v) != expected) return std::string("membership disagrees (oracle says ") + (expected ? "in" : "out") + ")";
    for (const auto& gen : cone.generators)
      if (!member(cone, gen)) return "a generator is not a member of its cone";
    return {};
  });
}

PropertyOutcome canonical_form_laws(std::size_t instances, std::uint64_t seed) {
  return run("canonical_form idempotence, orbit constancy and filter invariance", instances, seed,
             [](Rng& rng) -> std::string {
               const std::size_t r = uniform_index(rng, 2, 4);
               const std::size_t m = uniform_index(rng, 2, 6);
               const std::size_t n = rng() % 3 == 0 ? m : uniform_index(rng, 2, 6);
               const ZeroPattern p = random_pattern(rng, m, n, r, 0.35);
               const ZeroPattern c = canonical_form(p);
               if (canonical_form(c) != c) return "canonical_form is not idempotent";
               const PatternGroupElement g = random_group_element(rng, m, n, r);
               const ZeroPattern q = apply(g, p);
               if (canonical_form(q) != c) return "canonical_form differs within an orbit";
               for (auto f : {PatternFilter::Wpoint, PatternFilter::PositiveProduct}) {
                 const FilterSet one = FilterSet{}.with(f);
                 if (passes(p, one) != passes(q, one)) return "a filter is not group invariant";
               }
               // Transposition swaps rows of A with columns of B.
               const bool rows_q = g.transposed ? all_columns_covered_b(q) : row_coverage_a(q);
               if (row_coverage_a(p) != rows_q) return "row coverage of A does not transform with the group";
               const FilterSet all = theorem_filters();
               if (passes(p, all) != passes(c, all)) return "filters disagree on the canonical form";
               // The oracle walks the whole group; skip it when that is too large.
               if (group_order(m, n, r) <= kOracleGroupLimit &&
                   oracle::brute_canonical(c) != oracle::brute_canonical(p)) {
                 return "oracle sees different orbits";
               }
               return {};
             });
}

PropertyOutcome cp_identity_rigidity(std::size_t instances, std::uint64_t seed) {
  return run("identity-type symmetric factors are rigid for r = 2..5", instances, seed, [](Rng& rng) -> std::string {
    const std::size_t r = 2 + rng() % 4;
    // Scaled identity, extra strictly positive rows, rows shuffled.
    const std::size_t extra = uniform_index(rng, 0, 2);
    RationalMatrix a(r + extra, r);
    for (std::size_t k = 0; k < r; ++k) a(k, k) = small_positive_rational(rng);
    for (std::size_t i = r; i < r + extra; ++i)
      for (std::size_t k = 0; k < r; ++k) a(i, k) = small_positive_rational(rng);
    const auto rows = random_permutation(rng, r + extra);
    RationalMatrix shuffled(r + extra, r);
    for (std::size_t i = 0; i < r + extra; ++i)
      for (std::size_t k = 0; k < r; ++k) shuffled(rows[i], k) = a(i, k);
    const RigidityCertificate c = certify_cp(SymmetricFactor(shuffled), {std::nullopt});
    if (c.classification != Classification::InfinitesimallyRigid || c.dim_w != 0) {
      return "identity-type factor with r = " + std::to_string(r) + " is not rigid";
    }
    if (r == 2 && !oracle::cp_rank2_rigid_by_sampling(shuffled)) return "r = 2 oracle disagrees";
    return {};
  });
}

std::vector<PropertyOutcome> run_all_property_suites(std::size_t instances, std::uint64_t seed) {
  return {certificate_invariance(instances, seed),
          duality_identity(instances, seed + 1),
          witness_reverification(instances, seed + 2),
          necessary_condition_consistency(instances, seed + 3),
          kruskal_against_oracle(instances, seed + 4),
          cone_membership_against_oracle(instances, seed + 5),
          canonical_form_laws(instances, seed + 6),
          cp_identity_rigidity(instances, seed + 7)};
}

}  // namespace testing_support
