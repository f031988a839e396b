#include "nmfr/realize.hpp"

#include <atomic>
#include <limits>
#include <random>

#include "nmfr/errors.hpp"

namespace nmfr {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Uniform on [lo, hi] by rejection; unlike std::uniform_int_distribution the
// output is the same on every standard library.
std::int64_t uniform(std::mt19937_64& gen, std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(gen());
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % span;
  std::uint64_t x;
  do x = gen();
  while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

void validate(const ZeroPattern& p, const RealizationSearchConfig& cfg) {
  if (cfg.entry_low <= 0 || cfg.entry_low > cfg.entry_high) {
    throw InputError("entry range must satisfy 0 < low <= high, got [" + std::to_string(cfg.entry_low) + ", " +
                     std::to_string(cfg.entry_high) + "]");
  }
  if (!p.satisfies_invariants()) throw InputError("pattern has an all-zero row of A or column of B");
}

bool rigid_sample(const ZeroPattern& p, const RealizationSearchConfig& cfg, std::size_t index) {
  try {
    const auto cert = certify(sample_realization(p, cfg, index), {std::nullopt, Execution::Serial});
    return cert.classification == Classification::InfinitesimallyRigid;
  } catch (const InputError&) {
    return false;
  }
}

}  // namespace

FactorizationPair sample_realization(const ZeroPattern& p, const RealizationSearchConfig& cfg, std::size_t index) {
  std::mt19937_64 gen(splitmix64(cfg.seed ^ splitmix64(index)));
  RationalMatrix a(p.m(), p.r());
  RationalMatrix b(p.r(), p.n());
  for (std::size_t i = 0; i < p.m(); ++i)
    for (std::size_t k = 0; k < p.r(); ++k)
      if (!p.zero_a(i, k)) a(i, k) = Rational(uniform(gen, cfg.entry_low, cfg.entry_high));
  for (std::size_t k = 0; k < p.r(); ++k)
    for (std::size_t j = 0; j < p.n(); ++j)
      if (!p.zero_b(k, j)) b(k, j) = Rational(uniform(gen, cfg.entry_low, cfg.entry_high));
  return FactorizationPair(std::move(a), std::move(b));
}

std::optional<Realization> realize_pattern(const ZeroPattern& p, const RealizationSearchConfig& cfg, Execution exec) {
  validate(p, cfg);
  if (!check_wpoint(p)) throw PreconditionError("pattern fails the zero-count / boundary-closed conditions");

  std::size_t found = cfg.max_samples;
  if (exec == Execution::Serial) {
    for (std::size_t t = 0; t < cfg.max_samples; ++t) {
      if (rigid_sample(p, cfg, t)) {
        found = t;
        break;
      }
    }
  } else {
    std::atomic<std::size_t> best{cfg.max_samples};
    const long total = static_cast<long>(cfg.max_samples);
#pragma omp parallel for schedule(dynamic, 4)
    for (long t = 0; t < total; ++t) {
      const auto idx = static_cast<std::size_t>(t);
      if (idx >= best.load(std::memory_order_relaxed)) continue;
      if (!rigid_sample(p, cfg, idx)) continue;
      std::size_t cur = best.load();
      while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
      }
    }
    found = best.load();
  }
  if (found == cfg.max_samples) return std::nullopt;

  FactorizationPair pair = sample_realization(p, cfg, found);
  RigidityCertificate cert = certify(pair);
  return Realization{std::move(pair), found, std::move(cert)};
}

FactorizationPair extend_positive(const FactorizationPair& f, const Rational& delta) {
  if (delta <= 0) throw InputError("extension offset must be positive, got " + to_string(delta));
  const std::size_t r = f.r();
  RationalMatrix rows(r, r);
  RationalMatrix cols(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) {
      rows(i, j) = i == j ? Rational(1) : delta;
      cols(i, j) = i == j ? Rational(1) + delta : delta;
    }
  }
  return FactorizationPair(f.a().with_rows_appended(rows), f.b().with_columns_appended(cols));
}

Lift lift_partially_rigid(const FactorizationPair& f) {
  const RigidityCertificate cert = certify(f, {std::nullopt, Execution::Serial});
  if (cert.classification != Classification::InfinitesimallyRigid) {
    throw PreconditionError("lift needs an infinitesimally rigid input, got " + to_string(cert.classification));
  }
  const std::size_t m = f.m(), n = f.n(), r = f.r();
  const DualConeGenerators z = build_dual_generators(f);

  // Columns 0..m-1 hold x, column m holds s.
  RationalMatrix eq(r, m + 1);
  for (std::size_t g = 0; g < z.count(); ++g) {
    const auto& src = z.sources[g];
    if (src.side == ZeroSide::A) eq(src.col, src.row) += cert.relint_witness->coefficients[g];
  }

  RationalMatrix b_ext = f.b().with_rows_appended(RationalMatrix(1, n));
  RationalMatrix ones(r + 1, 1);
  for (std::size_t k = 0; k <= r; ++k) ones(k, 0) = 1;
  b_ext = b_ext.with_columns_appended(ones);

  std::string failures;
  for (std::size_t attempt = 0; attempt <= r; ++attempt) {
    RationalVector w(r);
    for (std::size_t j = 0; j < n; ++j) {
      const Rational weight = attempt == 0 ? 1 : static_cast<long>((j + attempt) % r + 1);
      for (std::size_t k = 0; k < r; ++k) w[k] += weight * f.b()(k, j);
    }
    for (std::size_t k = 0; k < r; ++k) eq(k, m) = -w[k];

    const auto sol = lp_feasible(eq, RationalVector(r), RationalVector(m + 1, Rational(1)));
    if (!sol) {
      failures += " attempt " + std::to_string(attempt) + ": no positive solution;";
      continue;
    }
    RationalMatrix column(m, 1);
    RationalVector x(m);
    for (std::size_t j = 0; j < m; ++j) column(j, 0) = x[j] = (*sol)[j];
    for (auto& wk : w) wk *= (*sol)[m];

    try {
      FactorizationPair lifted(f.a().with_columns_appended(column), b_ext);
      RigidityCertificate lifted_cert = certify(lifted);
      if (lifted_cert.classification != Classification::PartiallyInfinitesimallyRigid) {
        failures += " attempt " + std::to_string(attempt) + ": lifted pair is " + to_string(lifted_cert.classification) + ";";
        continue;
      }
      return Lift{std::move(lifted), std::move(x), std::move(w), attempt, std::move(lifted_cert)};
    } catch (const InputError& e) {
      failures += " attempt " + std::to_string(attempt) + ": " + e.what() + ";";
    }
  }
  failures.pop_back();
  throw LiftError("lift failed:" + failures);
}

}  // namespace nmfr
