#include "nmfr/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "nmfr/cpr.hpp"
#include "nmfr/errors.hpp"
#include "nmfr/execution.hpp"
#include "nmfr/fixtures.hpp"
#include "nmfr/io.hpp"
#include "nmfr/realize.hpp"

namespace nmfr {

namespace {

std::string support_text(const std::vector<std::pair<std::size_t, std::size_t>>& support) {
  std::string out;
  for (const auto& [i, k] : support) {
    if (!out.empty()) out += ' ';
    out += "(" + std::to_string(i + 1) + "," + std::to_string(k + 1) + ")";
  }
  return out.empty() ? "-" : out;
}

void print_certificate(std::ostream& out, const RigidityCertificate& cert, bool symmetric) {
  out << "classification: " << to_string(cert.classification) << '\n'
      << "generators:     " << cert.generator_count << '\n'
      << "span rank:      " << cert.span_rank << '\n'
      << "lineality dim:  " << cert.lineality_dim << '\n'
      << (symmetric ? "dim W_A:        " : "dim W:          ") << cert.dim_w << '\n'
      << "relint witness: " << (cert.relint_witness ? "yes" : "no") << '\n'
      << "kruskal rank:   " << (cert.kruskal_rank ? std::to_string(*cert.kruskal_rank) : "over budget") << '\n';
  if (cert.classification == Classification::PartiallyInfinitesimallyRigid) {
    out << "V dimension:    " << cert.v_basis.size() << '\n' << "V support:      " << support_text(cert.v_support) << '\n';
  }
}

void print_conditions(std::ostream& out, const ConditionReport& report) {
  out << "necessary conditions:\n";
  for (const auto& c : report.conditions) {
    out << "  " << std::left << std::setw(17) << c.name << (c.applicable ? (c.passed ? "pass" : "FAIL") : "n/a ")
        << "  " << c.detail << '\n';
  }
}

struct CheckOptions {
  std::string path;
  bool symmetric = false;
  bool json = false;
  std::size_t budget = kDefaultKruskalBudget;
};

int cmd_check(const CheckOptions& o, std::ostream& out) {
  const std::string text = read_text_file(o.path);
  CertifyOptions options;
  options.kruskal_budget = o.budget;
  if (o.symmetric) {
    const SymmetricFactor f(parse_symmetric(text).a);
    const RigidityCertificate cert = certify_cp(f, options);
    if (o.json) {
      out << certificate_document(f, cert).dump(2) << '\n';
    } else {
      out << "symmetric factor: " << f.n() << "x" << f.r() << ", r = " << f.r() << '\n';
      print_certificate(out, cert, true);
      print_conditions(out, cp_necessary_conditions(f));
    }
    return kExitOk;
  }
  const FactorizationDocument doc = parse_factorization(text);
  const FactorizationPair f(doc.a, *doc.b);
  const RigidityCertificate cert = certify(f, options);
  if (o.json) {
    out << certificate_document(f, cert).dump(2) << '\n';
  } else {
    if (!doc.name.empty()) out << "name: " << doc.name << '\n';
    out << "factorization: " << f.m() << "x" << f.n() << ", r = " << f.r() << '\n';
    print_certificate(out, cert, false);
    print_conditions(out, necessary_conditions_report(f));
  }
  return kExitOk;
}

struct EnumerateOptions {
  std::vector<std::size_t> shape;
  std::size_t rank = 4;
  std::optional<std::size_t> zeros;
  std::string filters = "table1";
  std::string out_path;
  bool print = false;
  bool serial = false;
};

int cmd_enumerate(const EnumerateOptions& o, std::ostream& out) {
  if (o.rank == 0 || o.rank > 8) throw InputError("--rank must be between 1 and 8");
  if (o.shape[0] == 0 || o.shape[1] == 0 || o.shape[0] > 64 || o.shape[1] > 64) {
    throw InputError("--shape entries must be between 1 and 64");
  }
  const FilterSet filters = parse_filters(o.filters);
  const std::size_t zeros = o.zeros.value_or(min_rigid_zero_count(o.rank));
  const EnumerationResult result = enumerate_patterns(o.shape[0], o.shape[1], o.rank, zeros, filters,
                                                      o.serial ? Execution::Serial : Execution::Parallel);
  std::string stream;
  for (const auto& p : result.patterns) {
    if (!stream.empty()) stream += '\n';
    stream += format_pattern(p);
  }
  if (!o.out_path.empty()) write_text_file(o.out_path, stream);
  if (o.print) out << stream << (stream.empty() ? "" : "\n");
  out << "shape " << o.shape[0] << "x" << o.shape[1] << ", r = " << o.rank << ", zeros = " << zeros
      << ", filters = " << describe(filters) << '\n';
  if (filters.has(PatternFilter::ZeroRectangles)) {
    out << "removed by zero-rectangles: " << result.removed_by_zero_rectangles << '\n';
  }
  out << "count: " << result.patterns.size() << '\n';
  return kExitOk;
}

struct RealizeOptions {
  std::string pattern_path;
  std::uint64_t seed = 0;
  std::vector<std::int64_t> range{1, 1000};
  std::size_t max_samples = 10'000;
  std::string out_path;
  bool json = false;
};

int cmd_realize(const RealizeOptions& o, std::ostream& out, std::ostream& err) {
  const ZeroPattern p = parse_pattern(read_text_file(o.pattern_path));
  if (!check_wpoint(p)) {
    err << "error: pattern cannot be infinitesimally rigid: it needs at least " << min_rigid_zero_count(p.r())
        << " zeros (has " << p.zero_count() << ") and, for every ordered pair (i,j), a row of A and a column of B"
        << " zero at i and not at j (" << (boundary_closed(p) ? "holds" : "fails") << ")\n";
    return kExitInputError;
  }
  RealizationSearchConfig cfg;
  cfg.seed = o.seed;
  cfg.entry_low = o.range[0];
  cfg.entry_high = o.range[1];
  cfg.max_samples = o.max_samples;
  const auto found = realize_pattern(p, cfg);
  if (!found) {
    err << "no infinitesimally rigid realization within " << o.max_samples << " samples (seed " << o.seed << ")\n";
    return kExitFailure;
  }
  const std::string name = "realization seed " + std::to_string(o.seed) + " sample " + std::to_string(found->sample_index);
  const std::string text = format_factorization(found->pair, name);
  if (!o.out_path.empty()) write_text_file(o.out_path, text);
  if (o.json) {
    out << certificate_document(found->pair, found->certificate, {std::nullopt, o.seed, found->sample_index}).dump(2)
        << '\n';
  } else {
    if (o.out_path.empty()) out << text << '\n';
    out << "sample index:   " << found->sample_index << '\n';
    print_certificate(out, found->certificate, false);
  }
  return kExitOk;
}

int cmd_verify_fixtures(std::ostream& out) {
  const auto& fixtures = reference_fixtures();
  std::vector<FixtureCheck> checks(fixtures.size());
  const long total = static_cast<long>(fixtures.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < total; ++i) checks[i] = verify_fixture(fixtures[i]);

  out << " #  product  classification         dim W  kruskal  result\n";
  std::size_t passed = 0;
  for (const auto& c : checks) {
    out << std::right << std::setw(2) << c.index << "  " << std::left << std::setw(7)
        << (c.product_matches ? "exact" : "DIFF") << "  " << std::setw(21) << to_string(c.classification) << "  "
        << std::setw(5) << c.dim_w << "  " << std::setw(7)
        << (c.kruskal_rank ? std::to_string(*c.kruskal_rank) : "-") << "  " << (c.passed ? "pass" : "FAIL") << '\n';
    for (const auto& d : c.product_diffs) out << "      " << d << '\n';
    passed += c.passed;
  }
  out << passed << "/" << checks.size() << " fixtures pass\n";
  return passed == checks.size() ? kExitOk : kExitFailure;
}

struct LiftOptions {
  std::string path;
  std::string out_path;
  bool json = false;
};

int cmd_lift(const LiftOptions& o, std::ostream& out, std::ostream& err) {
  const FactorizationDocument doc = parse_factorization(read_text_file(o.path));
  const FactorizationPair f(doc.a, *doc.b);
  Lift lift = [&] {
    try {
      return lift_partially_rigid(f);
    } catch (const PreconditionError& e) {
      throw LiftError(e.what());
    }
  }();
  const std::string text = format_factorization(lift.pair, doc.name.empty() ? "" : doc.name + " (lifted)");
  if (!o.out_path.empty()) write_text_file(o.out_path, text);
  if (o.json) {
    out << certificate_document(lift.pair, lift.certificate).dump(2) << '\n';
  } else {
    if (o.out_path.empty()) out << text << '\n';
    print_certificate(out, lift.certificate, false);
  }
  (void)err;
  return kExitOk;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  configure_threads_from_env();

  CLI::App app{"Exact rigidity certificates for nonnegative matrix factorizations"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  CheckOptions check;
  auto* check_cmd = app.add_subcommand("check", "Certify a factorization file (A, blank line, B)");
  check_cmd->add_option("path", check.path, "Factorization file")->required();
  check_cmd->add_flag("--symmetric", check.symmetric, "Input is a single factor A of M = AA^T");
  check_cmd->add_option("--kruskal-budget", check.budget, "Maximum subset rank tests for the Kruskal rank");
  check_cmd->add_flag("--json", check.json, "Emit a certificate document");

  CheckOptions cp_check;
  cp_check.symmetric = true;
  auto* cp_cmd = app.add_subcommand("cp-check", "Certify a symmetric factor file ('n r' header, n rows)");
  cp_cmd->add_option("path", cp_check.path, "Symmetric factor file")->required();
  cp_cmd->add_option("--kruskal-budget", cp_check.budget, "Maximum subset rank tests for the Kruskal rank");
  cp_cmd->add_flag("--json", cp_check.json, "Emit a certificate document");

  EnumerateOptions en;
  auto* en_cmd = app.add_subcommand("enumerate", "Enumerate canonical zero patterns");
  en_cmd->add_option("--shape", en.shape, "m n")->expected(2)->required();
  en_cmd->add_option("--rank", en.rank, "Inner dimension r")->required();
  en_cmd->add_option("--zeros", en.zeros, "Zero count (default r^2-r+1)");
  en_cmd->add_option("--filters", en.filters,
                     "Comma list of wpoint, column-bound, row-coverage-a, column-coverage-b, zero-rectangles, "
                     "positive-product, or a preset: table1, theorem, none");
  en_cmd->add_option("--out", en.out_path, "Write the patterns to this file");
  en_cmd->add_flag("--print", en.print, "Write the patterns to standard output");
  en_cmd->add_flag("--serial", en.serial, "Use the serial enumerator");

  RealizeOptions re;
  auto* re_cmd = app.add_subcommand("realize", "Search for an infinitesimally rigid realization of a pattern");
  re_cmd->add_option("--pattern", re.pattern_path, "Pattern file")->required();
  re_cmd->add_option("--seed", re.seed, "Random seed");
  re_cmd->add_option("--range", re.range, "lo hi: inclusive range of nonzero entries")->expected(2);
  re_cmd->add_option("--max-samples", re.max_samples, "Sample budget");
  re_cmd->add_option("--out", re.out_path, "Write the factorization to this file");
  re_cmd->add_flag("--json", re.json, "Emit a certificate document");

  auto* fx_cmd = app.add_subcommand("verify-fixtures", "Re-verify the embedded 5x5 reference factorizations");

  LiftOptions li;
  auto* li_cmd = app.add_subcommand("lift", "Lift a rigid rank r pair to a partially rigid rank r+1 pair");
  li_cmd->add_option("path", li.path, "Factorization file")->required();
  li_cmd->add_option("--out", li.out_path, "Write the lifted factorization to this file");
  li_cmd->add_flag("--json", li.json, "Emit a certificate document");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    if (*check_cmd) return cmd_check(check, out);
    if (*cp_cmd) return cmd_check(cp_check, out);
    if (*en_cmd) return cmd_enumerate(en, out);
    if (*re_cmd) return cmd_realize(re, out, err);
    if (*fx_cmd) return cmd_verify_fixtures(out);
    if (*li_cmd) return cmd_lift(li, out, err);
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const DimensionMismatch& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const PreconditionError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const LiftError& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitInputError;
}

}  // namespace nmfr
