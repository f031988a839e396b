#include "nmfr/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <sstream>

#include "nmfr/errors.hpp"

namespace nmfr {

namespace {

struct Line {
  std::size_t number;  // 1-based
  std::string text;    // trimmed
};

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::string at_line(std::size_t n) { return "line " + std::to_string(n) + ": "; }

// Non-empty, non-comment lines; metadata comments are captured on the side.
std::vector<Line> content_lines(std::string_view text, std::string* name = nullptr, std::string* source = nullptr) {
  std::vector<Line> out;
  std::size_t number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    ++number;
    std::string line = trim(text.substr(pos, end - pos));
    pos = end + 1;
    if (line.empty()) continue;
    if (line[0] == '#') {
      const std::string body = trim(std::string_view(line).substr(1));
      if (name && body.rfind("name:", 0) == 0) *name = trim(std::string_view(body).substr(5));
      if (source && body.rfind("source:", 0) == 0) *source = trim(std::string_view(body).substr(7));
      continue;
    }
    out.push_back({number, std::move(line)});
  }
  return out;
}

std::vector<std::string> tokens(const std::string& s) {
  std::istringstream in(s);
  std::vector<std::string> out;
  for (std::string t; in >> t;) out.push_back(t);
  return out;
}

std::size_t parse_count(const std::string& token, std::size_t line) {
  std::size_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc() || ptr != end) throw InputError(at_line(line) + "expected a nonnegative integer, got '" + token + "'");
  return value;
}

class LineCursor {
 public:
  explicit LineCursor(std::vector<Line> lines) : lines_(std::move(lines)) {}

  bool done() const { return next_ >= lines_.size(); }
  const Line& take(const char* what) {
    if (done()) {
      throw InputError("unexpected end of input: expected " + std::string(what) +
                       (lines_.empty() ? "" : " after line " + std::to_string(lines_.back().number)));
    }
    return lines_[next_++];
  }

  RationalMatrix matrix(const char* label) {
    const Line& header = take((std::string(label) + " header").c_str());
    const auto dims = tokens(header.text);
    if (dims.size() != 2) throw InputError(at_line(header.number) + label + " header must be 'rows cols'");
    const std::size_t rows = parse_count(dims[0], header.number);
    const std::size_t cols = parse_count(dims[1], header.number);
    RationalMatrix m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i) {
      const Line& line = take((std::string("row of ") + label).c_str());
      const auto row = tokens(line.text);
      if (row.size() != cols) {
        throw InputError(at_line(line.number) + label + " row " + std::to_string(i + 1) + " has " +
                         std::to_string(row.size()) + " entries, expected " + std::to_string(cols));
      }
      for (std::size_t j = 0; j < cols; ++j) {
        try {
          m(i, j) = parse_rational(row[j]);
        } catch (const InputError& e) {
          throw InputError(at_line(line.number) + e.what());
        }
      }
    }
    return m;
  }

  void expect_end() const {
    if (!done()) throw InputError(at_line(lines_[next_].number) + "unexpected trailing content");
  }

 private:
  std::vector<Line> lines_;
  std::size_t next_ = 0;
};

}  // namespace

RationalMatrix parse_matrix(std::string_view text) {
  LineCursor cursor(content_lines(text));
  RationalMatrix m = cursor.matrix("matrix");
  cursor.expect_end();
  return m;
}

FactorizationDocument parse_factorization(std::string_view text) {
  FactorizationDocument doc;
  LineCursor cursor(content_lines(text, &doc.name, &doc.source));
  doc.a = cursor.matrix("A");
  doc.b = cursor.matrix("B");
  cursor.expect_end();
  return doc;
}

FactorizationDocument parse_symmetric(std::string_view text) {
  FactorizationDocument doc;
  LineCursor cursor(content_lines(text, &doc.name, &doc.source));
  doc.a = cursor.matrix("A");
  cursor.expect_end();
  return doc;
}

std::string format_matrix(const RationalMatrix& m) {
  std::string out = std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ' ';
      out += to_string(m(i, j));
    }
    out += '\n';
  }
  return out;
}

namespace {

std::string metadata(const std::string& name, const std::string& source) {
  std::string out;
  if (!name.empty()) out += "# name: " + name + "\n";
  if (!source.empty()) out += "# source: " + source + "\n";
  return out;
}

}  // namespace

std::string format_factorization(const FactorizationPair& f, const std::string& name, const std::string& source) {
  return metadata(name, source) + format_matrix(f.a()) + "\n" + format_matrix(f.b());
}

std::string format_symmetric(const SymmetricFactor& f, const std::string& name) {
  return metadata(name, "") + format_matrix(f.a());
}

namespace {

std::vector<bool> pattern_row(const Line& line, std::size_t width, const char* label) {
  std::string s;
  for (char ch : line.text)
    if (ch != ' ' && ch != '\t') s += ch;
  if (s.size() != width) {
    throw InputError(at_line(line.number) + label + " row has " + std::to_string(s.size()) + " symbols, expected " +
                     std::to_string(width));
  }
  std::vector<bool> out(width);
  for (std::size_t k = 0; k < width; ++k) {
    if (s[k] != '0' && s[k] != '.') throw InputError(at_line(line.number) + "pattern symbols are '0' and '.'");
    out[k] = s[k] == '0';
  }
  return out;
}

ZeroPattern next_pattern(LineCursor& cursor) {
  const Line& header = cursor.take("pattern header");
  const auto dims = tokens(header.text);
  if (dims.size() != 3) throw InputError(at_line(header.number) + "pattern header must be 'm n r'");
  const std::size_t m = parse_count(dims[0], header.number);
  const std::size_t n = parse_count(dims[1], header.number);
  const std::size_t r = parse_count(dims[2], header.number);
  if (r == 0 || r > 8) throw InputError(at_line(header.number) + "pattern rank must be between 1 and 8");
  ZeroPattern p(m, n, r);
  for (std::size_t i = 0; i < m; ++i) {
    const auto row = pattern_row(cursor.take("row of A"), r, "A");
    for (std::size_t k = 0; k < r; ++k) p.set_zero_a(i, k, row[k]);
  }
  for (std::size_t k = 0; k < r; ++k) {
    const auto row = pattern_row(cursor.take("row of B"), n, "B");
    for (std::size_t j = 0; j < n; ++j) p.set_zero_b(k, j, row[j]);
  }
  return p;
}

}  // namespace

ZeroPattern parse_pattern(std::string_view text) {
  LineCursor cursor(content_lines(text));
  ZeroPattern p = next_pattern(cursor);
  cursor.expect_end();
  return p;
}

std::vector<ZeroPattern> parse_patterns(std::string_view text) {
  LineCursor cursor(content_lines(text));
  std::vector<ZeroPattern> out;
  while (!cursor.done()) out.push_back(next_pattern(cursor));
  return out;
}

std::string format_pattern(const ZeroPattern& p) {
  std::string out = std::to_string(p.m()) + " " + std::to_string(p.n()) + " " + std::to_string(p.r()) + "\n";
  for (std::size_t i = 0; i < p.m(); ++i) {
    for (std::size_t k = 0; k < p.r(); ++k) out += p.zero_a(i, k) ? '0' : '.';
    out += '\n';
  }
  out += '\n';
  for (std::size_t k = 0; k < p.r(); ++k) {
    for (std::size_t j = 0; j < p.n(); ++j) out += p.zero_b(k, j) ? '0' : '.';
    out += '\n';
  }
  return out;
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path.string());
  out << text;
  if (!out) throw InputError("error writing " + path.string());
}

// --- JSON -------------------------------------------------------------------

namespace {

Rational rational_from_json(const Json& j) {
  if (!j.is_string()) throw InputError("expected a rational string, got " + j.dump());
  return parse_rational(j.get<std::string>());
}

// Integers built in code are stored signed, parsed ones unsigned; accept both.
std::optional<std::size_t> as_count(const Json& j) {
  if (j.is_number_unsigned()) return j.get<std::size_t>();
  if (j.is_number_integer() && j.get<long long>() >= 0) return static_cast<std::size_t>(j.get<long long>());
  return std::nullopt;
}

std::size_t count_from_json(const Json& j, const char* key) {
  const auto value = j.contains(key) ? as_count(j.at(key)) : std::nullopt;
  if (!value) throw InputError(std::string("certificate field '") + key + "' must be a nonnegative integer");
  return *value;
}

}  // namespace

Json matrix_to_json(const RationalMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

RationalMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) throw InputError("matrix must be an array of rows");
  const std::size_t rows = j.size();
  const std::size_t cols = rows == 0 ? 0 : j.at(0).size();
  RationalMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i) {
    if (!j.at(i).is_array() || j.at(i).size() != cols) throw InputError("matrix rows must have equal length");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rational_from_json(j.at(i).at(k));
  }
  return m;
}

Json certificate_to_json(const RigidityCertificate& cert) {
  Json j;
  j["r"] = cert.r;
  j["classification"] = to_string(cert.classification);
  j["generator_count"] = cert.generator_count;
  j["span_rank"] = cert.span_rank;
  j["lineality_dim"] = cert.lineality_dim;
  j["dim_w"] = cert.dim_w;
  if (cert.relint_witness) {
    Json w = Json::array();
    for (const auto& c : cert.relint_witness->coefficients) w.push_back(to_string(c));
    j["relint_witness"] = std::move(w);
  } else {
    j["relint_witness"] = nullptr;
  }
  j["kruskal_rank"] = cert.kruskal_rank ? Json(*cert.kruskal_rank) : Json(nullptr);
  Json support = Json::array();
  for (const auto& [i, k] : cert.v_support) support.push_back({i + 1, k + 1});
  j["v_support"] = std::move(support);
  Json basis = Json::array();
  for (const auto& d : cert.v_basis) basis.push_back(matrix_to_json(d));
  j["v_basis"] = std::move(basis);
  return j;
}

RigidityCertificate certificate_from_json(const Json& j) {
  if (!j.is_object()) throw InputError("certificate must be an object");
  RigidityCertificate cert;
  cert.r = count_from_json(j, "r");
  const auto cls = classification_from_string(j.value("classification", std::string()));
  if (!cls) throw InputError("unknown classification " + j.value("classification", std::string("<missing>")));
  cert.classification = *cls;
  cert.generator_count = count_from_json(j, "generator_count");
  cert.span_rank = count_from_json(j, "span_rank");
  cert.lineality_dim = count_from_json(j, "lineality_dim");
  cert.dim_w = count_from_json(j, "dim_w");
  if (const auto& w = j.at("relint_witness"); !w.is_null()) {
    PositiveCombinationWitness witness;
    for (const auto& c : w) witness.coefficients.push_back(rational_from_json(c));
    cert.relint_witness = std::move(witness);
  }
  if (const auto& k = j.at("kruskal_rank"); !k.is_null()) cert.kruskal_rank = count_from_json(j, "kruskal_rank");
  for (const auto& e : j.at("v_support")) {
    const bool pair = e.is_array() && e.size() == 2;
    const std::size_t i = pair ? as_count(e[0]).value_or(0) : 0;
    const std::size_t k = pair ? as_count(e[1]).value_or(0) : 0;
    if (i == 0 || k == 0) throw InputError("v_support entries must be 1-based index pairs, got " + e.dump());
    cert.v_support.emplace_back(i - 1, k - 1);
  }
  for (const auto& d : j.at("v_basis")) cert.v_basis.push_back(matrix_from_json(d));
  return cert;
}

namespace {

Json context_json(const CertificateContext& context) {
  Json j = Json::object();
  if (context.filters) j["filters"] = *context.filters;
  if (context.seed) j["seed"] = *context.seed;
  if (context.sample_index) j["sample_index"] = *context.sample_index;
  return j;
}

}  // namespace

Json certificate_document(const FactorizationPair& f, const RigidityCertificate& cert,
                          const CertificateContext& context) {
  Json doc;
  doc["format"] = "nmfr-certificate";
  doc["tool_version"] = kToolVersion;
  doc["kind"] = "factorization";
  doc["input"] = {{"m", f.m()}, {"n", f.n()}, {"r", f.r()}, {"A", matrix_to_json(f.a())}, {"B", matrix_to_json(f.b())}};
  doc["context"] = context_json(context);
  doc["certificate"] = certificate_to_json(cert);
  return doc;
}

Json certificate_document(const SymmetricFactor& f, const RigidityCertificate& cert, const CertificateContext& context) {
  Json doc;
  doc["format"] = "nmfr-certificate";
  doc["tool_version"] = kToolVersion;
  doc["kind"] = "symmetric";
  doc["input"] = {{"n", f.n()}, {"r", f.r()}, {"A", matrix_to_json(f.a())}};
  doc["context"] = context_json(context);
  doc["certificate"] = certificate_to_json(cert);
  return doc;
}

static DocumentCheck verify_document_fields(const Json& doc) {
  if (!doc.is_object() || doc.value("format", std::string()) != "nmfr-certificate") {
    throw InputError("not an nmfr certificate document");
  }
  const std::string kind = doc.value("kind", std::string());
  const RigidityCertificate claimed = certificate_from_json(doc.at("certificate"));
  const Json& input = doc.at("input");

  CertifyOptions options;
  options.kruskal_budget = claimed.kruskal_rank ? std::optional<std::size_t>(kDefaultKruskalBudget) : std::nullopt;

  RigidityCertificate fresh;
  ConeByGenerators cone;
  if (kind == "factorization") {
    const FactorizationPair f(matrix_from_json(input.at("A")), matrix_from_json(input.at("B")));
    fresh = certify(f, options);
    cone = build_dual_generators(f).cone();
  } else if (kind == "symmetric") {
    const SymmetricFactor f(matrix_from_json(input.at("A")));
    fresh = certify_cp(f, options);
    cone = build_skew_generators(f).cone();
  } else {
    throw InputError("unknown document kind '" + kind + "'");
  }

  DocumentCheck check;
  auto expect = [&](bool ok, const std::string& what) {
    if (!ok) {
      check.ok = false;
      check.problems.push_back(what);
    }
  };
  expect(claimed.r == fresh.r, "r differs");
  expect(claimed.generator_count == fresh.generator_count, "generator_count differs");
  expect(claimed.span_rank == fresh.span_rank, "span_rank differs");
  expect(claimed.lineality_dim == fresh.lineality_dim, "lineality_dim differs");
  expect(claimed.dim_w == fresh.dim_w, "dim_w differs");
  expect(claimed.classification == fresh.classification, "classification differs");
  expect(claimed.v_support == fresh.v_support, "v_support differs");
  expect(claimed.kruskal_rank == fresh.kruskal_rank, "kruskal_rank differs");
  expect(claimed.relint_witness.has_value() == fresh.relint_witness.has_value(), "witness presence differs");
  if (claimed.relint_witness) {
    expect(verify_witness(cone, *claimed.relint_witness), "witness does not give a positive zero combination");
  }
  // The V basis is only meaningful up to change of basis: it must lie in the
  // fresh V, have the same dimension, and square to zero.
  expect(claimed.v_basis.size() == fresh.v_basis.size(), "v_basis dimension differs");
  if (!claimed.v_basis.empty() && claimed.v_basis.size() == fresh.v_basis.size()) {
    std::vector<RationalVector> all;
    for (const auto& d : fresh.v_basis) all.emplace_back(d.entries().begin(), d.entries().end());
    const std::size_t base = all.size();
    for (const auto& d : claimed.v_basis) all.emplace_back(d.entries().begin(), d.entries().end());
    const std::size_t side = claimed.r * claimed.r;
    expect(rank(RationalMatrix::from_columns(side, all)) == base, "v_basis does not span the recomputed V");
    expect(squares_to_zero_on_span(claimed.v_basis), "v_basis does not square to zero");
  }
  return check;
}

DocumentCheck verify_certificate_document(const Json& doc) {
  try {
    return verify_document_fields(doc);
  } catch (const Json::exception& e) {
    throw InputError(std::string("malformed certificate document: ") + e.what());
  }
}

}  // namespace nmfr
