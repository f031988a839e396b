#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "nmfr/cpr.hpp"
#include "nmfr/patterns.hpp"
#include "nmfr/rigidity.hpp"

namespace nmfr {

inline constexpr const char* kToolVersion = "0.1.0";

// Text formats. A matrix is a header "rows cols" followed by rows of
// whitespace-separated rational tokens. A factorization file is A, a blank
// line, then B; a symmetric file is a single matrix. Lines starting with '#'
// are comments, except "# name: ..." and "# source: ..." which are metadata.
struct FactorizationDocument {
  RationalMatrix a;
  std::optional<RationalMatrix> b;  // absent for symmetric factors
  std::string name;
  std::string source;
};

FactorizationDocument parse_factorization(std::string_view text);
FactorizationDocument parse_symmetric(std::string_view text);
RationalMatrix parse_matrix(std::string_view text);

std::string format_matrix(const RationalMatrix& m);
std::string format_factorization(const FactorizationPair& f, const std::string& name = "",
                                 const std::string& source = "");
std::string format_symmetric(const SymmetricFactor& f, const std::string& name = "");

// Pattern text: header "m n r", m lines of r characters for A, a blank line,
// r lines of n characters for B. '0' marks a forced zero, '.' a free entry.
// A stream is any number of patterns one after another.
ZeroPattern parse_pattern(std::string_view text);
std::vector<ZeroPattern> parse_patterns(std::string_view text);
std::string format_pattern(const ZeroPattern& p);

std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// Certificate documents; see docs/certificate-schema.md. Rationals are "p/q"
// strings and all indices are 1-based.
using Json = nlohmann::ordered_json;

struct CertificateContext {
  std::optional<std::string> filters;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> sample_index;
};

Json certificate_to_json(const RigidityCertificate& cert);
RigidityCertificate certificate_from_json(const Json& j);

Json certificate_document(const FactorizationPair& f, const RigidityCertificate& cert,
                          const CertificateContext& context = {});
Json certificate_document(const SymmetricFactor& f, const RigidityCertificate& cert,
                          const CertificateContext& context = {});

Json matrix_to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

struct DocumentCheck {
  bool ok = true;
  std::vector<std::string> problems;
};

// Rebuilds the input from the document, re-checks the witness (Z lambda = 0,
// lambda >= 1) against freshly built generators, recomputes every field and
// compares. Malformed documents throw InputError.
DocumentCheck verify_certificate_document(const Json& doc);

}  // namespace nmfr
