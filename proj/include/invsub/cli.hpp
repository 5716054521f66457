#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "invsub/analyzer.hpp"
#include "invsub/matrix.hpp"
#include "invsub/spectrum.hpp"

namespace invsub::cli {

using Json = nlohmann::ordered_json;

enum ExitStatus : int { kSuccess = 0, kDataError = 1, kUsageError = 2 };

enum class Format { text, json };

inline constexpr unsigned kDefaultMaxN = 64;
inline constexpr unsigned kSelfcheckLimit = 16;

/// Malformed matrix document. Row and column are 1-based matrix
/// coordinates; either may be 0 when the problem is not tied to one entry.
class MatrixParseError : public std::runtime_error {
 public:
  MatrixParseError(std::size_t row, std::size_t column, const std::string& what);
  std::size_t row() const { return row_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t row_;
  std::size_t column_;
};

/// Integer or "p/q" in base 10 with an optional sign.
std::optional<Rational> parse_rational_token(std::string_view token);

/// Plain text rows of whitespace-separated tokens, blank lines and '#'
/// comments ignored, LF or CRLF. A document starting with '{' is read as
/// JSON: {"n": 2, "rows": [[0, "-1"], ["1", 0]]}.
RationalMatrix parse_matrix_document(std::string_view text);

std::string input_digest(std::string_view text);

/// Derived composition as printed in the classic tables: a 0 stands in for
/// an empty complex or real part.
std::vector<unsigned> displayed_composition(const BlockConfig& c);

struct TableRow {
  unsigned r = 0;
  BlockConfig config;
  std::vector<unsigned> displayed;
  BigInt product;
};

/// Every configuration for n, grouped by r ascending.
std::vector<TableRow> table_rows(unsigned n);

struct SelfcheckEntry {
  unsigned n = 0;
  bool spectrum_matches_oracle = false;
  std::optional<bool> round_trip;      // n <= 8 only
  std::optional<bool> matches_known;   // n = 4 only

  bool passed() const;
};

std::vector<SelfcheckEntry> run_selfcheck(unsigned max_n);

Json spectrum_report(const SpectrumSet& set);
Json table_report(unsigned n, const std::vector<TableRow>& rows);
Json analyze_report(const RationalMatrix& a, std::string_view source_text,
                    const SubspaceCount& result);
Json selfcheck_report(unsigned max_n, const std::vector<SelfcheckEntry>& entries);

std::string spectrum_text(const SpectrumSet& set);
std::string table_text(unsigned n, const std::vector<TableRow>& rows);
std::string analyze_text(const RationalMatrix& a, const SubspaceCount& result);
std::string selfcheck_text(const std::vector<SelfcheckEntry>& entries);

/// Inverse of spectrum_report.
SpectrumSet spectrum_from_report(const Json& doc);
/// Inverse of analyze_report.
SubspaceCount subspace_count_from_report(const Json& doc);

/// Entry point; args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace invsub::cli
