#include "invsub/cli.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

namespace invsub::cli {

namespace {

std::string join(const auto& values, std::string_view sep) {
  std::ostringstream os;
  bool first = true;
  for (const auto& v : values) {
    if (!first) os << sep;
    os << v;
    first = false;
  }
  return os.str();
}

std::vector<std::string> decimal_strings(const std::vector<BigInt>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.str());
  return out;
}

BigInt parse_decimal(const Json& j) {
  const auto s = j.get<std::string>();
  if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    throw std::invalid_argument("expected a decimal integer string, got '" + s + "'");
  }
  return BigInt(s);
}

Rational entry_from_json(const Json& j, std::size_t row, std::size_t col) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    if (auto r = parse_rational_token(j.get<std::string>())) return *r;
  }
  throw MatrixParseError(row, col, "entry is not an integer or fraction: " + j.dump());
}

RationalMatrix parse_json_matrix(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw MatrixParseError(0, 0, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array()) {
    throw MatrixParseError(0, 0, "JSON matrix document needs a \"rows\" array");
  }
  const auto& rows = doc["rows"];
  if (rows.empty()) throw MatrixParseError(0, 0, "matrix has no rows");
  std::vector<std::vector<Rational>> grid;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array()) throw MatrixParseError(i + 1, 0, "row is not an array");
    if (rows[i].size() != rows.size()) {
      throw MatrixParseError(i + 1, 0,
                             "matrix is not square: row has " + std::to_string(rows[i].size()) +
                                 " entries, expected " + std::to_string(rows.size()));
    }
    auto& out_row = grid.emplace_back();
    for (std::size_t j = 0; j < rows[i].size(); ++j) out_row.push_back(entry_from_json(rows[i][j], i + 1, j + 1));
  }
  if (doc.contains("n")) {
    if (!doc["n"].is_number_unsigned() || doc["n"].get<std::size_t>() != grid.size()) {
      throw MatrixParseError(0, 0, "declared n does not match the number of rows");
    }
  }
  return RationalMatrix::from_rows(grid);
}

Json multiset_json(const std::vector<unsigned>& values) {
  Json arr = Json::array();
  for (unsigned v : values) arr.push_back(v);
  return arr;
}

std::string brace_set(const std::vector<unsigned>& values) {
  return "{" + join(values, ", ") + "}";
}

}  // namespace

MatrixParseError::MatrixParseError(std::size_t row, std::size_t column, const std::string& what)
    : std::runtime_error([&] {
        std::string prefix;
        if (row > 0) prefix += "row " + std::to_string(row);
        if (column > 0) prefix += (prefix.empty() ? "" : ", ") + std::string("column ") + std::to_string(column);
        return prefix.empty() ? what : prefix + ": " + what;
      }()),
      row_(row),
      column_(column) {}

std::optional<Rational> parse_rational_token(std::string_view token) {
  auto digits = [](std::string_view s) {
    return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  std::string_view body = token;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? "1" : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) return std::nullopt;
  const BigInt d(std::string{den});
  if (d == 0) return std::nullopt;
  Rational value(BigInt(std::string{num}), d);
  return negative ? Rational(-value) : value;
}

RationalMatrix parse_matrix_document(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json_matrix(text);

  std::vector<std::vector<Rational>> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = text.substr(pos, eol - pos);
    pos = eol + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);

    std::vector<std::string_view> tokens;
    std::size_t t = 0;
    while (true) {
      t = line.find_first_not_of(" \t", t);
      if (t == std::string_view::npos) break;
      const auto end = std::min(line.find_first_of(" \t", t), line.size());
      tokens.push_back(line.substr(t, end - t));
      t = end;
    }
    if (tokens.empty()) continue;

    const std::size_t row = rows.size() + 1;
    auto& out = rows.emplace_back();
    for (std::size_t j = 0; j < tokens.size(); ++j) {
      auto value = parse_rational_token(tokens[j]);
      if (!value) {
        throw MatrixParseError(row, j + 1,
                               "invalid entry '" + std::string(tokens[j]) + "' on line " +
                                   std::to_string(line_no) +
                                   " (expected an integer or p/q with q != 0)");
      }
      out.push_back(std::move(*value));
    }
  }
  if (rows.empty()) throw MatrixParseError(0, 0, "matrix has no rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      throw MatrixParseError(i + 1, 0,
                             "matrix is not square: row has " + std::to_string(rows[i].size()) +
                                 " entries, expected " + std::to_string(rows.size()));
    }
  }
  return RationalMatrix::from_rows(rows);
}

std::string input_digest(std::string_view text) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::vector<unsigned> displayed_composition(const BlockConfig& c) {
  std::vector<unsigned> out;
  if (c.complex_blocks.empty()) {
    out.push_back(0);
  } else {
    out = c.complex_blocks.parts();
  }
  if (c.real_blocks.empty()) {
    out.push_back(0);
  } else {
    out.insert(out.end(), c.real_blocks.parts().begin(), c.real_blocks.parts().end());
  }
  return out;
}

std::vector<TableRow> table_rows(unsigned n) {
  std::vector<TableRow> rows;
  for_each_config(n, [&](const BlockConfig& c) {
    rows.push_back({c.complex_blocks.n(), c, displayed_composition(c), count_for_config(c)});
  });
  return rows;
}

bool SelfcheckEntry::passed() const {
  return spectrum_matches_oracle && round_trip.value_or(true) && matches_known.value_or(true);
}

std::vector<SelfcheckEntry> run_selfcheck(unsigned max_n) {
  std::vector<SelfcheckEntry> entries;
  for (unsigned n = 1; n <= max_n; ++n) {
    SelfcheckEntry e;
    e.n = n;
    const SpectrumSet spectrum = enumerate_Mn(n);
    e.spectrum_matches_oracle = spectrum == oracle_Mn(n);
    if (n <= 8) {
      bool ok = true;
      for_each_config(n, [&](const BlockConfig& c) {
        const auto result = count_invariant_subspaces(realize_config(c));
        const auto* finite = std::get_if<FiniteCount>(&result);
        ok = ok && finite != nullptr && finite->count == count_for_config(c) &&
             finite->signature.as_block_config() == c;
      });
      e.round_trip = ok;
    }
    if (n == 4) {
      const std::vector<BigInt> known{3, 4, 5, 6, 8, 9, 12, 16};
      e.matches_known = spectrum.values == known;
    }
    entries.push_back(e);
  }
  return entries;
}

Json spectrum_report(const SpectrumSet& set) {
  Json doc;
  doc["command"] = "spectrum";
  doc["input"] = {{"n", set.n}};
  doc["input_digest"] = input_digest("spectrum n=" + std::to_string(set.n));
  doc["result"] = {{"n", set.n}, {"values", decimal_strings(set.values)}};
  return doc;
}

Json table_report(unsigned n, const std::vector<TableRow>& rows) {
  Json groups = Json::array();
  for (const auto& row : rows) {
    if (groups.empty() || groups.back()["r"].get<unsigned>() != row.r) {
      groups.push_back({{"r", row.r},
                        {"s", n - 2 * row.r},
                        {"mu", {row.r, n - 2 * row.r}},
                        {"rows", Json::array()}});
    }
    groups.back()["rows"].push_back({{"derived_composition", row.displayed},
                                     {"complex_blocks", row.config.complex_blocks.parts()},
                                     {"real_blocks", row.config.real_blocks.parts()},
                                     {"product", row.product.str()}});
  }
  Json doc;
  doc["command"] = "table";
  doc["input"] = {{"n", n}};
  doc["input_digest"] = input_digest("table n=" + std::to_string(n));
  doc["result"] = {{"n", n}, {"groups", std::move(groups)}};
  return doc;
}

Json analyze_report(const RationalMatrix& a, std::string_view source_text,
                    const SubspaceCount& result) {
  Json payload;
  payload["n"] = a.size();
  if (const auto* finite = std::get_if<FiniteCount>(&result)) {
    payload["finite"] = true;
    payload["count"] = finite->count.str();
    payload["signature"] = {
        {"real_root_multiplicities", multiset_json(finite->signature.real_root_multiplicities)},
        {"complex_pair_multiplicities",
         multiset_json(finite->signature.complex_pair_multiplicities)}};
    payload["dimension_profile"] = decimal_strings(finite->profile.coefficients);
  } else {
    payload["finite"] = false;
  }
  Json doc;
  doc["command"] = "analyze";
  doc["input"] = {{"n", a.size()}};
  doc["input_digest"] = input_digest(source_text);
  doc["result"] = std::move(payload);
  return doc;
}

Json selfcheck_report(unsigned max_n, const std::vector<SelfcheckEntry>& entries) {
  Json checks = Json::array();
  bool all = true;
  for (const auto& e : entries) {
    Json c{{"n", e.n}, {"spectrum_matches_oracle", e.spectrum_matches_oracle}};
    c["round_trip"] = e.round_trip ? Json(*e.round_trip) : Json(nullptr);
    c["matches_known"] = e.matches_known ? Json(*e.matches_known) : Json(nullptr);
    c["passed"] = e.passed();
    all = all && e.passed();
    checks.push_back(std::move(c));
  }
  Json doc;
  doc["command"] = "selfcheck";
  doc["input"] = {{"max_n", max_n}};
  doc["input_digest"] = input_digest("selfcheck max_n=" + std::to_string(max_n));
  doc["result"] = {{"max_n", max_n}, {"passed", all}, {"checks", std::move(checks)}};
  return doc;
}

std::string spectrum_text(const SpectrumSet& set) {
  return "M_" + std::to_string(set.n) + " = {" + join(set.values, ", ") + "}\n";
}

std::string table_text(unsigned n, const std::vector<TableRow>& rows) {
  std::ostringstream os;
  os << "n = " << n << '\n';
  std::optional<unsigned> current;
  for (const auto& row : rows) {
    if (row.r != current) {
      current = row.r;
      os << "\nr = " << row.r << ", mu = " << to_string(std::vector<unsigned>{row.r, n - 2 * row.r})
         << '\n';
      os << "  " << std::left << std::setw(2 * static_cast<int>(n) + 4)
         << ("d_" + std::to_string(row.r)) << "N_" << row.r << '\n';
    }
    os << "  " << std::left << std::setw(2 * static_cast<int>(n) + 4) << to_string(row.displayed)
       << row.product << '\n';
  }
  return os.str();
}

std::string analyze_text(const RationalMatrix& a, const SubspaceCount& result) {
  std::ostringstream os;
  os << "n = " << a.size() << '\n';
  if (const auto* finite = std::get_if<FiniteCount>(&result)) {
    os << "result: finite\n";
    os << "count: " << finite->count << '\n';
    os << "real root multiplicities: " << brace_set(finite->signature.real_root_multiplicities)
       << '\n';
    os << "complex pair multiplicities: "
       << brace_set(finite->signature.complex_pair_multiplicities) << '\n';
    os << "dimension profile: [" << join(finite->profile.coefficients, ", ") << "]\n";
  } else {
    os << "result: infinite\n";
  }
  return os.str();
}

std::string selfcheck_text(const std::vector<SelfcheckEntry>& entries) {
  std::ostringstream os;
  bool all = true;
  auto verdict = [](bool ok) { return ok ? "PASS" : "FAIL"; };
  for (const auto& e : entries) {
    os << "n = " << e.n << ": spectrum vs oracle " << verdict(e.spectrum_matches_oracle);
    if (e.round_trip) os << ", round-trip " << verdict(*e.round_trip);
    if (e.matches_known) os << ", M_4 = {3, 4, 5, 6, 8, 9, 12, 16} " << verdict(*e.matches_known);
    os << '\n';
    all = all && e.passed();
  }
  os << "selfcheck: " << verdict(all) << '\n';
  return os.str();
}

SpectrumSet spectrum_from_report(const Json& doc) {
  const auto& result = doc.at("result");
  SpectrumSet set;
  set.n = result.at("n").get<unsigned>();
  for (const auto& v : result.at("values")) set.values.push_back(parse_decimal(v));
  return set;
}

SubspaceCount subspace_count_from_report(const Json& doc) {
  const auto& result = doc.at("result");
  if (!result.at("finite").get<bool>()) return InfiniteCount{};
  FiniteCount f;
  f.count = parse_decimal(result.at("count"));
  const auto& sig = result.at("signature");
  f.signature.real_root_multiplicities =
      sig.at("real_root_multiplicities").get<std::vector<unsigned>>();
  f.signature.complex_pair_multiplicities =
      sig.at("complex_pair_multiplicities").get<std::vector<unsigned>>();
  for (const auto& c : result.at("dimension_profile")) f.profile.coefficients.push_back(parse_decimal(c));
  return f;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts of invariant subspaces of linear operators on R^n", "invsub"};
  app.require_subcommand(1);

  Format format = Format::text;
  const std::map<std::string, Format> formats{{"text", Format::text}, {"json", Format::json}};
  std::string output_path;
  unsigned max_n = kDefaultMaxN;

  app.add_option("--format", format, "Output format")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case))
      ->default_str("text");
  app.add_option("-o,--output", output_path, "Write the report here instead of standard output");
  app.add_option("--max-n", max_n, "Largest n accepted by spectrum and table")
      ->default_val(kDefaultMaxN);

  long long n = 0;
  auto* spectrum = app.add_subcommand("spectrum", "Print the set M_n of possible subspace counts");
  spectrum->add_option("n", n, "Dimension")->required();
  auto* table = app.add_subcommand("table", "Print every block configuration and its count, grouped by r");
  table->add_option("n", n, "Dimension")->required();

  std::string matrix_path;
  auto* analyze = app.add_subcommand("analyze", "Count the invariant subspaces of a rational matrix");
  analyze->add_option("path", matrix_path, "Matrix document ('-' for standard input)")->required();

  long long selfcheck_max = 12;
  auto* selfcheck = app.add_subcommand("selfcheck", "Cross-check the enumeration against independent oracles");
  selfcheck->add_option("max_n", selfcheck_max, "Check n = 1..max_n (at most 16)")->default_val(12);

  for (auto* sub : {spectrum, table, analyze, selfcheck}) sub->fallthrough();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kUsageError;
  }

  auto emit = [&](const std::string& text) -> int {
    if (output_path.empty() || output_path == "-") {
      out << text;
      return kSuccess;
    }
    std::ofstream file(output_path, std::ios::binary);
    if (!file || !(file << text)) {
      err << "error: cannot write " << output_path << '\n';
      return kDataError;
    }
    return kSuccess;
  };
  auto emit_json = [&](const Json& doc) { return emit(doc.dump(2) + "\n"); };

  if (*spectrum || *table) {
    if (n < 1 || n > static_cast<long long>(max_n)) {
      err << "error: n must be between 1 and " << max_n << " (got " << n << ")\n";
      return kUsageError;
    }
    const auto dim = static_cast<unsigned>(n);
    if (*spectrum) {
      const SpectrumSet set = enumerate_Mn(dim);
      return format == Format::json ? emit_json(spectrum_report(set)) : emit(spectrum_text(set));
    }
    const auto rows = table_rows(dim);
    return format == Format::json ? emit_json(table_report(dim, rows)) : emit(table_text(dim, rows));
  }

  if (*selfcheck) {
    if (selfcheck_max < 1 || selfcheck_max > static_cast<long long>(kSelfcheckLimit)) {
      err << "error: selfcheck max_n must be between 1 and " << kSelfcheckLimit << " (got "
          << selfcheck_max << ")\n";
      return kUsageError;
    }
    const auto limit = static_cast<unsigned>(selfcheck_max);
    const auto entries = run_selfcheck(limit);
    const int status = format == Format::json ? emit_json(selfcheck_report(limit, entries))
                                              : emit(selfcheck_text(entries));
    if (status != kSuccess) return status;
    const bool all = std::all_of(entries.begin(), entries.end(),
                                 [](const SelfcheckEntry& e) { return e.passed(); });
    return all ? kSuccess : kDataError;
  }

  // analyze
  std::string text;
  if (matrix_path == "-") {
    text.assign(std::istreambuf_iterator<char>(std::cin), {});
  } else {
    std::ifstream file(matrix_path, std::ios::binary);
    if (!file) {
      err << "error: cannot read " << matrix_path << '\n';
      return kDataError;
    }
    text.assign(std::istreambuf_iterator<char>(file), {});
  }
  RationalMatrix matrix;
  try {
    matrix = parse_matrix_document(text);
  } catch (const MatrixParseError& e) {
    err << "error: " << matrix_path << ": " << e.what() << '\n';
    return kDataError;
  }
  const SubspaceCount result = count_invariant_subspaces(matrix);
  return format == Format::json ? emit_json(analyze_report(matrix, text, result))
                                : emit(analyze_text(matrix, result));
}

}  // namespace invsub::cli
