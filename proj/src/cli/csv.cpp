#include "hullprice/cli/csv.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <istream>

#include "hullprice/errors.hpp"

namespace hullprice::cli {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

std::string where(std::string_view source, std::size_t line) {
  return std::string(source) + ":" + std::to_string(line);
}

// Splits one line on commas; double-quoted fields may contain commas and "" escapes.
std::vector<std::string> split_fields(std::string_view line, std::string_view source,
                                      std::size_t lineno) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  bool was_quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current.push_back('"');
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current.push_back(ch);
      }
    } else if (ch == '"' && trim(current).empty()) {
      current.clear();
      quoted = true;
      was_quoted = true;
    } else if (ch == ',') {
      fields.push_back(was_quoted ? current : std::string(trim(current)));
      current.clear();
      was_quoted = false;
    } else {
      current.push_back(ch);
    }
  }
  if (quoted) throw Error(ErrorKind::ParseError, where(source, lineno) + ": unterminated quote");
  fields.push_back(was_quoted ? current : std::string(trim(current)));
  return fields;
}

double parse_number(const std::string& field, std::string_view source, std::size_t lineno) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || field.empty()) {
    throw Error(ErrorKind::ParseError, where(source, lineno) + ": not a number: '" + field + "'");
  }
  return value;
}

// Reads all non-blank lines; the first must equal `header`. Returns
// (line number, fields) for each data row.
std::vector<std::pair<std::size_t, std::vector<std::string>>> read_table(
    std::istream& in, std::string_view source, const std::vector<std::string>& header) {
  std::vector<std::pair<std::size_t, std::vector<std::string>>> rows;
  std::string line;
  std::size_t lineno = 0;
  bool have_header = false;
  while (std::getline(in, line)) {
    ++lineno;
    std::string_view view(line);
    if (lineno == 1 && view.substr(0, 3) == "\xEF\xBB\xBF") view.remove_prefix(3);
    if (trim(view).empty()) continue;
    auto fields = split_fields(view, source, lineno);
    if (!have_header) {
      if (fields != header) {
        std::string expected;
        for (const auto& h : header) expected += (expected.empty() ? "" : ",") + h;
        throw Error(ErrorKind::ParseError, where(source, lineno) + ": expected header '" +
                                               expected + "'");
      }
      have_header = true;
      continue;
    }
    if (fields.size() != header.size()) {
      throw Error(ErrorKind::ParseError, where(source, lineno) + ": expected " +
                                             std::to_string(header.size()) + " fields, got " +
                                             std::to_string(fields.size()));
    }
    rows.emplace_back(lineno, std::move(fields));
  }
  return rows;
}

}  // namespace

std::vector<RawListing> read_listings(std::istream& in, std::string_view source) {
  std::vector<RawListing> out;
  for (auto& [lineno, f] : read_table(in, source, {"id", "price", "reputation"})) {
    if (f[0].empty()) throw Error(ErrorKind::ParseError, where(source, lineno) + ": empty id");
    out.push_back({std::move(f[0]), parse_number(f[1], source, lineno),
                   parse_number(f[2], source, lineno)});
  }
  return out;
}

std::vector<HistoryMarket> read_history(std::istream& in, std::string_view source) {
  std::vector<HistoryMarket> out;
  const std::vector<std::string> header{"market_label", "id", "price", "reputation", "chosen"};
  for (auto& [lineno, f] : read_table(in, source, header)) {
    if (f[1].empty()) throw Error(ErrorKind::ParseError, where(source, lineno) + ": empty id");
    if (f[4] != "0" && f[4] != "1") {
      throw Error(ErrorKind::ParseError, where(source, lineno) + ": chosen must be 0 or 1");
    }
    if (out.empty() || out.back().label != f[0]) out.push_back({f[0], {}, {}});
    auto& market = out.back();
    if (f[4] == "1") market.chosen_ids.push_back(f[1]);
    market.listings.push_back(
        {std::move(f[1]), parse_number(f[2], source, lineno), parse_number(f[3], source, lineno)});
  }
  return out;
}

std::vector<PurchaseRecord> to_records(const std::vector<HistoryMarket>& markets,
                                       const NormalizationConfig& config) {
  std::vector<PurchaseRecord> records;
  for (const auto& m : markets) {
    const auto snapshot = normalize_market(m.listings, config, m.label);
    for (const auto& id : m.chosen_ids) records.emplace_back(snapshot, id);
  }
  return records;
}

std::string format_number(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", value);
  return buf;
}

double round12(double value) {
  if (!std::isfinite(value)) return value;
  return std::strtod(format_number(value).c_str(), nullptr);
}

}  // namespace hullprice::cli
