#pragma once

#include <optional>
#include <string>
#include <vector>

namespace cireg::csv {

// Minimal CSV table: header row plus string cells. Quoting with '"' is
// accepted on input; output never needs it for the formats we emit.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  int column(const std::string& name) const;           // -1 if absent
  int require_column(const std::string& name) const;   // throws DataError
};

Table read_file(const std::string& path);
Table parse(const std::string& text);

void write_file(const std::string& path, const Table& table);

// Lossless double formatting (shortest round-trip representation).
std::string format_double(double v);

// Strict numeric parsing; "inf"/"+inf"/"-inf" accepted, empty -> nullopt.
std::optional<double> parse_double(const std::string& cell);
std::optional<long long> parse_int(const std::string& cell);
std::optional<bool> parse_bool(const std::string& cell);

}  // namespace cireg::csv
