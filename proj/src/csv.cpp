#include "cireg/csv.hpp"

#include <algorithm>
#include <cctype>
#include <cerrno>
#include <charconv>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>

#include "cireg/errors.hpp"

namespace cireg::csv {

int Table::column(const std::string& name) const {
  auto it = std::find(header.begin(), header.end(), name);
  return it == header.end() ? -1 : static_cast<int>(it - header.begin());
}

int Table::require_column(const std::string& name) const {
  int c = column(name);
  if (c < 0) throw DataError("missing required column '" + name + "'");
  return c;
}

static std::vector<std::string> split_line(const std::string& line, size_t lineno) {
  std::vector<std::string> cells;
  std::string cur;
  bool quoted = false;
  for (size_t k = 0; k < line.size(); ++k) {
    char c = line[k];
    if (quoted) {
      if (c == '"') {
        if (k + 1 < line.size() && line[k + 1] == '"') {
          cur += '"';
          ++k;
        } else {
          quoted = false;
        }
      } else {
        cur += c;
      }
    } else if (c == '"' && cur.empty()) {
      quoted = true;
    } else if (c == ',') {
      cells.push_back(cur);
      cur.clear();
    } else if (c == '\r') {
      // tolerate CRLF
    } else {
      cur += c;
    }
  }
  if (quoted) throw DataError("unterminated quote on line " + std::to_string(lineno));
  cells.push_back(cur);
  return cells;
}

Table parse(const std::string& text) {
  Table t;
  std::istringstream in(text);
  std::string line;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty() || (line.size() == 1 && line[0] == '\r')) continue;
    auto cells = split_line(line, lineno);
    if (t.header.empty()) {
      t.header = std::move(cells);
    } else {
      if (cells.size() != t.header.size())
        throw DataError("line " + std::to_string(lineno) + ": expected " +
                        std::to_string(t.header.size()) + " cells, got " +
                        std::to_string(cells.size()));
      t.rows.push_back(std::move(cells));
    }
  }
  if (t.header.empty()) throw DataError("empty CSV input");
  return t;
}

Table read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

void write_file(const std::string& path, const Table& table) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw DataError("cannot write file: " + path);
  auto emit_row = [&out](const std::vector<std::string>& cells) {
    for (size_t k = 0; k < cells.size(); ++k) {
      if (k) out << ',';
      out << cells[k];
    }
    out << '\n';
  };
  emit_row(table.header);
  for (const auto& r : table.rows) emit_row(r);
  if (!out) throw DataError("write failed: " + path);
}

std::string format_double(double v) {
  if (std::isnan(v)) return "";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  // shortest representation that parses back exactly
  char buf[64];
  for (int prec = 15; prec <= 17; ++prec) {
    std::snprintf(buf, sizeof(buf), "%.*g", prec, v);
    if (std::strtod(buf, nullptr) == v) break;
  }
  return buf;
}

std::optional<double> parse_double(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  std::string s = cell;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "inf" || s == "+inf" || s == "infinity") return std::numeric_limits<double>::infinity();
  if (s == "-inf" || s == "-infinity") return -std::numeric_limits<double>::infinity();
  if (s == "nan" || s == "na") return std::nullopt;
  errno = 0;
  char* end = nullptr;
  double v = std::strtod(cell.c_str(), &end);
  if (end == cell.c_str() || *end != '\0' || errno == ERANGE)
    throw DataError("not a number: '" + cell + "'");
  return v;
}

std::optional<long long> parse_int(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  long long v = 0;
  auto [p, ec] = std::from_chars(cell.data(), cell.data() + cell.size(), v);
  if (ec != std::errc() || p != cell.data() + cell.size())
    throw DataError("not an integer: '" + cell + "'");
  return v;
}

std::optional<bool> parse_bool(const std::string& cell) {
  if (cell.empty()) return std::nullopt;
  std::string s = cell;
  std::transform(s.begin(), s.end(), s.begin(), [](unsigned char c) { return std::tolower(c); });
  if (s == "1" || s == "true" || s == "yes") return true;
  if (s == "0" || s == "false" || s == "no") return false;
  throw DataError("not a boolean: '" + cell + "'");
}

}  // namespace cireg::csv
