#pragma once

// The one CSV dialect used by every tool: comma separator, LF newlines,
// '#' comment lines ignored, optional header detected by a non-numeric
// first row.  Numbers are written as shortest round-trip decimals.

#include <charconv>
#include <cstddef>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "harmonic/types.hpp"

namespace harmonic::csv {

struct CsvError : std::runtime_error {
  CsvError(const std::string& msg, std::size_t line_number)
      : std::runtime_error("line " + std::to_string(line_number) + ": " + msg),
        line(line_number) {}
  std::size_t line;
};

struct Table {
  std::vector<std::string> header;  // empty when the file has no header row
  std::vector<std::vector<double>> rows;
};

inline std::string format_double(double v) {
  char buf[32];
  auto [p, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, p);
}

namespace detail {

inline std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

inline std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t pos = 0;
  while (true) {
    const auto comma = line.find(',', pos);
    if (comma == std::string::npos) {
      fields.push_back(trim(line.substr(pos)));
      break;
    }
    fields.push_back(trim(line.substr(pos, comma - pos)));
    pos = comma + 1;
  }
  return fields;
}

inline bool parse_double(const std::string& field, double& out) {
  const char* begin = field.data();
  const char* end = begin + field.size();
  auto [p, ec] = std::from_chars(begin, end, out);
  return ec == std::errc{} && p == end && !field.empty();
}

}  // namespace detail

inline Table read_table(std::istream& in) {
  Table table;
  std::string line;
  std::size_t line_number = 0;
  bool saw_data_row = false;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++line_number;
    const std::string stripped = detail::trim(line);
    if (stripped.empty() || stripped[0] == '#') continue;
    const auto fields = detail::split_fields(stripped);
    std::vector<double> row(fields.size());
    bool numeric = true;
    for (std::size_t i = 0; i < fields.size(); ++i)
      numeric = numeric && detail::parse_double(fields[i], row[i]);
    if (!numeric) {
      if (!saw_data_row && table.header.empty()) {
        table.header = fields;
        width = fields.size();
        continue;
      }
      throw CsvError("malformed numeric field", line_number);
    }
    if (width == 0) width = fields.size();
    if (fields.size() != width) throw CsvError("inconsistent column count", line_number);
    table.rows.push_back(std::move(row));
    saw_data_row = true;
  }
  return table;
}

inline Table read_table_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open '" + path + "' for reading");
  return read_table(in);
}

// Single-column real signal; header row, comments and blank lines allowed.
inline RealSignal read_signal_file(const std::string& path) {
  const Table table = read_table_file(path);
  RealSignal u;
  u.reserve(table.rows.size());
  for (std::size_t i = 0; i < table.rows.size(); ++i) {
    if (table.rows[i].size() != 1)
      throw std::runtime_error("'" + path + "': expected exactly one column");
    u.push_back(table.rows[i][0]);
  }
  if (u.size() < 3)
    throw std::runtime_error("'" + path + "': need at least 3 samples");
  return u;
}

inline void write_row(std::ostream& out, const std::vector<std::string>& fields) {
  for (std::size_t i = 0; i < fields.size(); ++i) {
    if (i != 0) out << ',';
    out << fields[i];
  }
  out << '\n';
}

inline void write_complex_signal(std::ostream& out, const ComplexSignal& w) {
  out << "re,im\n";
  for (const auto& v : w)
    out << format_double(v.real()) << ',' << format_double(v.imag()) << '\n';
}

inline void write_real_signal(std::ostream& out, const RealSignal& u) {
  out << "value\n";
  for (double v : u) out << format_double(v) << '\n';
}

}  // namespace harmonic::csv
