#pragma once

#include <charconv>
#include <cstddef>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include "cumskew/error.hpp"
#include "cumskew/lorenz.hpp"
#include "cumskew/sample.hpp"

namespace cumskew::io {

// Shortest decimal that parses back to exactly `x`.
inline std::string format_shortest(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

// Six significant digits, for human-readable output.
inline std::string format_g6(double x) {
  char buf[64];
  const int len = std::snprintf(buf, sizeof buf, "%.6g", x);
  return std::string(buf, static_cast<std::size_t>(len));
}

inline std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

// Parses the whole of `text` as a double; leading '+' accepted.
inline std::optional<double> parse_double(std::string_view text) {
  text = trim(text);
  if (!text.empty() && text.front() == '+') text.remove_prefix(1);
  if (text.empty()) return std::nullopt;
  double value = 0.0;
  const auto res = std::from_chars(text.data(), text.data() + text.size(), value);
  if (res.ec != std::errc() || res.ptr != text.data() + text.size()) {
    return std::nullopt;
  }
  return value;
}

// Splits one CSV record on commas. Double-quoted fields may contain commas;
// "" inside quotes is a literal quote.
inline std::vector<std::string> split_csv_line(std::string_view line) {
  std::vector<std::string> fields;
  std::string current;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < line.size() && line[i + 1] == '"') {
          current += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        current += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      fields.push_back(std::move(current));
      current.clear();
    } else {
      current += c;
    }
  }
  fields.push_back(std::move(current));
  return fields;
}

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

struct CsvRow {
  std::size_t line = 0;
  std::vector<std::string> fields;
};

}  // namespace detail

// Reads one numeric column from CSV text. `selector` is a header name or a
// 0-based column index (default: column 0). The first row is a header when
// its selected field is not numeric.
inline Sample parse_csv_text(std::string_view text,
                             const std::optional<std::string>& selector = std::nullopt) {
  std::vector<detail::CsvRow> rows;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos
                                                 ? std::string_view::npos
                                                 : nl - pos);
    ++line_no;
    if (line_no == 1 && line.starts_with("\xEF\xBB\xBF")) line.remove_prefix(3);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (!trim(line).empty()) rows.push_back({line_no, split_csv_line(line)});
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  if (rows.empty()) {
    throw Error(ErrorCode::EmptyOrTooSmall, "CSV input has no data rows");
  }

  const auto& first = rows.front().fields;
  std::size_t column = 0;
  bool header = false;
  if (selector) {
    bool named = false;
    for (std::size_t c = 0; c < first.size(); ++c) {
      // a numeric first-row field is data, never a name
      if (trim(first[c]) == trim(*selector) && !parse_double(first[c])) {
        column = c;
        named = true;
        header = true;
        break;
      }
    }
    if (!named) {
      if (!detail::all_digits(trim(*selector))) {
        throw Error(ErrorCode::ColumnNotFound, "no column named '" + *selector + "'");
      }
      column = std::stoul(std::string(trim(*selector)));
    }
  }
  if (column >= first.size()) {
    throw Error(ErrorCode::ColumnNotFound,
                "column index " + std::to_string(column) + " out of range (" +
                    std::to_string(first.size()) + " columns)");
  }
  if (!header) header = !parse_double(first[column]).has_value();

  std::vector<double> values;
  values.reserve(rows.size());
  for (std::size_t r = header ? 1 : 0; r < rows.size(); ++r) {
    const auto& row = rows[r];
    if (column >= row.fields.size()) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(row.line) + ": missing column " +
                      std::to_string(column),
                  row.line);
    }
    const auto v = parse_double(row.fields[column]);
    if (!v) {
      throw Error(ErrorCode::ParseError,
                  "line " + std::to_string(row.line) + ": '" +
                      std::string(trim(row.fields[column])) + "' is not a number",
                  row.line);
    }
    values.push_back(*v);
  }
  return Sample::validate(std::move(values));
}

inline Sample parse_csv(const std::string& path,
                        const std::optional<std::string>& selector = std::nullopt) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::FileNotFound, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_csv_text(buf.str(), selector);
}

// Plot table: i, p, q, d, w for the interior points, framed by the (0, 0)
// and (1, 1) endpoints whose weight column is left empty.
inline void write_lorenz_tsv(std::ostream& os, const LorenzGrid& grid,
                             const WeightVector& weights) {
  os << "i\tp\tq\td\tw\n";
  os << "0\t0\t0\t0\t\n";
  for (std::size_t i = 0; i + 1 < grid.n; ++i) {
    os << (i + 1) << '\t' << format_g6(grid.p[i]) << '\t' << format_g6(grid.q[i])
       << '\t' << format_g6(grid.d[i]) << '\t' << format_g6(weights.w[i]) << '\n';
  }
  os << grid.n << "\t1\t1\t0\t\n";
}

// 600x600 rendering of the unit square: diagonal, Lorenz polyline and one
// vertical gap segment per interior point, colored by weight sign.
inline void write_lorenz_svg(std::ostream& os, const LorenzGrid& grid,
                             const WeightVector& weights) {
  constexpr double kSize = 600.0;
  auto x = [&](double p) { return format_g6(p * kSize); };
  auto y = [&](double q) { return format_g6((1.0 - q) * kSize); };

  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"600\" height=\"600\" "
        "viewBox=\"0 0 600 600\">\n";
  os << "<rect x=\"0\" y=\"0\" width=\"600\" height=\"600\" fill=\"white\" "
        "stroke=\"black\"/>\n";
  os << "<line class=\"diagonal\" x1=\"0\" y1=\"600\" x2=\"600\" y2=\"0\" "
        "stroke=\"gray\" stroke-width=\"2\"/>\n";
  for (std::size_t i = 0; i + 1 < grid.n; ++i) {
    const double w = weights.w[i];
    const char* color = w < 0.0 ? "red" : (w > 0.0 ? "green" : "lightgray");
    os << "<line class=\"gap\" x1=\"" << x(grid.p[i]) << "\" y1=\"" << y(grid.q[i])
       << "\" x2=\"" << x(grid.p[i]) << "\" y2=\"" << y(grid.p[i])
       << "\" stroke=\"" << color << "\" stroke-dasharray=\"4 3\"/>\n";
  }
  os << "<polyline class=\"lorenz\" fill=\"none\" stroke=\"black\" points=\"0,600";
  for (std::size_t i = 0; i + 1 < grid.n; ++i) {
    os << ' ' << x(grid.p[i]) << ',' << y(grid.q[i]);
  }
  os << " 600,0\"/>\n";
  os << "<text x=\"20\" y=\"30\" fill=\"red\" font-size=\"14\">w_i&lt;0</text>\n";
  os << "<text x=\"20\" y=\"50\" fill=\"green\" font-size=\"14\">w_i&gt;0</text>\n";
  os << "<text x=\"20\" y=\"70\" fill=\"lightgray\" font-size=\"14\">w_i=0</text>\n";
  os << "</svg>\n";
}

}  // namespace cumskew::io
