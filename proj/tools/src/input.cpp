#include "input.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "majorkit/errors.hpp"

namespace majorkit::cli {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r\n");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> parts;
  std::string cell;
  std::istringstream in(s);
  while (std::getline(in, cell, sep)) parts.push_back(trim(cell));
  if (!s.empty() && s.back() == sep) parts.emplace_back();
  return parts;
}

bool parse_double(const std::string& cell, double& out) {
  if (cell.empty()) return false;
  const char* first = cell.data();
  if (*first == '+') ++first;
  const auto res = std::from_chars(first, cell.data() + cell.size(), out);
  return res.ec == std::errc() && res.ptr == cell.data() + cell.size();
}

std::vector<double> parse_row(const std::vector<std::string>& cells, bool allow_blank, bool& ok) {
  std::vector<double> row;
  ok = true;
  for (const auto& c : cells) {
    double v = 0.0;
    if (c.empty() && allow_blank) {
      row.push_back(std::numeric_limits<double>::quiet_NaN());
    } else if (parse_double(c, v)) {
      row.push_back(v);
    } else {
      ok = false;
      return {};
    }
  }
  return row;
}

}  // namespace

std::vector<double> parse_list(const std::string& text, const std::string& what) {
  const auto cells = split(trim(text), ',');
  if (cells.empty()) throw InvalidArgument(what + ": empty list");
  std::vector<double> out;
  for (const auto& c : cells) {
    double v = 0.0;
    if (!parse_double(c, v)) throw InvalidArgument(what + ": '" + c + "' is not a number");
    out.push_back(v);
  }
  return out;
}

std::vector<long> parse_integer_list(const std::string& text, const std::string& what) {
  std::vector<long> out;
  for (const auto& c : split(trim(text), ',')) {
    long v = 0;
    const auto res = std::from_chars(c.data(), c.data() + c.size(), v);
    if (c.empty() || res.ec != std::errc() || res.ptr != c.data() + c.size())
      throw InvalidArgument(what + ": '" + c + "' is not an integer");
    out.push_back(v);
  }
  if (out.empty()) throw InvalidArgument(what + ": empty list");
  return out;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidArgument("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::vector<std::vector<double>> read_csv(const std::string& path) {
  std::istringstream in(read_text_file(path));
  std::vector<std::vector<double>> rows;
  std::string line;
  std::size_t line_no = 0;
  bool first_content = true;
  while (std::getline(in, line)) {
    ++line_no;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    bool ok = false;
    auto row = parse_row(split(t, ','), true, ok);
    if (!ok) {
      if (first_content) {
        first_content = false;
        continue;  // header
      }
      throw InvalidArgument(path + ":" + std::to_string(line_no) + ": non-numeric cell");
    }
    first_content = false;
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw InvalidArgument(path + ": no numeric rows");
  return rows;
}

std::vector<double> read_vector_file(const std::string& path) {
  const auto rows = read_csv(path);
  std::vector<double> out;
  if (rows.size() == 1) {
    out = rows.front();
  } else {
    for (const auto& r : rows) {
      if (r.size() != 1) throw InvalidArgument(path + ": expected a single column");
      out.push_back(r.front());
    }
  }
  for (double v : out)
    if (std::isnan(v)) throw InvalidArgument(path + ": blank cell in a vector");
  return out;
}

std::vector<std::vector<double>> parse_matrix(const std::string& text) {
  std::vector<std::vector<double>> rows;
  for (const auto& r : split(trim(text), ';')) {
    bool ok = false;
    auto row = parse_row(split(r, ','), true, ok);
    if (!ok || row.empty()) throw InvalidArgument("matrix: row '" + r + "' is not a list of numbers");
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace majorkit::cli
