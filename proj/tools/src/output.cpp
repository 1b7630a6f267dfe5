#include "output.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <ostream>

#include "majorkit/errors.hpp"

namespace majorkit::cli {

Format parse_format(const std::string& name) {
  if (name == "json") return Format::json;
  if (name == "csv") return Format::csv;
  if (name == "table") return Format::table;
  throw InvalidArgument("unknown format '" + name + "' (expected json, csv or table)");
}

Table& Output::table(std::string name, std::vector<std::string> columns) {
  tables.push_back({std::move(name), std::move(columns), {}});
  return tables.back();
}

std::string format_number(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, res.ptr);
}

Json number(double v) {
  if (std::isfinite(v)) return v;
  return format_number(v);
}

std::string format_cell(const Json& v) {
  switch (v.type()) {
    case Json::value_t::null: return "";
    case Json::value_t::boolean: return v.get<bool>() ? "true" : "false";
    case Json::value_t::number_integer: return std::to_string(v.get<long long>());
    case Json::value_t::number_unsigned: return std::to_string(v.get<unsigned long long>());
    case Json::value_t::number_float: return format_number(v.get<double>());
    case Json::value_t::string: return v.get<std::string>();
    case Json::value_t::array: {
      std::string s;
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += ';';
        s += format_cell(v[i]);
      }
      return s;
    }
    default: return v.dump();
  }
}

namespace {

std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

void write_csv(const Output& o, std::ostream& out) {
  bool first = true;
  for (const auto& t : o.tables) {
    if (!first) out << '\n';
    first = false;
    for (std::size_t c = 0; c < t.columns.size(); ++c) out << (c ? "," : "") << csv_escape(t.columns[c]);
    out << '\n';
    for (const auto& row : t.rows) {
      for (std::size_t c = 0; c < row.size(); ++c) out << (c ? "," : "") << csv_escape(format_cell(row[c]));
      out << '\n';
    }
  }
}

void write_table(const Output& o, std::ostream& out) {
  bool first = true;
  for (const auto& t : o.tables) {
    if (!first) out << '\n';
    first = false;
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(t.columns.size(), 0);
    for (std::size_t c = 0; c < t.columns.size(); ++c) width[c] = t.columns[c].size();
    for (const auto& row : t.rows) {
      auto& r = cells.emplace_back();
      for (std::size_t c = 0; c < row.size(); ++c) {
        r.push_back(format_cell(row[c]));
        width[c] = std::max(width[c], r.back().size());
      }
    }
    auto line = [&](const std::vector<std::string>& r) {
      std::string s;
      for (std::size_t c = 0; c < r.size(); ++c) {
        if (c) s += "  ";
        s += r[c];
        if (c + 1 < r.size()) s.append(width[c] - r[c].size(), ' ');
      }
      out << s << '\n';
    };
    if (!t.name.empty()) out << "# " << t.name << '\n';
    line(t.columns);
    for (const auto& r : cells) line(r);
  }
}

}  // namespace

void write(const Output& o, Format f, std::ostream& out) {
  switch (f) {
    case Format::json: out << o.doc.dump(2) << '\n'; break;
    case Format::csv: write_csv(o, out); break;
    case Format::table: write_table(o, out); break;
  }
}

}  // namespace majorkit::cli
