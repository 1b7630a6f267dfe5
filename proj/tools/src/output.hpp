#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace majorkit::cli {

using Json = nlohmann::ordered_json;

enum class Format { json, csv, table };

Format parse_format(const std::string& name);

// One rectangular block of the output. CSV prints each table with its own
// header row; the text format pads columns.
struct Table {
  std::string name;
  std::vector<std::string> columns;
  std::vector<std::vector<Json>> rows;

  void add(std::vector<Json> row) { rows.push_back(std::move(row)); }
};

struct Output {
  Json doc = Json::object();
  std::vector<Table> tables;
  bool violated = false;  // a property check failed: exit code 2

  Table& table(std::string name, std::vector<std::string> columns);
};

// Shortest round-trip representation; non-finite values print as inf, -inf, nan.
std::string format_number(double v);
std::string format_cell(const Json& v);

// A double as JSON; infinities and NaN become strings since JSON has no literal for them.
Json number(double v);

void write(const Output& o, Format f, std::ostream& out);

}  // namespace majorkit::cli
