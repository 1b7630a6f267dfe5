#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "output.hpp"

namespace majorkit::cli {

struct Common {
  std::string format = "json";
  std::uint64_t seed = 0;
};

struct Command {
  CLI::App* app = nullptr;
  std::function<Output()> handler;
};

void add_format(CLI::App* sub, Common& common);
void add_seed(CLI::App* sub, Common& common);

// A vector given inline (--name 1,2,3) or as a file (--name-file path).
struct VectorSource {
  std::string inline_text;
  std::string file;
  std::string label;

  [[nodiscard]] bool given() const { return !inline_text.empty() || !file.empty(); }
  [[nodiscard]] std::vector<double> get() const;
};
void add_vector(CLI::App* sub, VectorSource& source, const std::string& name, const std::string& help);

// Flat summary: every key goes into the JSON document and into one
// single-row table.
void summary(Output& o, const Json& fields, const std::string& name = "summary");

Json to_json(const std::vector<double>& v);

void register_core_commands(CLI::App& app, Common& common, std::vector<Command>& commands);
void register_app_commands(CLI::App& app, Common& common, std::vector<Command>& commands);

}  // namespace majorkit::cli
