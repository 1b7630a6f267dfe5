#include "majorkit_cli/cli.hpp"

#include <algorithm>
#include <ostream>

#include "commands.hpp"
#include "input.hpp"
#include "majorkit/errors.hpp"
#include "majorkit/random.hpp"

namespace majorkit::cli {

void add_format(CLI::App* sub, Common& common) {
  sub->add_option("--format", common.format, "Output format")
      ->check(CLI::IsMember({"json", "csv", "table"}))
      ->capture_default_str();
}

void add_seed(CLI::App* sub, Common& common) {
  sub->add_option("--seed", common.seed, "Random seed")->envname(kSeedEnvironment)->capture_default_str();
}

std::vector<double> VectorSource::get() const {
  if (!inline_text.empty() && !file.empty())
    throw InvalidArgument("--" + label + " and --" + label + "-file are mutually exclusive");
  if (!file.empty()) return read_vector_file(file);
  if (inline_text.empty()) throw InvalidArgument("--" + label + " is required");
  return parse_list(inline_text, "--" + label);
}

void add_vector(CLI::App* sub, VectorSource& source, const std::string& name, const std::string& help) {
  source.label = name;
  sub->add_option("--" + name, source.inline_text, help + " (comma-separated)");
  sub->add_option("--" + name + "-file", source.file, help + " (one-column CSV file)");
}

void summary(Output& o, const Json& fields, const std::string& name) {
  std::vector<std::string> columns;
  std::vector<Json> row;
  for (const auto& [key, value] : fields.items()) {
    o.doc[key] = value;
    columns.push_back(key);
    row.push_back(value);
  }
  o.table(name, std::move(columns)).add(std::move(row));
}

Json to_json(const std::vector<double>& v) {
  Json a = Json::array();
  for (double x : v) a.push_back(number(x));
  return a;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Majorization and Schur-convexity toolkit", "majorkit"};
  app.require_subcommand(1, 1);
  Common common;
  common.seed = kDefaultSeed;
  std::vector<Command> commands;
  register_core_commands(app, common, commands);
  register_app_commands(app, common, commands);

  if (!args.empty() && !args.front().empty() && args.front().front() != '-') {
    const auto known = std::any_of(commands.begin(), commands.end(),
                                   [&](const Command& c) { return c.app->get_name() == args.front(); });
    if (!known) {
      err << "majorkit: unknown subcommand '" << args.front() << "'\n" << app.help();
      return kExitInputError;
    }
  }

  try {
    app.parse(std::vector<std::string>(args.rbegin(), args.rend()));
  } catch (const CLI::CallForHelp&) {
    const auto subs = app.get_subcommands();
    out << (subs.empty() ? app.help() : subs.front()->help());
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    const auto subs = app.get_subcommands();
    err << "majorkit: " << e.what() << '\n' << (subs.empty() ? app.help() : subs.front()->help());
    return kExitInputError;
  }

  for (const auto& c : commands) {
    if (!c.app->parsed()) continue;
    try {
      const Output o = c.handler();
      write(o, parse_format(common.format), out);
      return o.violated ? kExitViolation : kExitOk;
    } catch (const std::exception& e) {
      err << "majorkit " << c.app->get_name() << ": " << e.what() << '\n';
      return kExitInputError;
    }
  }
  err << "majorkit: no subcommand given\n" << app.help();
  return kExitInputError;
}

}  // namespace majorkit::cli
