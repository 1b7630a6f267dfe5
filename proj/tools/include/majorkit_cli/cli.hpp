#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace majorkit::cli {

// Exit codes shared by every subcommand.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInputError = 1;
inline constexpr int kExitViolation = 2;

inline constexpr const char* kSeedEnvironment = "MAJORKIT_SEED";

// args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace majorkit::cli
