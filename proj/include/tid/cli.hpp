#pragma once

#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace tid::cli {

// Exit codes: 0 success / property holds, 1 property fails, 2 input error.
struct CommandResult {
  int exitCode = 0;
  std::string text;
  std::optional<nlohmann::json> json;  // present iff --json was given
};

// args excludes the program name.
CommandResult run(const std::vector<std::string>& args);

}  // namespace tid::cli
