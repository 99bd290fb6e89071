#pragma once

#include <optional>
#include <string>

#include "ccq/error.hpp"
#include "ccq/rational.hpp"

namespace ccq {

struct CommandOptions {
  std::optional<std::string> dot_path;
  std::optional<std::string> svg_path;
  bool components_only = false;
  std::optional<Rational> eps;  // overrides options.eps of the file
};

struct CommandOutput {
  int exit_code = 0;
  std::string out;  // stdout
  std::string err;  // stderr
};

/// Exit codes: 0 success, 2 invalid input, 3 parse error, 4 genericity violation, 5 internal degeneracy.
int exit_code_for(ErrorCode code);

/// Runs `validate`, `appsing`, `topo` or `connect` on a problem file.
CommandOutput run_command(const std::string& command, const std::string& file, const CommandOptions& opts);

/// Same, on JSON text already in memory; export paths are still written to disk.
CommandOutput run_command_text(const std::string& command, const std::string& json_text, const CommandOptions& opts);

}  // namespace ccq
