#pragma once

#include "fgab_cli/json_io.hpp"

#include <string>
#include <vector>

namespace fgab::cli {

// Result of one job in both output modes. `text` ends with a newline.
struct Report {
  json data;
  std::string text;
};

// Executes a JobDocument (see docs/json_schema.md). Throws InputError on
// schema violations and PreconditionError on mathematical ones.
Report run_job(const json& job);

// Names accepted in the "command" field.
const std::vector<std::string>& command_names();

}  // namespace fgab::cli
