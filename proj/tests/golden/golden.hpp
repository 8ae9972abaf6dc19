#pragma once

// Golden CLI transcripts. Each case is a pair <name>.args (JSON array of
// command-line arguments) and <name>.expected (the transcript). Commands run
// in-process with the golden directory as working directory, so job files are
// referenced as jobs/<file>.json.

#include <filesystem>
#include <string>
#include <vector>

namespace golden {

struct CaseResult {
  std::string name;
  bool passed = false;
  std::string detail;  // first differing line, or the I/O problem
};

// stdout, then "[stderr]" and stderr when nonempty, then "[exit N]".
std::string transcript(const std::vector<std::string>& args);

// Runs every case in dir/cases; with update = true, rewrites the expected files.
std::vector<CaseResult> run_all(const std::filesystem::path& dir, bool update = false);

}  // namespace golden
