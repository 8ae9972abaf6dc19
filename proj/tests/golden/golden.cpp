#include "golden.hpp"

#include "fgab_cli/cli.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

namespace golden {

namespace fs = std::filesystem;

namespace {

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string first_difference(const std::string& want, const std::string& got) {
  std::istringstream a(want), b(got);
  std::string la, lb;
  for (int line = 1;; ++line) {
    const bool ha = static_cast<bool>(std::getline(a, la));
    const bool hb = static_cast<bool>(std::getline(b, lb));
    if (!ha && !hb) return "trailing newline differs";
    if (!ha || !hb || la != lb)
      return "line " + std::to_string(line) + ": expected '" + (ha ? la : "<eof>") +
             "', got '" + (hb ? lb : "<eof>") + "'";
  }
}

// Restores the working directory on scope exit.
class WorkingDirectory {
 public:
  explicit WorkingDirectory(const fs::path& dir) : saved_(fs::current_path()) {
    fs::current_path(dir);
  }
  ~WorkingDirectory() { fs::current_path(saved_); }
  WorkingDirectory(const WorkingDirectory&) = delete;
  WorkingDirectory& operator=(const WorkingDirectory&) = delete;

 private:
  fs::path saved_;
};

}  // namespace

std::string transcript(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = fgab::cli::run(args, out, err);
  std::string t = out.str();
  if (!err.str().empty()) t += "[stderr]\n" + err.str();
  return t + "[exit " + std::to_string(code) + "]\n";
}

std::vector<CaseResult> run_all(const fs::path& dir, bool update) {
  std::vector<fs::path> cases;
  for (const auto& entry : fs::directory_iterator(dir / "cases"))
    if (entry.path().extension() == ".args") cases.push_back(entry.path());
  std::sort(cases.begin(), cases.end());

  const fs::path root = fs::absolute(dir);
  std::vector<CaseResult> results;
  for (const fs::path& args_path : cases) {
    CaseResult r{args_path.stem().string()};
    const fs::path expected_path = fs::path(args_path).replace_extension(".expected");
    std::vector<std::string> args;
    try {
      args = nlohmann::json::parse(slurp(args_path)).get<std::vector<std::string>>();
    } catch (const std::exception& e) {
      r.detail = std::string("bad args file: ") + e.what();
      results.push_back(r);
      continue;
    }
    std::string got;
    {
      WorkingDirectory wd(root);
      got = transcript(args);
    }
    if (update) {
      std::ofstream(expected_path, std::ios::binary) << got;
      r.passed = true;
    } else if (!fs::exists(expected_path)) {
      r.detail = "missing " + expected_path.filename().string();
    } else {
      const std::string want = slurp(expected_path);
      r.passed = want == got;
      if (!r.passed) r.detail = first_difference(want, got);
    }
    results.push_back(r);
  }
  return results;
}

}  // namespace golden
