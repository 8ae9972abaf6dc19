#include "golden.hpp"

#include <iostream>

// Usage: golden_runner <golden-dir> [--update]
int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: golden_runner <golden-dir> [--update]\n";
    return 2;
  }
  const bool update = argc > 2 && std::string(argv[2]) == "--update";
  int failures = 0;
  const auto results = golden::run_all(argv[1], update);
  for (const auto& r : results) {
    std::cout << (r.passed ? "PASS " : "FAIL ") << r.name;
    if (!r.passed) {
      std::cout << ": " << r.detail;
      ++failures;
    }
    std::cout << "\n";
  }
  std::cout << results.size() - failures << "/" << results.size() << " transcripts match\n";
  return failures == 0 && !results.empty() ? 0 : 1;
}
