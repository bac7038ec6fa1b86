// Acceptance run: one PASS/FAIL line per criterion, exit status 0 only if all pass.
// Thresholds live in src/checks.cpp next to the measurements they gate.
#include <cstdio>
#include <cstdlib>
#include <string>

#include "synclab/checks.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = synclab::kDefaultSeed;
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--seed" && i + 1 < argc) seed = std::strtoull(argv[++i], nullptr, 10);
    else if (arg == "--only" && i + 1 < argc) only = std::atoi(argv[++i]);
  }
  int failed = 0;
  for (int id = 1; id <= synclab::kCriterionCount; ++id) {
    if (only != 0 && id != only) continue;
    const auto r = synclab::run_criterion(id, seed);
    std::printf("%s %2d %-36s [%.1fs] %s\n", r.passed() ? "PASS" : "FAIL", id, r.title.c_str(), r.seconds,
                r.summary().c_str());
    std::fflush(stdout);
    failed += r.passed() ? 0 : 1;
  }
  return failed == 0 ? 0 : 1;
}
