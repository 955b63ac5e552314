// Acceptance gate: one line per criterion, exit 0 only if all pass.

#include <cstdio>

#include "qedmagic/verify.hpp"

int main() {
  const auto results = qedmagic::run_verification(12345);
  for (const auto& r : results)
    std::printf("[%2d/13] %s %s (%s)\n", r.number, r.pass ? "PASS" : "FAIL",
                r.name.c_str(), r.detail.c_str());
  const bool ok = qedmagic::all_passed(results);
  std::printf("%s\n", ok ? "acceptance: all criteria passed"
                         : "acceptance: CRITERIA FAILED");
  return ok ? 0 : 1;
}
