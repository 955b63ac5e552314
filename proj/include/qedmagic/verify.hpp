#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qedmagic {

struct CriterionResult {
  int number = 0;
  std::string name;
  bool pass = false;
  std::string detail;  // worst deviations, counts, or the failure reason
};

// The full self-check suite: catalog integrity, measure properties, engine
// against every analytic limit, table reproduction, and the global sweep.
// Deterministic for a fixed seed.
std::vector<CriterionResult> run_verification(std::uint64_t seed = 12345);

bool all_passed(const std::vector<CriterionResult>& results);

}  // namespace qedmagic
