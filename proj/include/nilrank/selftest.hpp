#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nilrank/search.hpp"

namespace nilrank {

struct SuiteResult {
  std::string name;
  std::uint64_t cases = 0;
  std::uint64_t failures = 0;
  std::string first_failure;  // empty when failures == 0
};

struct SelftestReport {
  std::vector<SuiteResult> suites;
  SweepReport sweep;
  bool passed = false;
};

/// Randomised property suites over every module followed by a soundness
/// sweep (n = 4, bound 2). Deterministic in (trials, seed). Requires
/// trials >= 1.
SelftestReport run_selftest(std::uint64_t trials, std::uint64_t seed,
                            unsigned threads = 0);

}  // namespace nilrank
