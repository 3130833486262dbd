#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cliffbreak/claims.hpp"

namespace cliffbreak {

struct ClaimTally {
  int pass = 0;
  int fail = 0;
  int discrepancy = 0;

  int total() const { return pass + fail + discrepancy; }
};

ClaimTally tally(const std::vector<ClaimResult>& results);

/// Human-readable report: one line per claim plus detail lines and a summary.
std::string render_text(const std::vector<ClaimResult>& results);

/// Deterministic JSON report (schema_version "1"); same input bytes in,
/// same bytes out.
std::string render_json(const std::vector<ClaimResult>& results, std::uint64_t seed);

}  // namespace cliffbreak
