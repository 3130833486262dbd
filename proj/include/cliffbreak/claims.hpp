#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cliffbreak/linalg.hpp"

namespace cliffbreak {

enum class ClaimStatus { Pass, Fail, Discrepancy };

const char* claim_status_name(ClaimStatus s);

/// Computed evidence attached to a claim verdict; empty fields are omitted
/// from reports.
struct ClaimDetails {
  std::vector<long> ranks;
  std::optional<Inertia> inertia;
  std::optional<std::string> factors;
  std::optional<std::string> pseudoscalar_factor;
  std::vector<std::string> notes;
  bool operator==(const ClaimDetails&) const = default;
};

struct ClaimOutcome {
  ClaimStatus status = ClaimStatus::Pass;
  ClaimDetails details;
};

struct ClaimContext {
  std::uint64_t seed = 0;
  double tol = 1e-9;
};

/// One re-runnable assertion. DISCREPANCY is reserved for entries whose
/// literal source statement fails while the documented corrected reading
/// passes; such entries ship with expected == Discrepancy.
struct Claim {
  std::string id;
  std::string description;
  std::string source;  // serialized as the report's paper_ref field
  ClaimStatus expected = ClaimStatus::Pass;
  std::function<ClaimOutcome(const ClaimContext&)> program;
};

struct ClaimResult {
  std::string id;
  ClaimStatus status = ClaimStatus::Pass;
  std::string source;
  ClaimDetails details;
};

/// The shipped catalogue, ordered by id; ids are unique.
const std::vector<Claim>& claim_catalogue();

/// Runs every claim whose id starts with `filter` (empty = all), in id
/// order. Exceptions inside a program become FAIL results with the message
/// recorded in notes; the runner itself does not throw.
std::vector<ClaimResult> run_claims(const std::string& filter, const ClaimContext& ctx);

}  // namespace cliffbreak
