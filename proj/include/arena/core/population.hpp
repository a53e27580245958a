#pragma once

#include <string>
#include <vector>

#include "arena/core/types.hpp"

namespace arena {

/// Checks every ScenarioSpec invariant and returns machine-readable codes
/// for each violation (empty result = valid). Codes:
///   empty-id, unknown-substrate, population-too-small, bad-background-count,
///   focal-not-majority, invalid-bounds, negative-horizon, bad-seat-count.
std::vector<std::string> validate_scenario(const ScenarioSpec& spec);

/// Builds the seat list for one episode. Resident mode seats n-k focal
/// copies against k background seats; visitor mode seats exactly one focal
/// agent among n-1 background seats. Seat order is a deterministic shuffle
/// of the role layout keyed on spec.seed. Throws std::invalid_argument on a
/// spec that violates composition rules (e.g. "focal-not-majority").
SeatAssignment compose_population(const ScenarioSpec& spec,
                                  const std::string& focal_policy_ref,
                                  const std::string& background_policy_ref);

}  // namespace arena
