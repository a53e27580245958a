#include "arena/core/population.hpp"

#include <stdexcept>
#include <utility>

#include "arena/core/rng.hpp"

namespace arena {

std::vector<std::string> validate_scenario(const ScenarioSpec& spec) {
  std::vector<std::string> violations;
  if (spec.scenario_id.empty()) violations.push_back("empty-id");

  const auto substrate = spec.substrate();
  if (!substrate) violations.push_back("unknown-substrate");

  const int n = spec.population_size;
  const int k = spec.background_count;
  if (n < 2) violations.push_back("population-too-small");
  if (k < 1 || k >= n) violations.push_back("bad-background-count");
  if (spec.mode == Mode::Resident && n - k <= k) {
    violations.push_back("focal-not-majority");
  }
  if (!(spec.theoretical_min < spec.theoretical_max)) {
    violations.push_back("invalid-bounds");
  }
  if (spec.horizon < 0) violations.push_back("negative-horizon");
  if (substrate) {
    const auto& info = substrate_info(*substrate);
    if (n < info.min_seats || n > info.max_seats) {
      violations.push_back("bad-seat-count");
    }
  }
  return violations;
}

SeatAssignment compose_population(const ScenarioSpec& spec,
                                  const std::string& focal_policy_ref,
                                  const std::string& background_policy_ref) {
  const int n = spec.population_size;
  const int k = spec.background_count;
  if (n < 2) throw std::invalid_argument("population-too-small");

  int focal_seats = 0;
  if (spec.mode == Mode::Visitor) {
    focal_seats = 1;
  } else {
    if (k < 1 || k >= n) throw std::invalid_argument("bad-background-count");
    focal_seats = n - k;
    if (focal_seats <= k) throw std::invalid_argument("focal-not-majority");
  }

  std::vector<Role> roles(static_cast<std::size_t>(n), Role::Background);
  for (int i = 0; i < focal_seats; ++i) roles[static_cast<std::size_t>(i)] = Role::Focal;

  // Fisher-Yates keyed on the scenario seed so the role-to-seat mapping is
  // replayable but not always "focal seats first".
  Rng rng(fnv1a64("seat-order", spec.seed));
  for (int i = n - 1; i > 0; --i) {
    const auto j = static_cast<int>(rng.uniform_int(0, i));
    std::swap(roles[static_cast<std::size_t>(i)], roles[static_cast<std::size_t>(j)]);
  }

  SeatAssignment assignment;
  assignment.seats.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    const Role role = roles[static_cast<std::size_t>(i)];
    assignment.seats.push_back(
        {i, role == Role::Focal ? focal_policy_ref : background_policy_ref,
         role});
  }
  return assignment;
}

}  // namespace arena
