#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "arena/core/rng.hpp"
#include "arena/core/types.hpp"

namespace arena {

enum class GameKind { PD, Chicken, StagHunt };

std::string to_string(GameKind kind);
std::optional<GameKind> game_kind_from_string(const std::string& name);

struct PayoffPair {
  double first = 0.0;
  double second = 0.0;
};

/// Payoff pair for one joint action of a 2x2 mini-game. Actions are
/// booleans: true = cooperate. The constants satisfy the standard orderings
/// (PD: T > R > P > S, 2R > T + S; StagHunt: R > T >= P > S; Chicken:
/// mutual defection strictly worst) and are asserted in tests.
PayoffPair matrix_payoff(GameKind kind, bool a_cooperates, bool b_cooperates);

// --- per-substrate state records -------------------------------------------

struct RealityShowState {
  std::vector<GameKind> round_kinds;  // mini-game kind per round
  int matching_index = 0;             // current pairing within the round
  int matchings_per_round = 0;
};

struct PubCoordinationState {
  std::vector<int> preferred_pub;          // per seat: 0 or 1
  std::vector<std::vector<int>> friends;   // ring adjacency
  std::vector<bool> closed;                // per pub, this round
  std::vector<std::vector<int>> informed;  // per pub: seats told of closure
  std::vector<int> declared;               // per seat: declared pub or -1
  double closure_probability = 0.2;
};

struct HagglingState {
  double seller_cost = 0.0;
  double buyer_value = 0.0;
  double granularity = 0.25;
  // Indexed by seat (0 = seller, 1 = buyer); negative = no offer yet.
  double last_offer[2] = {-1.0, -1.0};
  double prev_own_offer[2] = {-1.0, -1.0};
};

struct LaborState {
  double daily_wage = 1.0;
  double raise_bonus = 0.5;
  double strike_threshold = 0.5;
  bool raise_won = false;
};

// Burden shares and tolerances are integer tenths (0..10) so approval
// checks stay exact.
struct StateFormationState {
  double protection_value = 5.0;
  double defense_cost = 4.0;
  double persuade_cost = 0.3;
  double raid_loss = 2.0;
  int tolerance_tenths[2] = {5, 5};
  int proposal_tenths[2] = {-1, -1};  // standing proposal per seat; -1 = none
  int prev_proposal_tenths[2] = {-1, -1};
};

/// Full game state, advanced only through step(). A value type: copies are
/// independent and episodes never share state.
struct SubstrateState {
  SubstrateId substrate_id = SubstrateId::RealityShow;
  int round = 0;
  PhaseLabel phase = PhaseLabel::Communication;
  bool terminal = false;
  int horizon = 0;
  std::vector<double> scores;  // per-seat cumulative raw points
  std::vector<Event> events;   // full public history
  std::variant<RealityShowState, PubCoordinationState, HagglingState,
               LaborState, StateFormationState>
      game;

  int seat_count() const { return static_cast<int>(scores.size()); }
};

struct StepResult {
  SubstrateState state;
  std::vector<Observation> observations;  // one per seat, post-step
  std::vector<Event> new_events;
};

struct CooperationLabel {
  bool cooperative = false;
};

struct Bounds {
  double theo_min = 0.0;
  double theo_max = 0.0;
};

/// Deterministic initial state for (spec, seed). Hidden variables (pub
/// closures, private valuations, approval tolerances) come from the seeded
/// stream. Throws std::invalid_argument on specs the substrate cannot host.
SubstrateState initial_state(const ScenarioSpec& spec, std::uint64_t seed);

/// What one seat currently sees.
Observation observe(const SubstrateState& state, int seat);

/// Game-master transition: validates the joint action (malformed or illegal
/// attempts are replaced by the substrate default and logged as
/// rejected_action), advances phase/round, accumulates scores, and emits
/// events.
StepResult step(const SubstrateState& state,
                const std::vector<ActionAttempt>& joint_action, Rng& rng);

/// The substrate's designated passive action for a seat in the given state.
/// Used to replace malformed or faulted actions; never rewards the seat.
ActionAttempt default_action(const SubstrateState& state, int seat);

/// Total cooperative/non-cooperative partition of legal actions, evaluated
/// against the pre-step state.
CooperationLabel is_cooperative(SubstrateId id, PhaseLabel phase,
                                const ActionAttempt& action,
                                const SubstrateState& state, int seat);

/// Tight analytic per-seat score bounds for the scenario's parameters.
Bounds theoretical_bounds(const ScenarioSpec& spec);

/// Round-robin pairing for the given matching index (circle method). With an
/// odd seat count one seat sits out per matching.
std::vector<std::pair<int, int>> round_robin_pairs(int seats, int matching);

}  // namespace arena
