#include "arena/substrates/substrate.hpp"

#include <stdexcept>

#include "detail.hpp"

namespace arena {

namespace detail {

double param_or(const json& params, const char* key, double fallback) {
  if (params.is_object() && params.contains(key) && params[key].is_number()) {
    return params[key].get<double>();
  }
  return fallback;
}

std::string param_or(const json& params, const char* key,
                     const std::string& fallback) {
  if (params.is_object() && params.contains(key) && params[key].is_string()) {
    return params[key].get<std::string>();
  }
  return fallback;
}

void push_event(SubstrateState& state, std::vector<Event>& fresh, int seat,
                std::string kind, json payload) {
  Event event{state.round, seat, std::move(kind), std::move(payload)};
  state.events.push_back(event);
  fresh.push_back(std::move(event));
}

void reject_attempt(SubstrateState& state, std::vector<Event>& fresh, int seat,
                    const std::string& reason) {
  push_event(state, fresh, seat, "rejected_action", {{"reason", reason}});
}

Observation base_observation(const SubstrateState& state) {
  Observation obs;
  obs.round = state.round;
  obs.phase_label = state.terminal ? PhaseLabel::Outcome : state.phase;
  obs.public_events = state.events;
  return obs;
}

namespace {

const SubstrateOps& ops_for(SubstrateId id) {
  switch (id) {
    case SubstrateId::RealityShow: return reality_show_ops();
    case SubstrateId::PubCoordination: return pub_coordination_ops();
    case SubstrateId::Haggling: return haggling_ops();
    case SubstrateId::LaborCollectiveAction: return labor_ops();
    case SubstrateId::StateFormation: return state_formation_ops();
  }
  throw std::logic_error("unhandled substrate");
}

}  // namespace

}  // namespace detail

std::string to_string(GameKind kind) {
  switch (kind) {
    case GameKind::PD: return "PD";
    case GameKind::Chicken: return "Chicken";
    case GameKind::StagHunt: return "StagHunt";
  }
  throw std::logic_error("unhandled game kind");
}

std::optional<GameKind> game_kind_from_string(const std::string& name) {
  if (name == "PD") return GameKind::PD;
  if (name == "Chicken") return GameKind::Chicken;
  if (name == "StagHunt") return GameKind::StagHunt;
  return std::nullopt;
}

PayoffPair matrix_payoff(GameKind kind, bool a_cooperates, bool b_cooperates) {
  // Row payoffs; column player's value is the transpose. T/R/P/S layout:
  //   PD:       (5,3,1,0)   Chicken: swerve/straight   StagHunt: (4,3,2,0)
  auto table = [](GameKind k, bool a, bool b) -> double {
    switch (k) {
      case GameKind::PD:
        if (a && b) return 3.0;
        if (a && !b) return 0.0;
        if (!a && b) return 5.0;
        return 1.0;
      case GameKind::Chicken:
        if (a && b) return 2.0;
        if (a && !b) return 1.0;
        if (!a && b) return 3.0;
        return 0.0;
      case GameKind::StagHunt:
        if (a && b) return 4.0;
        if (a && !b) return 0.0;
        if (!a && b) return 3.0;
        return 2.0;
    }
    throw std::logic_error("unhandled game kind");
  };
  return {table(kind, a_cooperates, b_cooperates),
          table(kind, b_cooperates, a_cooperates)};
}

std::vector<std::pair<int, int>> round_robin_pairs(int seats, int matching) {
  const int total = seats % 2 == 0 ? seats : seats + 1;  // ghost seat if odd
  std::vector<int> line(static_cast<std::size_t>(total));
  line[0] = 0;
  for (int i = 1; i < total; ++i) {
    line[static_cast<std::size_t>(i)] = 1 + (i - 1 + matching) % (total - 1);
  }
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < total / 2; ++i) {
    int a = line[static_cast<std::size_t>(i)];
    int b = line[static_cast<std::size_t>(total - 1 - i)];
    if (a >= seats || b >= seats) continue;  // bye
    if (a > b) std::swap(a, b);
    pairs.emplace_back(a, b);
  }
  return pairs;
}

SubstrateState initial_state(const ScenarioSpec& spec, std::uint64_t seed) {
  const auto id = spec.substrate();
  if (!id) throw std::invalid_argument("unknown-substrate");
  const auto& info = substrate_info(*id);
  if (spec.population_size < info.min_seats ||
      spec.population_size > info.max_seats) {
    throw std::invalid_argument("bad-seat-count");
  }
  if (spec.horizon < 0) throw std::invalid_argument("negative-horizon");
  return detail::ops_for(*id).init(spec, seed);
}

Observation observe(const SubstrateState& state, int seat) {
  return detail::ops_for(state.substrate_id).observe(state, seat);
}

StepResult step(const SubstrateState& state,
                const std::vector<ActionAttempt>& joint_action, Rng& rng) {
  if (state.terminal) throw std::logic_error("step on terminal state");
  if (static_cast<int>(joint_action.size()) != state.seat_count()) {
    throw std::invalid_argument("joint-action-size");
  }
  return detail::ops_for(state.substrate_id).step(state, joint_action, rng);
}

ActionAttempt default_action(const SubstrateState& state, int seat) {
  return detail::ops_for(state.substrate_id).defaults(state, seat);
}

CooperationLabel is_cooperative(SubstrateId id, PhaseLabel phase,
                                const ActionAttempt& action,
                                const SubstrateState& state, int seat) {
  return detail::ops_for(id).label(phase, action, state, seat);
}

Bounds theoretical_bounds(const ScenarioSpec& spec) {
  const auto id = spec.substrate();
  if (!id) throw std::invalid_argument("unknown-substrate");
  Bounds bounds = detail::ops_for(*id).bounds(spec);
  // Zero-horizon scenarios collapse to a point; keep the interval valid so
  // the all-zero scores still normalize.
  if (!(bounds.theo_min < bounds.theo_max)) {
    bounds.theo_max = bounds.theo_min + 1.0;
  }
  return bounds;
}

}  // namespace arena
