#include <sstream>
#include <stdexcept>

#include "detail.hpp"

// Reality show: n contestants play a cycle of 2x2 mini-games. Every round
// opens with one broadcast intent token per seat, then resolves a full
// round-robin (one matching per action step), so each seat faces every
// other seat exactly once per round.
namespace arena::detail {

namespace {

std::vector<GameKind> parse_kind_cycle(const json& params) {
  const std::string raw =
      param_or(params, "kinds", std::string("PD,Chicken,StagHunt"));
  std::vector<GameKind> cycle;
  std::stringstream stream(raw);
  std::string token;
  while (std::getline(stream, token, ',')) {
    const auto kind = game_kind_from_string(token);
    if (!kind) throw std::invalid_argument("bad-kind-cycle");
    cycle.push_back(*kind);
  }
  if (cycle.empty()) throw std::invalid_argument("bad-kind-cycle");
  return cycle;
}

const RealityShowState& game(const SubstrateState& state) {
  return std::get<RealityShowState>(state.game);
}

GameKind current_kind(const SubstrateState& state) {
  return game(state).round_kinds[static_cast<std::size_t>(state.round)];
}

int opponent_of(const SubstrateState& state, int seat) {
  for (const auto& [a, b] : round_robin_pairs(state.seat_count(),
                                              game(state).matching_index)) {
    if (a == seat) return b;
    if (b == seat) return a;
  }
  return -1;  // bye
}

bool is_cd_token(const std::string& token) {
  return token == "C" || token == "D";
}

SubstrateState rs_init(const ScenarioSpec& spec, std::uint64_t /*seed*/) {
  SubstrateState state;
  state.substrate_id = SubstrateId::RealityShow;
  state.horizon = spec.horizon;
  state.scores.assign(static_cast<std::size_t>(spec.population_size), 0.0);
  state.phase = PhaseLabel::Communication;
  state.terminal = spec.horizon == 0;

  RealityShowState rs;
  const auto cycle = parse_kind_cycle(spec.params);
  rs.round_kinds.reserve(static_cast<std::size_t>(spec.horizon));
  for (int r = 0; r < spec.horizon; ++r) {
    rs.round_kinds.push_back(cycle[static_cast<std::size_t>(r) % cycle.size()]);
  }
  rs.matchings_per_round =
      spec.population_size % 2 == 0 ? spec.population_size - 1
                                    : spec.population_size;
  state.game = std::move(rs);
  return state;
}

Observation rs_observe(const SubstrateState& state, int seat) {
  Observation obs = base_observation(state);
  obs.private_state = {
      {"substrate", "reality_show"},
      {"seat", seat},
      {"score", state.scores[static_cast<std::size_t>(seat)]},
  };
  if (!state.terminal) {
    obs.private_state["round_kind"] = to_string(current_kind(state));
    obs.private_state["opponent"] =
        state.phase == PhaseLabel::Action ? opponent_of(state, seat) : -1;
  }
  return obs;
}

ActionAttempt rs_default(const SubstrateState& state, int /*seat*/) {
  return state.phase == PhaseLabel::Communication
             ? ActionAttempt::message("D")
             : ActionAttempt::choice("D");
}

StepResult rs_step(const SubstrateState& prev,
                   const std::vector<ActionAttempt>& joint_action,
                   Rng& /*rng*/) {
  SubstrateState state = prev;
  std::vector<Event> fresh;
  const int n = state.seat_count();

  // Sanitize: anything off-grammar becomes the passive default.
  std::vector<std::string> tokens(static_cast<std::size_t>(n));
  const auto expected_kind = state.phase == PhaseLabel::Communication
                                 ? ActionKind::Message
                                 : ActionKind::Choice;
  for (int i = 0; i < n; ++i) {
    const auto& attempt = joint_action[static_cast<std::size_t>(i)];
    if (attempt.kind != expected_kind || !is_cd_token(attempt.token)) {
      reject_attempt(state, fresh, i, "expected C or D");
      tokens[static_cast<std::size_t>(i)] = "D";
    } else {
      tokens[static_cast<std::size_t>(i)] = attempt.token;
    }
  }

  if (state.phase == PhaseLabel::Communication) {
    for (int i = 0; i < n; ++i) {
      push_event(state, fresh, i, "intent",
                 {{"token", tokens[static_cast<std::size_t>(i)]}});
    }
    state.phase = PhaseLabel::Action;
  } else {
    const GameKind kind = current_kind(state);
    auto& rs = std::get<RealityShowState>(state.game);
    for (const auto& [a, b] : round_robin_pairs(n, rs.matching_index)) {
      const bool a_coop = tokens[static_cast<std::size_t>(a)] == "C";
      const bool b_coop = tokens[static_cast<std::size_t>(b)] == "C";
      const auto payoff = matrix_payoff(kind, a_coop, b_coop);
      state.scores[static_cast<std::size_t>(a)] += payoff.first;
      state.scores[static_cast<std::size_t>(b)] += payoff.second;
      push_event(state, fresh, -1, "match_outcome",
                 {{"kind", to_string(kind)},
                  {"a", a},
                  {"b", b},
                  {"a_action", a_coop ? "C" : "D"},
                  {"b_action", b_coop ? "C" : "D"},
                  {"a_payoff", payoff.first},
                  {"b_payoff", payoff.second}});
    }
    ++rs.matching_index;
    if (rs.matching_index == rs.matchings_per_round) {
      rs.matching_index = 0;
      ++state.round;
      state.phase = PhaseLabel::Communication;
      if (state.round == state.horizon) state.terminal = true;
    }
  }

  StepResult result{std::move(state), {}, std::move(fresh)};
  result.observations.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    result.observations.push_back(rs_observe(result.state, i));
  }
  return result;
}

CooperationLabel rs_label(PhaseLabel /*phase*/, const ActionAttempt& action,
                          const SubstrateState& /*state*/, int /*seat*/) {
  return {action.token == "C"};
}

Bounds rs_bounds(const ScenarioSpec& spec) {
  const auto cycle = parse_kind_cycle(spec.params);
  auto best = [](GameKind kind) {
    switch (kind) {
      case GameKind::PD: return 5.0;       // T
      case GameKind::Chicken: return 3.0;  // straight vs swerve
      case GameKind::StagHunt: return 4.0; // R
    }
    throw std::logic_error("unhandled game kind");
  };
  double max_total = 0.0;
  for (int r = 0; r < spec.horizon; ++r) {
    max_total += best(cycle[static_cast<std::size_t>(r) % cycle.size()]);
  }
  const double opponents = spec.population_size - 1;
  return {0.0, opponents * max_total};
}

}  // namespace

const SubstrateOps& reality_show_ops() {
  static const SubstrateOps ops{rs_init,    rs_observe, rs_step,
                                rs_default, rs_label,   rs_bounds};
  return ops;
}

}  // namespace arena::detail
