#include <cmath>
#include <stdexcept>

#include "detail.hpp"

// Haggling: alternating-offer bargaining between a seller (seat 0) with a
// private cost and a buyer (seat 1) with a private value. Offers live on a
// quarter-coin grid and each side may only propose or accept prices on the
// rational side of its own reservation, so any deal splits a non-negative
// surplus. No deal scores zero for both.
namespace arena::detail {

namespace {

const HagglingState& game(const SubstrateState& state) {
  return std::get<HagglingState>(state.game);
}

int mover_of(const SubstrateState& state) { return state.round % 2; }

bool on_grid(double price, double granularity) {
  const double steps = price / granularity;
  return std::abs(steps - std::round(steps)) < 1e-9;
}

double reservation(const HagglingState& hag, int seat) {
  return seat == 0 ? hag.seller_cost : hag.buyer_value;
}

bool rational_price(const HagglingState& hag, int seat, double price) {
  return seat == 0 ? price >= hag.seller_cost - 1e-9
                   : price <= hag.buyer_value + 1e-9;
}

SubstrateState hag_init(const ScenarioSpec& spec, std::uint64_t seed) {
  if (spec.population_size != 2) throw std::invalid_argument("bad-seat-count");
  SubstrateState state;
  state.substrate_id = SubstrateId::Haggling;
  state.horizon = spec.horizon;
  state.scores.assign(2, 0.0);
  state.phase = PhaseLabel::Action;
  state.terminal = spec.horizon == 0;

  HagglingState hag;
  hag.granularity = param_or(spec.params, "granularity", 0.25);
  const auto cost_min =
      static_cast<std::int64_t>(param_or(spec.params, "cost_min", 2.0));
  const auto cost_max =
      static_cast<std::int64_t>(param_or(spec.params, "cost_max", 6.0));
  const auto value_min =
      static_cast<std::int64_t>(param_or(spec.params, "value_min", 8.0));
  const auto value_max =
      static_cast<std::int64_t>(param_or(spec.params, "value_max", 12.0));
  Rng rng(seed);
  hag.seller_cost = static_cast<double>(rng.uniform_int(cost_min, cost_max));
  hag.buyer_value = static_cast<double>(rng.uniform_int(value_min, value_max));
  state.game = hag;
  return state;
}

Observation hag_observe(const SubstrateState& state, int seat) {
  Observation obs = base_observation(state);
  const auto& hag = game(state);
  const int other = 1 - seat;
  obs.private_state = {
      {"substrate", "haggling"},
      {"seat", seat},
      {"side", seat == 0 ? "seller" : "buyer"},
      {"score", state.scores[static_cast<std::size_t>(seat)]},
      {"reservation", reservation(hag, seat)},
      {"mover", !state.terminal && mover_of(state) == seat},
      {"rounds_left", state.horizon - state.round},
  };
  if (hag.last_offer[other] >= 0.0) {
    obs.private_state["standing_offer"] = hag.last_offer[other];
  }
  if (hag.last_offer[seat] >= 0.0) {
    obs.private_state["own_last_offer"] = hag.last_offer[seat];
  }
  return obs;
}

ActionAttempt hag_default(const SubstrateState& state, int seat) {
  const auto& hag = game(state);
  const double price = hag.last_offer[seat] >= 0.0 ? hag.last_offer[seat]
                                                   : reservation(hag, seat);
  return ActionAttempt::choice("offer", price);
}

StepResult hag_step(const SubstrateState& prev,
                    const std::vector<ActionAttempt>& joint_action,
                    Rng& /*rng*/) {
  SubstrateState state = prev;
  auto& hag = std::get<HagglingState>(state.game);
  std::vector<Event> fresh;
  const int mover = mover_of(state);
  const int other = 1 - mover;

  ActionAttempt action = joint_action[static_cast<std::size_t>(mover)];
  auto fall_back = [&](const std::string& reason) {
    reject_attempt(state, fresh, mover, reason);
    action = hag_default(state, mover);
  };

  if (action.kind != ActionKind::Choice ||
      (action.token != "offer" && action.token != "accept" &&
       action.token != "walk")) {
    fall_back("expected offer, accept or walk");
  }
  if (action.token == "offer" &&
      (action.value < 0.0 || !on_grid(action.value, hag.granularity) ||
       !rational_price(hag, mover, action.value))) {
    fall_back("offer off grid or beyond reservation");
  }
  if (action.token == "accept" &&
      (hag.last_offer[other] < 0.0 ||
       !rational_price(hag, mover, hag.last_offer[other]))) {
    fall_back("no acceptable standing offer");
  }

  if (action.token == "walk") {
    push_event(state, fresh, mover, "walk", json::object());
    push_event(state, fresh, -1, "no_deal", json::object());
    state.terminal = true;
  } else if (action.token == "accept") {
    const double price = hag.last_offer[other];
    const double seller_profit = price - hag.seller_cost;
    const double buyer_profit = hag.buyer_value - price;
    state.scores[0] += seller_profit;
    state.scores[1] += buyer_profit;
    push_event(state, fresh, mover, "accept", {{"price", price}});
    push_event(state, fresh, -1, "deal",
               {{"price", price},
                {"seller_profit", seller_profit},
                {"buyer_profit", buyer_profit}});
    state.terminal = true;
  } else {
    hag.prev_own_offer[mover] = hag.last_offer[mover];
    hag.last_offer[mover] = action.value;
    push_event(state, fresh, mover, "offer", {{"price", action.value}});
    ++state.round;
    if (state.round == state.horizon) {
      push_event(state, fresh, -1, "no_deal", json::object());
      state.terminal = true;
    }
  }

  StepResult result{std::move(state), {}, std::move(fresh)};
  for (int i = 0; i < 2; ++i) {
    result.observations.push_back(hag_observe(result.state, i));
  }
  return result;
}

CooperationLabel hag_label(PhaseLabel /*phase*/, const ActionAttempt& action,
                           const SubstrateState& state, int seat) {
  if (action.token == "accept") return {true};
  if (action.token != "offer") return {false};  // walk and everything else
  const auto& hag = game(state);
  const double counter = hag.last_offer[1 - seat];
  const double own_prev = hag.last_offer[seat];
  if (counter < 0.0 || own_prev < 0.0) return {true};  // engagement
  return {std::abs(action.value - counter) <
          std::abs(own_prev - counter) - 1e-9};
}

Bounds hag_bounds(const ScenarioSpec& spec) {
  const double cost_min = param_or(spec.params, "cost_min", 2.0);
  const double value_max = param_or(spec.params, "value_max", 12.0);
  return {0.0, value_max - cost_min};
}

}  // namespace

const SubstrateOps& haggling_ops() {
  static const SubstrateOps ops{hag_init,    hag_observe, hag_step,
                                hag_default, hag_label,   hag_bounds};
  return ops;
}

}  // namespace arena::detail
