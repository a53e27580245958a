#include <algorithm>
#include <stdexcept>

#include "detail.hpp"

// Pub coordination: seats pick one of two pubs each round. Attending the
// preferred pub is worth +1, each friend at the same pub +2, a closed pub
// scores nothing. Closures are drawn per round and revealed privately to
// two random seats, so honest reporting is how information spreads.
namespace arena::detail {

namespace {

constexpr int kPubs = 2;
constexpr double kPreferenceBonus = 1.0;
constexpr double kFriendBonus = 2.0;

const PubCoordinationState& game(const SubstrateState& state) {
  return std::get<PubCoordinationState>(state.game);
}

std::string pub_name(int pub) { return pub == 0 ? "A" : "B"; }

int pub_from_token(const std::string& token) {
  if (token == "A") return 0;
  if (token == "B") return 1;
  return -1;
}

// Claims are comma-separated "closed:X" fragments; anything else is noise.
std::vector<int> parse_claims(const std::string& text) {
  std::vector<int> claims;
  std::size_t pos = 0;
  while ((pos = text.find("closed:", pos)) != std::string::npos) {
    pos += 7;
    if (pos < text.size()) {
      const int pub = pub_from_token(std::string(1, text[pos]));
      if (pub >= 0) claims.push_back(pub);
    }
  }
  return claims;
}

void draw_closures(SubstrateState& state, Rng& rng) {
  auto& pub = std::get<PubCoordinationState>(state.game);
  const int n = state.seat_count();
  for (int p = 0; p < kPubs; ++p) {
    pub.closed[static_cast<std::size_t>(p)] =
        rng.bernoulli(pub.closure_probability);
    pub.informed[static_cast<std::size_t>(p)].clear();
    if (!pub.closed[static_cast<std::size_t>(p)]) continue;
    // Reveal to two distinct random seats.
    const int first = static_cast<int>(rng.uniform_int(0, n - 1));
    int second = static_cast<int>(rng.uniform_int(0, n - 2));
    if (second >= first) ++second;
    pub.informed[static_cast<std::size_t>(p)] = {std::min(first, second),
                                                 std::max(first, second)};
  }
}

SubstrateState pub_init(const ScenarioSpec& spec, std::uint64_t seed) {
  SubstrateState state;
  state.substrate_id = SubstrateId::PubCoordination;
  state.horizon = spec.horizon;
  state.scores.assign(static_cast<std::size_t>(spec.population_size), 0.0);
  state.phase = PhaseLabel::Communication;
  state.terminal = spec.horizon == 0;

  const int n = spec.population_size;
  PubCoordinationState pub;
  pub.closure_probability =
      param_or(spec.params, "closure_probability", 0.2);
  pub.closed.assign(kPubs, false);
  pub.informed.assign(kPubs, {});
  pub.declared.assign(static_cast<std::size_t>(n), -1);

  Rng rng(seed);
  pub.preferred_pub.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    pub.preferred_pub.push_back(static_cast<int>(rng.uniform_int(0, 1)));
  }
  // Friendship ring.
  pub.friends.assign(static_cast<std::size_t>(n), {});
  for (int i = 0; i < n; ++i) {
    const int left = (i + n - 1) % n;
    const int right = (i + 1) % n;
    pub.friends[static_cast<std::size_t>(i)].push_back(left);
    if (right != left) pub.friends[static_cast<std::size_t>(i)].push_back(right);
  }
  state.game = std::move(pub);
  if (!state.terminal) draw_closures(state, rng);
  return state;
}

Observation pub_observe(const SubstrateState& state, int seat) {
  Observation obs = base_observation(state);
  const auto& pub = game(state);
  json known = json::array();
  for (int p = 0; p < kPubs; ++p) {
    const auto& informed = pub.informed[static_cast<std::size_t>(p)];
    if (pub.closed[static_cast<std::size_t>(p)] &&
        std::find(informed.begin(), informed.end(), seat) != informed.end()) {
      known.push_back(pub_name(p));
    }
  }
  obs.private_state = {
      {"substrate", "pub_coordination"},
      {"seat", seat},
      {"score", state.scores[static_cast<std::size_t>(seat)]},
      {"preferred", pub_name(pub.preferred_pub[static_cast<std::size_t>(seat)])},
      {"friends", pub.friends[static_cast<std::size_t>(seat)]},
      {"known_closed", known},
      {"declared",
       pub.declared[static_cast<std::size_t>(seat)] < 0
           ? "none"
           : pub_name(pub.declared[static_cast<std::size_t>(seat)])},
  };
  return obs;
}

ActionAttempt pub_default(const SubstrateState& state, int /*seat*/) {
  return state.phase == PhaseLabel::Communication
             ? ActionAttempt::message("none")
             : ActionAttempt::choice("home");
}

StepResult pub_step(const SubstrateState& prev,
                    const std::vector<ActionAttempt>& joint_action, Rng& rng) {
  SubstrateState state = prev;
  auto& pub = std::get<PubCoordinationState>(state.game);
  std::vector<Event> fresh;
  const int n = state.seat_count();

  if (state.phase == PhaseLabel::Communication) {
    for (int i = 0; i < n; ++i) {
      const auto& attempt = joint_action[static_cast<std::size_t>(i)];
      int declared = -1;
      std::vector<int> claims;
      if (attempt.kind != ActionKind::Message ||
          (attempt.token != "A" && attempt.token != "B" &&
           attempt.token != "none")) {
        reject_attempt(state, fresh, i, "expected pub declaration");
      } else {
        declared = pub_from_token(attempt.token);
        claims = parse_claims(attempt.text);
      }
      pub.declared[static_cast<std::size_t>(i)] = declared;
      json claim_names = json::array();
      for (int claim : claims) claim_names.push_back(pub_name(claim));
      push_event(state, fresh, i, "declare",
                 {{"pub", declared < 0 ? "none" : pub_name(declared)},
                  {"claims_closed", claim_names}});
    }
    state.phase = PhaseLabel::Action;
  } else {
    std::vector<int> venue(static_cast<std::size_t>(n), -1);  // -1 = home
    for (int i = 0; i < n; ++i) {
      const auto& attempt = joint_action[static_cast<std::size_t>(i)];
      if (attempt.kind != ActionKind::Choice ||
          (attempt.token != "A" && attempt.token != "B" &&
           attempt.token != "home")) {
        reject_attempt(state, fresh, i, "expected A, B or home");
        continue;
      }
      venue[static_cast<std::size_t>(i)] = pub_from_token(attempt.token);
    }

    json attendance = json::object();
    for (int i = 0; i < n; ++i) {
      const int p = venue[static_cast<std::size_t>(i)];
      double gain = 0.0;
      bool open = false;
      if (p >= 0 && !pub.closed[static_cast<std::size_t>(p)]) {
        open = true;
        gain += p == pub.preferred_pub[static_cast<std::size_t>(i)]
                    ? kPreferenceBonus
                    : 0.0;
        for (int friend_seat : pub.friends[static_cast<std::size_t>(i)]) {
          if (venue[static_cast<std::size_t>(friend_seat)] == p) {
            gain += kFriendBonus;
          }
        }
      }
      state.scores[static_cast<std::size_t>(i)] += gain;
      attendance[std::to_string(i)] = p < 0 ? "home" : pub_name(p);
      push_event(state, fresh, i, "attend",
                 {{"venue", p < 0 ? "home" : pub_name(p)},
                  {"gain", gain},
                  {"open", p < 0 ? false : open}});
    }
    json closures = json::array();
    for (int p = 0; p < kPubs; ++p) {
      if (pub.closed[static_cast<std::size_t>(p)]) closures.push_back(pub_name(p));
    }
    push_event(state, fresh, -1, "round_outcome",
               {{"closures", closures}, {"attendance", attendance}});

    ++state.round;
    state.phase = PhaseLabel::Communication;
    std::fill(pub.declared.begin(), pub.declared.end(), -1);
    if (state.round == state.horizon) {
      state.terminal = true;
    } else {
      draw_closures(state, rng);
    }
  }

  StepResult result{std::move(state), {}, std::move(fresh)};
  result.observations.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    result.observations.push_back(pub_observe(result.state, i));
  }
  return result;
}

CooperationLabel pub_label(PhaseLabel phase, const ActionAttempt& action,
                           const SubstrateState& state, int seat) {
  const auto& pub = game(state);
  if (phase == PhaseLabel::Communication) {
    // Lying about a closure is the non-cooperative move.
    for (int claim : parse_claims(action.text)) {
      if (!pub.closed[static_cast<std::size_t>(claim)]) return {false};
    }
    return {true};
  }
  const int declared = pub.declared[static_cast<std::size_t>(seat)];
  const int venue = pub_from_token(action.token);
  if (declared < 0) return {false};  // made no promise to keep
  if (venue == declared) return {true};
  const bool declared_closed = pub.closed[static_cast<std::size_t>(declared)];
  if (venue >= 0) {
    return {declared_closed && !pub.closed[static_cast<std::size_t>(venue)]};
  }
  // Home is cooperative only when everything the seat promised is shut.
  return {declared_closed && pub.closed[0] && pub.closed[1]};
}

Bounds pub_bounds(const ScenarioSpec& spec) {
  const double friends = std::min(2, spec.population_size - 1);
  const double per_round = kPreferenceBonus + kFriendBonus * friends;
  return {0.0, per_round * spec.horizon};
}

}  // namespace

const SubstrateOps& pub_coordination_ops() {
  static const SubstrateOps ops{pub_init,    pub_observe, pub_step,
                                pub_default, pub_label,   pub_bounds};
  return ops;
}

}  // namespace arena::detail
