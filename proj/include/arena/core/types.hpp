#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace arena {

using json = nlohmann::json;

/// Unique name of a tournament participant.
struct AgentId {
  std::string name;

  auto operator<=>(const AgentId&) const = default;
};

enum class Mode { Resident, Visitor };

enum class Phase { Development, Evaluation };

enum class Role { Focal, Background };

/// Capability tags attached to scenarios.
enum class Tag {
  Negotiation,
  Persuasion,
  DiscouragingAntisocialBehavior,
  Calculation,
  Coordination,
  HiddenInformation,
  SocialNetworks,
  ConventionFollowing,
};

inline constexpr Tag kAllTags[] = {
    Tag::Negotiation,
    Tag::Persuasion,
    Tag::DiscouragingAntisocialBehavior,
    Tag::Calculation,
    Tag::Coordination,
    Tag::HiddenInformation,
    Tag::SocialNetworks,
    Tag::ConventionFollowing,
};

std::string to_string(Tag tag);
std::optional<Tag> tag_from_string(const std::string& name);

/// The five game substrates.
enum class SubstrateId {
  RealityShow,
  PubCoordination,
  Haggling,
  LaborCollectiveAction,
  StateFormation,
};

inline constexpr SubstrateId kAllSubstrates[] = {
    SubstrateId::RealityShow,
    SubstrateId::PubCoordination,
    SubstrateId::Haggling,
    SubstrateId::LaborCollectiveAction,
    SubstrateId::StateFormation,
};

std::string to_string(SubstrateId id);
std::optional<SubstrateId> substrate_from_string(const std::string& name);

/// Static per-substrate metadata: seat limits, defaults, and tags.
struct SubstrateInfo {
  SubstrateId id;
  std::string name;
  int min_seats;
  int max_seats;
  int default_seats;
  int default_horizon;
  std::set<Tag> tags;
};

const SubstrateInfo& substrate_info(SubstrateId id);

std::string to_string(Mode mode);
std::optional<Mode> mode_from_string(const std::string& name);
std::string to_string(Phase phase);
std::optional<Phase> phase_from_string(const std::string& name);
std::string to_string(Role role);
std::optional<Role> role_from_string(const std::string& name);

/// One scenario: a substrate instance paired with a background strategy,
/// a population mode, and score bounds.
struct ScenarioSpec {
  std::string scenario_id;
  std::string substrate_id;  // textual so unknown names survive until validation
  Mode mode = Mode::Resident;
  std::string background_strategy_id;
  int population_size = 0;   // n seats
  int background_count = 0;  // k background seats (visitor: n - 1)
  int horizon = 0;           // rounds
  std::set<Tag> tags;
  double theoretical_min = 0.0;
  double theoretical_max = 0.0;
  Phase phase = Phase::Development;
  std::uint64_t seed = 0;      // scenario-level salt (seat order, defaults)
  json params = json::object();  // substrate parameter overrides

  std::optional<SubstrateId> substrate() const {
    return substrate_from_string(substrate_id);
  }
};

enum class PhaseLabel { Communication, Action, Outcome };

std::string to_string(PhaseLabel label);

/// A structured event emitted by the game master. seat == -1 means the
/// environment itself acted (closures, raids, payouts).
struct Event {
  int round = 0;
  int seat = -1;
  std::string kind;
  json payload = json::object();

  bool operator==(const Event&) const = default;
};

/// What one seat sees before acting: the public history plus its own
/// private record.
struct Observation {
  int round = 0;
  PhaseLabel phase_label = PhaseLabel::Communication;
  std::vector<Event> public_events;  // cumulative, ordered by emission
  json private_state = json::object();
};

enum class ActionKind { Message, Choice };

/// An attempted action. The game master validates it against the current
/// substrate phase and substitutes the substrate default when malformed.
struct ActionAttempt {
  ActionKind kind = ActionKind::Choice;
  std::string token;   // discrete choices ("C", "accept", "A", ...)
  double value = 0.0;  // numeric payloads (offers, shares)
  std::string text;    // free-form message content

  static ActionAttempt choice(std::string tok) {
    return {ActionKind::Choice, std::move(tok), 0.0, ""};
  }
  static ActionAttempt choice(std::string tok, double v) {
    return {ActionKind::Choice, std::move(tok), v, ""};
  }
  static ActionAttempt message(std::string tok, std::string body = "") {
    return {ActionKind::Message, std::move(tok), 0.0, std::move(body)};
  }

  bool operator==(const ActionAttempt&) const = default;
};

/// One agent's score for one (scenario, run, role). Background seats carry
/// raw scores only; normalization applies to focal seats.
struct ScoreRecord {
  AgentId agent;
  std::string scenario_id;
  int run_index = 0;
  Role role = Role::Focal;
  double raw = 0.0;
  std::optional<double> normalized;
};

/// Seat-to-policy binding for one episode.
struct SeatAssignment {
  struct Seat {
    int seat_index = 0;
    std::string policy_ref;  // roster agent name or background strategy id
    Role role = Role::Background;
  };
  std::vector<Seat> seats;

  int focal_count() const {
    int n = 0;
    for (const auto& s : seats) n += s.role == Role::Focal ? 1 : 0;
    return n;
  }
};

}  // namespace arena
