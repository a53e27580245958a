#include "arena/core/types.hpp"

#include <array>
#include <stdexcept>

namespace arena {

namespace {

const std::array<SubstrateInfo, 5>& substrate_table() {
  static const std::array<SubstrateInfo, 5> table = {{
      {SubstrateId::RealityShow, "reality_show", 2, 16, 4, 10,
       {Tag::DiscouragingAntisocialBehavior, Tag::Persuasion, Tag::Calculation,
        Tag::ConventionFollowing}},
      {SubstrateId::PubCoordination, "pub_coordination", 2, 16, 6, 5,
       {Tag::Coordination, Tag::Persuasion, Tag::HiddenInformation,
        Tag::SocialNetworks}},
      {SubstrateId::Haggling, "haggling", 2, 2, 2, 6,
       {Tag::Negotiation, Tag::Calculation}},
      {SubstrateId::LaborCollectiveAction, "labor_collective_action", 2, 32, 6,
       8,
       {Tag::DiscouragingAntisocialBehavior, Tag::Persuasion,
        Tag::Calculation}},
      {SubstrateId::StateFormation, "state_formation", 2, 2, 2, 6,
       {Tag::Negotiation, Tag::Persuasion}},
  }};
  return table;
}

}  // namespace

std::string to_string(Tag tag) {
  switch (tag) {
    case Tag::Negotiation: return "negotiation";
    case Tag::Persuasion: return "persuasion";
    case Tag::DiscouragingAntisocialBehavior:
      return "discouraging_antisocial_behavior";
    case Tag::Calculation: return "calculation";
    case Tag::Coordination: return "coordination";
    case Tag::HiddenInformation: return "hidden_information";
    case Tag::SocialNetworks: return "social_networks";
    case Tag::ConventionFollowing: return "convention_following";
  }
  throw std::logic_error("unhandled tag");
}

std::optional<Tag> tag_from_string(const std::string& name) {
  for (Tag tag : kAllTags) {
    if (to_string(tag) == name) return tag;
  }
  return std::nullopt;
}

std::string to_string(SubstrateId id) { return substrate_info(id).name; }

std::optional<SubstrateId> substrate_from_string(const std::string& name) {
  for (const auto& info : substrate_table()) {
    if (info.name == name) return info.id;
  }
  return std::nullopt;
}

const SubstrateInfo& substrate_info(SubstrateId id) {
  return substrate_table()[static_cast<std::size_t>(id)];
}

std::string to_string(Mode mode) {
  return mode == Mode::Resident ? "resident" : "visitor";
}

std::optional<Mode> mode_from_string(const std::string& name) {
  if (name == "resident") return Mode::Resident;
  if (name == "visitor") return Mode::Visitor;
  return std::nullopt;
}

std::string to_string(Phase phase) {
  return phase == Phase::Development ? "development" : "evaluation";
}

std::optional<Phase> phase_from_string(const std::string& name) {
  if (name == "development" || name == "dev") return Phase::Development;
  if (name == "evaluation" || name == "eval") return Phase::Evaluation;
  return std::nullopt;
}

std::string to_string(Role role) {
  return role == Role::Focal ? "focal" : "background";
}

std::optional<Role> role_from_string(const std::string& name) {
  if (name == "focal") return Role::Focal;
  if (name == "background") return Role::Background;
  return std::nullopt;
}

std::string to_string(PhaseLabel label) {
  switch (label) {
    case PhaseLabel::Communication: return "communication";
    case PhaseLabel::Action: return "action";
    case PhaseLabel::Outcome: return "outcome";
  }
  throw std::logic_error("unhandled phase label");
}

}  // namespace arena
