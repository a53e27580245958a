#pragma once

#include "arena/substrates/substrate.hpp"

// Internal per-substrate entry points, dispatched from substrate.cpp.
namespace arena::detail {

double param_or(const json& params, const char* key, double fallback);
std::string param_or(const json& params, const char* key,
                     const std::string& fallback);

void push_event(SubstrateState& state, std::vector<Event>& fresh, int seat,
                std::string kind, json payload);
void reject_attempt(SubstrateState& state, std::vector<Event>& fresh, int seat,
                    const std::string& reason);
Observation base_observation(const SubstrateState& state);

struct SubstrateOps {
  SubstrateState (*init)(const ScenarioSpec&, std::uint64_t);
  Observation (*observe)(const SubstrateState&, int);
  StepResult (*step)(const SubstrateState&, const std::vector<ActionAttempt>&,
                     Rng&);
  ActionAttempt (*defaults)(const SubstrateState&, int);
  CooperationLabel (*label)(PhaseLabel, const ActionAttempt&,
                            const SubstrateState&, int);
  Bounds (*bounds)(const ScenarioSpec&);
};

const SubstrateOps& reality_show_ops();
const SubstrateOps& pub_coordination_ops();
const SubstrateOps& haggling_ops();
const SubstrateOps& labor_ops();
const SubstrateOps& state_formation_ops();

}  // namespace arena::detail
