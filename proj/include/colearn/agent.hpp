#pragma once

#include "colearn/belief.hpp"
#include "colearn/environment.hpp"
#include "colearn/network.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace colearn {

enum class Mode : std::uint8_t { Exploring, Broadcasting, Saturated };

std::string_view to_string(Mode mode) noexcept;

struct AgentState {
    AgentId id = 0;
    Point position;
    std::optional<PropositionIndex> target;   ///< uncertain proposition being investigated
    std::optional<PropositionIndex> waypoint; ///< cell a Saturated agent is roaming towards
    Belief belief;
    Mode mode = Mode::Exploring;
    double speed = 5.0;
};

/// Whether the agent currently offers its belief to peers. Saturated agents
/// rebroadcast continuously, except in the asocial regime (comm_frequency 0).
inline bool is_broadcasting(const AgentState& agent, double comm_frequency) noexcept {
    return agent.mode == Mode::Broadcasting || (agent.mode == Mode::Saturated && comm_frequency > 0.0);
}

/// Uniform draw from the uncertain propositions; nullopt when none remain.
std::optional<PropositionIndex> select_target(const Belief& belief, Rng& rng);

bool at_target(const AgentState& agent, const HexGrid& grid);

/// Gather evidence at the target cell, pick the next target and roll for
/// the communicating state. An agent already broadcasting stays so.
AgentState on_arrival(AgentState agent, const HexGrid& grid, const GroundTruth& truth, const NoiseModel& noise,
                      double comm_frequency, Rng& rng);

/// Adopt `agent.belief ⊙ partner` and stop broadcasting. Retargets when the
/// current target became certain; becomes Saturated when nothing is left.
AgentState on_fusion(AgentState agent, const Belief& partner, Rng& rng);

/// Straight-line move of at most `speed` towards the target (or, when
/// Saturated, towards a random waypoint that is redrawn on arrival).
AgentState advance_position(AgentState agent, const HexGrid& grid, Rng& rng);

/// "tick id x y mode certainty belief"
std::string trace_line(std::int64_t tick, const AgentState& agent);

} // namespace colearn
