#include "colearn/agent.hpp"

#include "colearn/errors.hpp"

#include <cstdio>

namespace colearn {

std::string_view to_string(Mode mode) noexcept {
    switch (mode) {
    case Mode::Exploring: return "exploring";
    case Mode::Broadcasting: return "broadcasting";
    case Mode::Saturated: return "saturated";
    }
    return "?";
}

std::optional<PropositionIndex> select_target(const Belief& belief, Rng& rng) {
    const auto candidates = uncertain_indices(belief);
    if (candidates.empty()) return std::nullopt;
    std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
    return candidates[pick(rng)];
}

bool at_target(const AgentState& agent, const HexGrid& grid) {
    return agent.target && distance(agent.position, grid.center(*agent.target)) <= kArrivalThreshold;
}

AgentState on_arrival(AgentState agent, const HexGrid& grid, const GroundTruth& truth, const NoiseModel& noise,
                      double comm_frequency, Rng& rng) {
    if (!agent.target) throw ContractViolation("on_arrival: agent " + std::to_string(agent.id) + " has no target");
    if (!at_target(agent, grid)) {
        throw ContractViolation("on_arrival: agent " + std::to_string(agent.id) + " is not at its target");
    }

    agent.belief = update_with_evidence(agent.belief, observe(*agent.target, truth, noise, rng));
    agent.target = select_target(agent.belief, rng);

    std::bernoulli_distribution communicate(comm_frequency);
    const bool roll = communicate(rng);
    if (!agent.target) {
        agent.mode = Mode::Saturated;
        agent.waypoint.reset();
    } else if (agent.mode != Mode::Broadcasting) {
        agent.mode = roll ? Mode::Broadcasting : Mode::Exploring;
    }
    return agent;
}

AgentState on_fusion(AgentState agent, const Belief& partner, Rng& rng) {
    if (agent.mode == Mode::Exploring) {
        throw ContractViolation("on_fusion: agent " + std::to_string(agent.id) + " is not broadcasting");
    }
    agent.belief = fuse_beliefs(agent.belief, partner);

    if (agent.belief.fully_certain()) {
        if (agent.mode != Mode::Saturated) agent.waypoint.reset();
        agent.mode = Mode::Saturated;
        agent.target.reset();
        return agent;
    }

    agent.mode = Mode::Exploring;
    agent.waypoint.reset();
    if (!agent.target || is_certain(agent.belief[*agent.target])) {
        agent.target = select_target(agent.belief, rng);
    }
    return agent;
}

AgentState advance_position(AgentState agent, const HexGrid& grid, Rng& rng) {
    Point destination;
    if (agent.target) {
        destination = grid.center(*agent.target);
    } else if (agent.mode == Mode::Saturated) {
        if (!agent.waypoint || distance(agent.position, grid.center(*agent.waypoint)) <= kArrivalThreshold) {
            std::uniform_int_distribution<std::size_t> pick(0, grid.size() - 1);
            agent.waypoint = pick(rng);
        }
        destination = grid.center(*agent.waypoint);
    } else {
        return agent;
    }

    const double gap = distance(agent.position, destination);
    if (gap <= agent.speed) {
        agent.position = destination;
    } else {
        const double scale = agent.speed / gap;
        agent.position.x += (destination.x - agent.position.x) * scale;
        agent.position.y += (destination.y - agent.position.y) * scale;
    }
    return agent;
}

std::string trace_line(std::int64_t tick, const AgentState& agent) {
    char head[160];
    std::snprintf(head, sizeof head, "%lld %zu %.4f %.4f %s %zu ", static_cast<long long>(tick), agent.id,
                  agent.position.x, agent.position.y, std::string(to_string(agent.mode)).c_str(),
                  agent.belief.certainty());
    return head + agent.belief.to_string();
}

} // namespace colearn
