#pragma once

#include "colearn/agent.hpp"
#include "colearn/belief.hpp"
#include "colearn/environment.hpp"
#include "colearn/network.hpp"

#include "json.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <span>
#include <vector>

namespace colearn {

struct SimConfig {
    std::size_t agents = 20;
    int hex_disc_radius = 6;
    double circumradius = 10.0;
    double comm_radius = 20.0;    ///< C_r, world units
    double comm_frequency = 0.1;  ///< C_f
    double epsilon = 0.0;
    Topology topology = Topology::complete();
    std::int64_t max_ticks = 30000;
    double speed = 5.0;
    std::uint64_t seed = 0;
    std::int64_t sample_every = 100;

    /// Throws ConfigError naming the first offending field.
    void validate() const;

    friend bool operator==(const SimConfig&, const SimConfig&) = default;
};

struct SimState {
    SimConfig config;
    std::shared_ptr<const HexGrid> grid;
    GroundTruth truth;
    InteractionNetwork network;
    std::vector<AgentState> agents;
    std::int64_t tick = 0;
    std::uint64_t fusion_events = 0; ///< cumulative pairwise fusions
    Rng rng;

    std::vector<Belief> beliefs() const;
};

/// Pairs that fused during one tick.
struct TickOutcome {
    std::vector<Edge> fusions;
};

struct TrajectoryPoint {
    std::int64_t tick = 0;
    double average_error = 0.0;
    double mean_certainty = 0.0; ///< mean fraction of certain propositions
    std::uint64_t fusion_events = 0; ///< cumulative up to this tick

    friend bool operator==(const TrajectoryPoint&, const TrajectoryPoint&) = default;
};

struct RunRecord {
    SimConfig config;
    std::vector<TrajectoryPoint> trajectory;
    std::int64_t terminal_tick = 0;
    bool converged = false;
    double steady_state_error = 0.0;

    friend bool operator==(const RunRecord&, const RunRecord&) = default;
};

/// Agents at the launch site with all-Unknown beliefs and fresh targets.
SimState initialize(const SimConfig& config);

/// One simulation step. Phases, in order:
///   1. every agent advances towards its destination
///   2. agents standing on their target gather evidence
///   3. the physical network is rebuilt from positions
///   4. eligible edges are restricted to broadcasting agents
///   5. greedy matching in a shuffled order; each matched pair fuses mutually
///   6. Saturated agents stay broadcasting for the next tick
/// The generator in `state` is consumed in exactly this order.
TickOutcome tick(SimState& state);

/// All beliefs identical and free of Unknown entries.
bool consensus_reached(std::span<const Belief> beliefs);

double average_error(std::span<const Belief> beliefs, const GroundTruth& truth);

TrajectoryPoint sample(const SimState& state);

using TickObserver = std::function<void(const SimState&)>;

/// Runs to unanimous consensus or `max_ticks`. `observer`, when set, sees the
/// initial state and the state after every tick.
RunRecord run(const SimConfig& config, const TickObserver& observer = {});

nlohmann::ordered_json to_json(const SimConfig& config);
nlohmann::ordered_json to_json(const RunRecord& record);

} // namespace colearn
