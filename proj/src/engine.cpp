#include "colearn/engine.hpp"

#include "colearn/errors.hpp"

#include <algorithm>
#include <string>

namespace colearn {

void SimConfig::validate() const {
    if (agents < 2) throw ConfigError("agents", "need at least 2 agents, got " + std::to_string(agents));
    if (hex_disc_radius < 1) throw ConfigError("hex_disc_radius", "must be >= 1");
    if (!(circumradius > 0.0)) throw ConfigError("circumradius", "must be positive");
    if (!(comm_radius > 0.0)) throw ConfigError("C_r", "must be positive");
    if (!(comm_frequency >= 0.0 && comm_frequency <= 1.0)) throw ConfigError("C_f", "must lie in [0, 1]");
    if (!(epsilon >= 0.0 && epsilon <= 0.5)) throw ConfigError("epsilon", "must lie in [0, 0.5]");
    if (max_ticks < 1) throw ConfigError("max_ticks", "must be >= 1");
    if (!(speed > 0.0)) throw ConfigError("speed", "must be positive");
    if (sample_every < 1) throw ConfigError("sample_every", "must be >= 1");
    if (topology.kind == Topology::Kind::Lattice) {
        if (topology.k % 2 != 0) throw ConfigError("topology", "lattice k must be even");
        if (topology.k < 2 || static_cast<std::size_t>(topology.k) + 2 > agents) {
            throw ConfigError("topology", "lattice k must lie in [2, agents - 2]");
        }
    }
}

std::vector<Belief> SimState::beliefs() const {
    std::vector<Belief> out;
    out.reserve(agents.size());
    for (const AgentState& a : agents) out.push_back(a.belief);
    return out;
}

SimState initialize(const SimConfig& config) {
    config.validate();

    SimState state;
    state.config = config;
    state.rng.seed(config.seed);
    state.grid = std::make_shared<const HexGrid>(build_grid(config.hex_disc_radius, config.circumradius));
    state.network = build_interaction_network(config.topology, config.agents);
    state.truth = sample_ground_truth(state.grid->size(), state.rng);

    state.agents.reserve(config.agents);
    for (AgentId id = 0; id < config.agents; ++id) {
        AgentState agent;
        agent.id = id;
        agent.position = state.grid->launch();
        agent.belief = Belief::all_unknown(state.grid->size());
        agent.mode = Mode::Exploring;
        agent.speed = config.speed;
        agent.target = select_target(agent.belief, state.rng);
        state.agents.push_back(std::move(agent));
    }
    return state;
}

namespace {

bool agents_in_consensus(const std::vector<AgentState>& agents) {
    if (agents.empty()) return false;
    for (const AgentState& a : agents) {
        if (a.mode != Mode::Saturated) return false;
    }
    const Belief& first = agents.front().belief;
    return std::all_of(agents.begin() + 1, agents.end(), [&](const AgentState& a) { return a.belief == first; });
}

} // namespace

TickOutcome tick(SimState& state) {
    const HexGrid& grid = *state.grid;
    const NoiseModel noise(state.config.epsilon);
    const double comm_frequency = state.config.comm_frequency;
    auto& agents = state.agents;

    for (AgentState& a : agents) a = advance_position(std::move(a), grid, state.rng);

    for (AgentState& a : agents) {
        if (at_target(a, grid)) a = on_arrival(std::move(a), grid, state.truth, noise, comm_frequency, state.rng);
    }

    std::vector<Point> positions;
    positions.reserve(agents.size());
    for (const AgentState& a : agents) positions.push_back(a.position);
    const EdgeSet physical = physical_edges(positions, state.config.comm_radius);

    std::vector<AgentId> broadcasting;
    for (const AgentState& a : agents) {
        if (is_broadcasting(a, comm_frequency)) broadcasting.push_back(a.id);
    }

    TickOutcome outcome;
    if (broadcasting.size() >= 2) {
        const EdgeSet eligible = eligible_edges(physical, state.network, broadcasting);

        std::shuffle(broadcasting.begin(), broadcasting.end(), state.rng);
        if (!eligible.empty()) {
            std::vector<std::vector<AgentId>> neighbours(agents.size());
            for (const Edge& e : eligible) {
                neighbours[e.first].push_back(e.second);
                neighbours[e.second].push_back(e.first);
            }
            std::vector<bool> matched(agents.size(), false);
            std::vector<AgentId> open;
            for (AgentId a : broadcasting) {
                if (matched[a]) continue;
                open.clear();
                for (AgentId b : neighbours[a]) {
                    if (!matched[b]) open.push_back(b);
                }
                if (open.empty()) continue;
                std::uniform_int_distribution<std::size_t> pick(0, open.size() - 1);
                const AgentId b = open[pick(state.rng)];
                matched[a] = matched[b] = true;

                const Belief belief_a = agents[a].belief;
                const Belief belief_b = agents[b].belief;
                agents[a] = on_fusion(std::move(agents[a]), belief_b, state.rng);
                agents[b] = on_fusion(std::move(agents[b]), belief_a, state.rng);
                outcome.fusions.push_back(make_edge(a, b));
            }
        }
    }

    // Phase 6 needs no work: Saturated agents are broadcasting by mode
    // (see is_broadcasting), so they are offered again on the next tick.

    state.fusion_events += outcome.fusions.size();
    ++state.tick;
    return outcome;
}

bool consensus_reached(std::span<const Belief> beliefs) {
    if (beliefs.empty()) return false;
    const Belief& first = beliefs.front();
    if (!first.fully_certain()) return false;
    return std::all_of(beliefs.begin() + 1, beliefs.end(), [&](const Belief& b) { return b == first; });
}

double average_error(std::span<const Belief> beliefs, const GroundTruth& truth) {
    if (beliefs.empty()) throw ContractViolation("average_error: empty population");
    double sum = 0.0;
    for (const Belief& b : beliefs) sum += belief_error(b, truth);
    return sum / static_cast<double>(beliefs.size());
}

TrajectoryPoint sample(const SimState& state) {
    TrajectoryPoint point;
    point.tick = state.tick;
    double error = 0.0;
    double certainty = 0.0;
    const double n = static_cast<double>(state.truth.size());
    for (const AgentState& a : state.agents) {
        error += belief_error(a.belief, state.truth);
        certainty += static_cast<double>(a.belief.certainty()) / n;
    }
    const double m = static_cast<double>(state.agents.size());
    point.average_error = error / m;
    point.mean_certainty = certainty / m;
    point.fusion_events = state.fusion_events;
    return point;
}

RunRecord run(const SimConfig& config, const TickObserver& observer) {
    SimState state = initialize(config);
    if (observer) observer(state);

    RunRecord record;
    record.config = config;
    record.trajectory.push_back(sample(state));

    bool converged = agents_in_consensus(state.agents);
    while (!converged && state.tick < config.max_ticks) {
        tick(state);
        if (observer) observer(state);
        converged = agents_in_consensus(state.agents);
        if (state.tick % config.sample_every == 0) record.trajectory.push_back(sample(state));
    }
    if (record.trajectory.back().tick != state.tick) record.trajectory.push_back(sample(state));

    record.terminal_tick = state.tick;
    record.converged = converged;
    record.steady_state_error = record.trajectory.back().average_error;
    return record;
}

nlohmann::ordered_json to_json(const SimConfig& config) {
    return nlohmann::ordered_json{
        {"agents", config.agents},
        {"hex_disc_radius", config.hex_disc_radius},
        {"circumradius", config.circumradius},
        {"C_r", config.comm_radius},
        {"C_f", config.comm_frequency},
        {"epsilon", config.epsilon},
        {"topology", config.topology.to_string()},
        {"max_ticks", config.max_ticks},
        {"speed", config.speed},
        {"seed", config.seed},
        {"sample_every", config.sample_every},
    };
}

nlohmann::ordered_json to_json(const RunRecord& record) {
    nlohmann::ordered_json trajectory = nlohmann::ordered_json::array();
    for (const TrajectoryPoint& p : record.trajectory) {
        trajectory.push_back({
            {"tick", p.tick},
            {"average_error", p.average_error},
            {"mean_certainty", p.mean_certainty},
            {"fusion_events", p.fusion_events},
        });
    }
    return nlohmann::ordered_json{
        {"config", to_json(record.config)},
        {"trajectory", std::move(trajectory)},
        {"summary",
         {
             {"terminal_tick", record.terminal_tick},
             {"converged", record.converged},
             {"steady_state_error", record.steady_state_error},
         }},
    };
}

} // namespace colearn
