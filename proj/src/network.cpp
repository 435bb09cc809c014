#include "colearn/network.hpp"

#include "colearn/errors.hpp"

#include <algorithm>
#include <charconv>
#include <ostream>

namespace colearn {

EdgeSet::EdgeSet(std::vector<Edge> edges) {
    for (Edge& e : edges) e = make_edge(e.first, e.second);
    std::erase_if(edges, [](const Edge& e) { return e.first == e.second; });
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);
}

bool EdgeSet::contains(AgentId a, AgentId b) const noexcept {
    return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

std::string Topology::to_string() const {
    return kind == Kind::Lattice ? "lattice:" + std::to_string(k) : "complete";
}

Topology Topology::parse(const std::string& text) {
    if (text == "complete") return complete();
    const std::string prefix = "lattice:";
    if (text.rfind(prefix, 0) == 0) {
        const char* first = text.data() + prefix.size();
        const char* last = text.data() + text.size();
        int k = 0;
        auto [ptr, ec] = std::from_chars(first, last, k);
        if (ec == std::errc() && ptr == last && first != last) return lattice(k);
    }
    throw ConfigError("topology", "expected \"complete\" or \"lattice:K\", got \"" + text + "\"");
}

InteractionNetwork::InteractionNetwork(std::size_t m, Topology topology)
    : m_(m), topology_(topology), adjacency_(m * m, 0) {}

void InteractionNetwork::connect(AgentId a, AgentId b) {
    adjacency_[a * m_ + b] = 1;
    adjacency_[b * m_ + a] = 1;
}

std::size_t InteractionNetwork::degree(AgentId a) const noexcept {
    std::size_t d = 0;
    for (AgentId b = 0; b < m_; ++b) d += adjacent(a, b) ? 1 : 0;
    return d;
}

EdgeSet InteractionNetwork::edges() const {
    std::vector<Edge> out;
    for (AgentId a = 0; a < m_; ++a)
        for (AgentId b = a + 1; b < m_; ++b)
            if (adjacent(a, b)) out.push_back({a, b});
    return EdgeSet(std::move(out));
}

void InteractionNetwork::write_edge_list(std::ostream& out) const {
    for (const Edge& e : edges()) out << e.first << ' ' << e.second << '\n';
}

InteractionNetwork ring_lattice(std::size_t m, int k) {
    if (m < 3) throw ConfigError("agents", "ring lattice needs at least 3 agents");
    if (k % 2 != 0) throw ConfigError("k", "lattice connectivity must be even, got " + std::to_string(k));
    if (k < 2 || static_cast<std::size_t>(k) > m - 2) {
        throw ConfigError("k", "lattice connectivity must lie in [2, " + std::to_string(m - 2) + "], got " +
                                   std::to_string(k));
    }
    InteractionNetwork net(m, Topology::lattice(k));
    for (AgentId a = 0; a < m; ++a)
        for (int step = 1; step <= k / 2; ++step) net.connect(a, (a + static_cast<std::size_t>(step)) % m);
    return net;
}

InteractionNetwork complete_graph(std::size_t m) {
    if (m < 2) throw ConfigError("agents", "complete graph needs at least 2 agents");
    InteractionNetwork net(m, Topology::complete());
    for (AgentId a = 0; a < m; ++a)
        for (AgentId b = a + 1; b < m; ++b) net.connect(a, b);
    return net;
}

InteractionNetwork build_interaction_network(const Topology& topology, std::size_t m) {
    return topology.kind == Topology::Kind::Lattice ? ring_lattice(m, topology.k) : complete_graph(m);
}

EdgeSet physical_edges(std::span<const Point> positions, double comm_radius) {
    if (!(comm_radius > 0.0)) throw ConfigError("C_r", "communication radius must be positive");
    std::vector<Edge> out;
    for (AgentId a = 0; a < positions.size(); ++a)
        for (AgentId b = a + 1; b < positions.size(); ++b)
            if (distance(positions[a], positions[b]) <= comm_radius) out.push_back({a, b});
    return EdgeSet(std::move(out));
}

EdgeSet eligible_edges(const EdgeSet& physical, const InteractionNetwork& interaction,
                       std::span<const AgentId> broadcasting) {
    std::vector<bool> active(interaction.size(), false);
    for (AgentId a : broadcasting) {
        if (a < active.size()) active[a] = true;
    }
    std::vector<Edge> out;
    for (const Edge& e : physical) {
        if (e.second < active.size() && active[e.first] && active[e.second] &&
            interaction.adjacent(e.first, e.second)) {
            out.push_back(e);
        }
    }
    return EdgeSet(std::move(out));
}

} // namespace colearn
