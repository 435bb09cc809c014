#pragma once

#include "colearn/environment.hpp"

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace colearn {

using AgentId = std::size_t;

/// Unordered agent pair stored with first < second.
struct Edge {
    AgentId first = 0;
    AgentId second = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(AgentId a, AgentId b) noexcept {
    return a < b ? Edge{a, b} : Edge{b, a};
}

/// Sorted, duplicate-free set of undirected edges.
class EdgeSet {
public:
    EdgeSet() = default;
    /// Sorts and deduplicates; self-pairs are dropped.
    explicit EdgeSet(std::vector<Edge> edges);

    std::size_t size() const noexcept { return edges_.size(); }
    bool empty() const noexcept { return edges_.empty(); }
    bool contains(AgentId a, AgentId b) const noexcept;
    bool contains(const Edge& e) const noexcept { return contains(e.first, e.second); }

    auto begin() const noexcept { return edges_.begin(); }
    auto end() const noexcept { return edges_.end(); }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    friend bool operator==(const EdgeSet&, const EdgeSet&) = default;

private:
    std::vector<Edge> edges_;
};

/// Interaction-network family. For `Complete`, `k` is ignored and the
/// effective degree is m - 1.
struct Topology {
    enum class Kind { Lattice, Complete };

    Kind kind = Kind::Complete;
    int k = 0;

    static Topology lattice(int k) { return {Kind::Lattice, k}; }
    static Topology complete() { return {Kind::Complete, 0}; }

    /// "complete" or "lattice:K".
    std::string to_string() const;
    /// Inverse of to_string(); throws ConfigError on anything else.
    static Topology parse(const std::string& text);
    /// Name column used in CSV output ("lattice" / "complete").
    std::string name() const { return kind == Kind::Lattice ? "lattice" : "complete"; }
    /// Degree of every vertex when built over `m` agents.
    int degree(std::size_t m) const noexcept {
        return kind == Kind::Lattice ? k : static_cast<int>(m) - 1;
    }

    friend bool operator==(const Topology&, const Topology&) = default;
};

/// Static, undirected "who may talk to whom" graph. Immutable once built.
class InteractionNetwork {
public:
    InteractionNetwork() = default;

    std::size_t size() const noexcept { return m_; }
    bool adjacent(AgentId a, AgentId b) const noexcept { return a != b && adjacency_[a * m_ + b] != 0; }
    std::size_t degree(AgentId a) const noexcept;
    const Topology& topology() const noexcept { return topology_; }
    EdgeSet edges() const;

    /// "i j" per line, i < j.
    void write_edge_list(std::ostream& out) const;

private:
    InteractionNetwork(std::size_t m, Topology topology);
    void connect(AgentId a, AgentId b);

    friend InteractionNetwork ring_lattice(std::size_t m, int k);
    friend InteractionNetwork complete_graph(std::size_t m);

    std::size_t m_ = 0;
    Topology topology_;
    std::vector<unsigned char> adjacency_;
};

/// Agents on a ring, each joined to its k/2 nearest neighbours on either side.
/// Requires m >= 3, k even, 2 <= k <= m - 2.
InteractionNetwork ring_lattice(std::size_t m, int k);

InteractionNetwork complete_graph(std::size_t m);

InteractionNetwork build_interaction_network(const Topology& topology, std::size_t m);

/// Pairs within `comm_radius` of each other (closed ball).
EdgeSet physical_edges(std::span<const Point> positions, double comm_radius);

/// Edges present in both layers whose endpoints are both broadcasting.
EdgeSet eligible_edges(const EdgeSet& physical, const InteractionNetwork& interaction,
                       std::span<const AgentId> broadcasting);

} // namespace colearn
