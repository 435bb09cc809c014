#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "colearn/errors.hpp"
#include "colearn/network.hpp"

#include <random>
#include <sstream>

using namespace colearn;

namespace {

std::vector<Point> random_positions(std::size_t m, double extent, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> coord(-extent, extent);
    std::vector<Point> out(m);
    for (auto& p : out) p = {coord(rng), coord(rng)};
    return out;
}

} // namespace

TEST_CASE("ring lattice") {
    SUBCASE("k = 2 over 20 agents is a ring") {
        const auto net = ring_lattice(20, 2);
        CHECK(net.edges().size() == 20);
        for (AgentId a = 0; a < 20; ++a) {
            CHECK(net.degree(a) == 2);
            CHECK(net.adjacent(a, (a + 1) % 20));
            CHECK(net.adjacent(a, (a + 19) % 20));
        }
    }
    SUBCASE("k = 4 over 20 agents") {
        const auto net = ring_lattice(20, 4);
        CHECK(net.edges().size() == 40);
        for (AgentId a = 0; a < 20; ++a) CHECK(net.degree(a) == 4);
        CHECK(net.adjacent(0, 2));
        CHECK(net.adjacent(0, 18));
        CHECK_FALSE(net.adjacent(0, 3));
    }
    SUBCASE("m = 4, k = 2 is the 4-cycle") {
        const auto net = ring_lattice(4, 2);
        CHECK(net.edges() == EdgeSet({{0, 1}, {1, 2}, {2, 3}, {0, 3}}));
    }
    SUBCASE("symmetric, no self loops, degree k for every admissible k") {
        for (std::size_t m = 3; m <= 24; ++m) {
            for (int k = 2; static_cast<std::size_t>(k) + 2 <= m; k += 2) {
                const auto net = ring_lattice(m, k);
                CHECK(net.topology() == Topology::lattice(k));
                for (AgentId a = 0; a < m; ++a) {
                    CHECK_FALSE(net.adjacent(a, a));
                    CHECK(net.degree(a) == static_cast<std::size_t>(k));
                    for (AgentId b = 0; b < m; ++b) CHECK(net.adjacent(a, b) == net.adjacent(b, a));
                }
            }
        }
    }
    SUBCASE("invalid connectivity") {
        CHECK_THROWS_AS(ring_lattice(20, 3), ConfigError);
        CHECK_THROWS_AS(ring_lattice(20, 0), ConfigError);
        CHECK_THROWS_AS(ring_lattice(20, 20), ConfigError);
        CHECK_THROWS_AS(ring_lattice(2, 2), ConfigError);
    }
}

TEST_CASE("complete graph") {
    const auto net = complete_graph(20);
    CHECK(net.edges().size() == 190);
    for (AgentId a = 0; a < 20; ++a) CHECK(net.degree(a) == 19);
    CHECK(complete_graph(2).edges() == EdgeSet({{0, 1}}));
    CHECK(complete_graph(5).edges().size() == 10);
    CHECK_THROWS_AS(complete_graph(1), ConfigError);
}

TEST_CASE("ring lattice with k = m - 2 misses exactly the antipodal pairs") {
    const std::size_t m = 6;
    const auto lattice = ring_lattice(m, static_cast<int>(m) - 2);
    const auto complete = complete_graph(m);
    std::vector<Edge> missing;
    for (const Edge& e : complete.edges()) {
        if (!lattice.edges().contains(e)) missing.push_back(e);
    }
    CHECK(missing == std::vector<Edge>{{0, 3}, {1, 4}, {2, 5}});
}

TEST_CASE("topology strings") {
    CHECK(Topology::parse("complete") == Topology::complete());
    CHECK(Topology::parse("lattice:4") == Topology::lattice(4));
    CHECK(Topology::lattice(16).to_string() == "lattice:16");
    CHECK(Topology::complete().degree(20) == 19);
    CHECK_THROWS_AS(Topology::parse("lattice:"), ConfigError);
    CHECK_THROWS_AS(Topology::parse("small-world"), ConfigError);
}

TEST_CASE("physical edges") {
    SUBCASE("distance exactly C_r is connected") {
        const std::vector<Point> positions{{0.0, 0.0}, {20.0, 0.0}};
        CHECK(physical_edges(positions, 20.0).contains(0, 1));
        CHECK(physical_edges(positions, 19.999).empty());
    }
    SUBCASE("co-located agents are all connected") {
        const std::vector<Point> positions(5, Point{3.0, 4.0});
        CHECK(physical_edges(positions, 1.0).size() == 10);
    }
    SUBCASE("far apart agents are isolated") {
        const std::vector<Point> positions{{0.0, 0.0}, {100.0, 0.0}, {0.0, 100.0}};
        CHECK(physical_edges(positions, 20.0).empty());
    }
    SUBCASE("non-positive radius") {
        const std::vector<Point> positions{{0.0, 0.0}};
        CHECK_THROWS_AS(physical_edges(positions, 0.0), ConfigError);
    }
    SUBCASE("monotone in C_r and ordered pairs only") {
        std::mt19937_64 rng(21);
        for (int round = 0; round < 200; ++round) {
            const auto positions = random_positions(20, 120.0, rng);
            const double small = 5.0 + static_cast<double>(rng() % 80);
            const double large = small + static_cast<double>(rng() % 40);
            const EdgeSet inner = physical_edges(positions, small);
            const EdgeSet outer = physical_edges(positions, large);
            for (const Edge& e : inner) {
                CHECK(e.first < e.second);
                CHECK(outer.contains(e));
            }
        }
    }
}

TEST_CASE("eligible edges") {
    const std::vector<Point> together(20, Point{});
    const EdgeSet all_physical = physical_edges(together, 20.0);
    std::vector<AgentId> everyone(20);
    for (AgentId a = 0; a < 20; ++a) everyone[a] = a;

    SUBCASE("complete physical layer with a ring leaves the ring") {
        const auto ring = ring_lattice(20, 2);
        CHECK(eligible_edges(all_physical, ring, everyone) == ring.edges());
    }
    SUBCASE("nobody broadcasting") {
        CHECK(eligible_edges(all_physical, complete_graph(20), {}).empty());
    }
    SUBCASE("one physical edge with both ends broadcasting") {
        const EdgeSet one({{1, 2}});
        const std::vector<AgentId> pair{1, 2};
        CHECK(eligible_edges(one, complete_graph(20), pair) == EdgeSet({{1, 2}}));
    }
    SUBCASE("contained in the intersection of both layers for random inputs") {
        std::mt19937_64 rng(33);
        for (int round = 0; round < 200; ++round) {
            const auto positions = random_positions(20, 100.0, rng);
            const EdgeSet physical = physical_edges(positions, 40.0);
            const int k = 2 * static_cast<int>(1 + rng() % 9);
            const auto net = ring_lattice(20, k);
            std::vector<AgentId> broadcasting;
            std::vector<bool> active(20, false);
            for (AgentId a = 0; a < 20; ++a) {
                if (rng() % 2) {
                    broadcasting.push_back(a);
                    active[a] = true;
                }
            }
            const EdgeSet eligible = eligible_edges(physical, net, broadcasting);
            for (const Edge& e : eligible) {
                CHECK(physical.contains(e));
                CHECK(net.adjacent(e.first, e.second));
                CHECK(active[e.first]);
                CHECK(active[e.second]);
            }
            // and nothing that qualifies is left out
            std::size_t expected = 0;
            for (const Edge& e : physical) {
                if (net.adjacent(e.first, e.second) && active[e.first] && active[e.second]) ++expected;
            }
            CHECK(eligible.size() == expected);
        }
    }
}

TEST_CASE("edge list export") {
    std::ostringstream out;
    ring_lattice(4, 2).write_edge_list(out);
    CHECK(out.str() == "0 1\n0 3\n1 2\n2 3\n");
}
