#pragma once

#include "colearn/belief.hpp"

#include <cmath>
#include <cstdint>
#include <iosfwd>
#include <random>
#include <vector>

namespace colearn {

/// One generator per run; every stochastic step draws from it in a fixed order.
using Rng = std::mt19937_64;

struct Point {
    double x = 0.0;
    double y = 0.0;

    friend bool operator==(const Point&, const Point&) = default;
};

inline double distance(Point a, Point b) noexcept {
    return std::hypot(a.x - b.x, a.y - b.y);
}

/// Within this many world units of a cell centre an agent counts as arrived.
inline constexpr double kArrivalThreshold = 1.0;

struct HexCell {
    PropositionIndex index = 0;
    int q = 0; ///< axial column
    int r = 0; ///< axial row
    Point center;
};

/// Pointy-top hexagonal disc. The centre hex is the launch site and carries
/// no proposition; every other hex maps to one proposition index in [0, n).
class HexGrid {
public:
    HexGrid(std::vector<HexCell> cells, Point launch, double circumradius);

    std::size_t size() const noexcept { return cells_.size(); }
    const std::vector<HexCell>& cells() const noexcept { return cells_; }
    const HexCell& cell(PropositionIndex i) const { return cells_.at(i); }
    Point center(PropositionIndex i) const { return cells_.at(i).center; }
    Point launch() const noexcept { return launch_; }
    double circumradius() const noexcept { return circumradius_; }

    /// Plain-text table: "index q r x y", one cell per line, after a header.
    void dump(std::ostream& out) const;

private:
    std::vector<HexCell> cells_;
    Point launch_;
    double circumradius_;
};

/// Disc of 3r(r+1)+1 hexes centred on the launch cell, leaving n = 3r(r+1)
/// propositions. Throws ConfigError for a non-positive radius or size.
HexGrid build_grid(int hex_disc_radius, double circumradius);

class NoiseModel {
public:
    explicit NoiseModel(double epsilon);
    double epsilon() const noexcept { return epsilon_; }

private:
    double epsilon_;
};

/// Each proposition independently True with probability 1/2.
GroundTruth sample_ground_truth(std::size_t n, Rng& rng);

/// Noisy evidence about proposition `i`: Unknown everywhere else, and the
/// true value at `i` with probability 1 - epsilon (flipped otherwise).
Belief observe(PropositionIndex i, const GroundTruth& truth, const NoiseModel& noise, Rng& rng);

} // namespace colearn
