#include "colearn/environment.hpp"

#include "colearn/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <ostream>
#include <string>

namespace colearn {

HexGrid::HexGrid(std::vector<HexCell> cells, Point launch, double circumradius)
    : cells_(std::move(cells)), launch_(launch), circumradius_(circumradius) {}

void HexGrid::dump(std::ostream& out) const {
    out << "index q r x y\n";
    char line[128];
    for (const HexCell& c : cells_) {
        std::snprintf(line, sizeof line, "%zu %d %d %.6f %.6f\n", c.index, c.q, c.r, c.center.x, c.center.y);
        out << line;
    }
}

HexGrid build_grid(int hex_disc_radius, double circumradius) {
    if (hex_disc_radius < 1) {
        throw ConfigError("hex_disc_radius", "must be >= 1, got " + std::to_string(hex_disc_radius));
    }
    if (!(circumradius > 0.0)) {
        throw ConfigError("circumradius", "must be positive");
    }

    const int radius = hex_disc_radius;
    const double sqrt3 = std::sqrt(3.0);
    std::vector<HexCell> cells;
    cells.reserve(static_cast<std::size_t>(3 * radius * (radius + 1)));

    // Row-major over axial r, then q; the launch hex (0, 0) is skipped.
    for (int r = -radius; r <= radius; ++r) {
        const int q_min = std::max(-radius, -r - radius);
        const int q_max = std::min(radius, -r + radius);
        for (int q = q_min; q <= q_max; ++q) {
            if (q == 0 && r == 0) continue;
            HexCell cell;
            cell.index = cells.size();
            cell.q = q;
            cell.r = r;
            cell.center = {circumradius * sqrt3 * (q + r / 2.0), circumradius * 1.5 * r};
            cells.push_back(cell);
        }
    }
    return HexGrid(std::move(cells), Point{0.0, 0.0}, circumradius);
}

NoiseModel::NoiseModel(double epsilon) : epsilon_(epsilon) {
    if (!(epsilon >= 0.0 && epsilon <= 0.5)) {
        throw ConfigError("epsilon", "must lie in [0, 0.5], got " + std::to_string(epsilon));
    }
}

GroundTruth sample_ground_truth(std::size_t n, Rng& rng) {
    if (n == 0) throw ConfigError("n", "ground truth needs at least one proposition");
    std::bernoulli_distribution coin(0.5);
    std::vector<bool> values(n);
    for (std::size_t i = 0; i < n; ++i) values[i] = coin(rng);
    return GroundTruth(std::move(values));
}

Belief observe(PropositionIndex i, const GroundTruth& truth, const NoiseModel& noise, Rng& rng) {
    if (i >= truth.size()) {
        throw ContractViolation("observe: proposition " + std::to_string(i) + " out of range [0, " +
                                std::to_string(truth.size()) + ")");
    }
    Belief evidence = Belief::all_unknown(truth.size());
    // Always consume one draw so the stream does not depend on epsilon == 0.
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    const bool flipped = unit(rng) < noise.epsilon();
    evidence[i] = flipped ? negate(truth[i]) : truth[i];
    return evidence;
}

} // namespace colearn
