#pragma once

#include "colearn/engine.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <vector>

namespace colearn {

/// Cartesian sweep over (topology, C_r, C_f, epsilon), each cell repeated
/// `repeats` times with its own derived seed. Other SimConfig fields are
/// taken from `base`.
struct SweepSpec {
    SimConfig base;
    std::vector<Topology> topologies{Topology::complete()};
    std::vector<double> comm_radii{20.0};
    std::vector<double> comm_frequencies{0.1};
    std::vector<double> epsilons{0.0};
    std::size_t repeats = 50;
    std::uint64_t base_seed = 0;

    void validate() const;
};

/// One parameter combination.
struct Cell {
    std::size_t index = 0;
    Topology topology;
    double comm_radius = 0.0;
    double comm_frequency = 0.0;
    double epsilon = 0.0;
};

struct RunTask {
    std::size_t cell = 0;
    std::size_t trial = 0;
    SimConfig config;
};

/// Stable seed for (cell, trial) under a sweep's base seed.
std::uint64_t derive_seed(std::uint64_t base_seed, std::size_t cell, std::size_t trial) noexcept;

/// Cells in nesting order topology > C_r > C_f > epsilon.
std::vector<Cell> cells(const SweepSpec& spec);

/// `spec.base` with the cell's swept parameters filled in (seed untouched).
SimConfig cell_config(const SweepSpec& spec, const Cell& cell);

/// Every (cell, trial) run, cell-major. Throws ConfigError on an empty list
/// or an invalid cell configuration.
std::vector<RunTask> expand(const SweepSpec& spec);

using ProgressCallback = std::function<void(std::size_t done, std::size_t total)>;

/// Runs all tasks on `workers` threads. The result is indexed like `tasks`
/// and does not depend on the worker count.
std::vector<RunRecord> run_tasks(std::span<const RunTask> tasks, std::size_t workers,
                                 const ProgressCallback& progress = {});

struct Interval {
    double mean = 0.0;
    double ci95 = 0.0;       ///< 1.96 * sample sd / sqrt(count)
    bool degenerate = false; ///< fewer than two samples; ci95 is 0
};

/// Normal-approximation 95% interval of the mean. Throws AggregationError
/// on an empty sample.
Interval mean_ci95(std::span<const double> values);

struct TrajectoryRow {
    std::int64_t tick = 0;
    double mean_error = 0.0;
    double ci95 = 0.0;
};

struct CellSummary {
    Cell cell;
    std::size_t agents = 0;
    double mean_error = 0.0;
    double ci95 = 0.0;
    bool degenerate = false;
    double mean_terminal_tick = 0.0;
    double consensus_fraction = 0.0;
    std::vector<double> trial_errors;
    std::vector<TrajectoryRow> trajectory;
};

/// Pointwise mean error over the union of sampled ticks; a run that ended
/// earlier carries its last sampled value forward.
std::vector<TrajectoryRow> mean_trajectory(std::span<const RunRecord> records);

/// Summarises the records of one cell. Throws AggregationError when empty.
CellSummary summarize(const Cell& cell, std::span<const RunRecord> records);

/// Groups `records` (indexed like `tasks`) by cell and summarises each.
std::vector<CellSummary> aggregate(std::span<const Cell> cells, std::span<const RunTask> tasks,
                                   std::span<const RunRecord> records);

void write_sweep_results(std::ostream& out, std::span<const Cell> cells, std::span<const RunTask> tasks,
                         std::span<const RunRecord> records);
void write_cell_summary(std::ostream& out, std::span<const CellSummary> summaries);
void write_trajectories(std::ostream& out, std::span<const CellSummary> summaries);

/// Shortest round-trip decimal form used in every CSV.
std::string format_number(double value);

} // namespace colearn
