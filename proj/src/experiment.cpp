#include "colearn/experiment.hpp"

#include "colearn/errors.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <mutex>
#include <ostream>
#include <thread>

namespace colearn {

namespace {

std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

std::string cell_prefix(const Topology& topology, std::size_t agents, double comm_radius, double comm_frequency,
                        double epsilon) {
    return topology.name() + "," + std::to_string(topology.degree(agents)) + "," + format_number(comm_radius) +
           "," + format_number(comm_frequency) + "," + format_number(epsilon);
}

} // namespace

void SweepSpec::validate() const {
    if (topologies.empty()) throw ConfigError("topology", "sweep list is empty");
    if (comm_radii.empty()) throw ConfigError("C_r", "sweep list is empty");
    if (comm_frequencies.empty()) throw ConfigError("C_f", "sweep list is empty");
    if (epsilons.empty()) throw ConfigError("epsilon", "sweep list is empty");
    if (repeats < 1) throw ConfigError("repeats", "must be >= 1");
}

std::uint64_t derive_seed(std::uint64_t base_seed, std::size_t cell, std::size_t trial) noexcept {
    std::uint64_t h = splitmix64(base_seed);
    h = splitmix64(h ^ static_cast<std::uint64_t>(cell));
    return splitmix64(h ^ static_cast<std::uint64_t>(trial));
}

std::vector<Cell> cells(const SweepSpec& spec) {
    spec.validate();
    std::vector<Cell> out;
    for (const Topology& topology : spec.topologies)
        for (double radius : spec.comm_radii)
            for (double frequency : spec.comm_frequencies)
                for (double epsilon : spec.epsilons)
                    out.push_back({out.size(), topology, radius, frequency, epsilon});
    return out;
}

SimConfig cell_config(const SweepSpec& spec, const Cell& cell) {
    SimConfig config = spec.base;
    config.topology = cell.topology;
    config.comm_radius = cell.comm_radius;
    config.comm_frequency = cell.comm_frequency;
    config.epsilon = cell.epsilon;
    return config;
}

std::vector<RunTask> expand(const SweepSpec& spec) {
    const auto grid = cells(spec);
    std::vector<RunTask> tasks;
    tasks.reserve(grid.size() * spec.repeats);
    for (const Cell& cell : grid) {
        SimConfig config = cell_config(spec, cell);
        config.validate();
        for (std::size_t trial = 0; trial < spec.repeats; ++trial) {
            config.seed = derive_seed(spec.base_seed, cell.index, trial);
            tasks.push_back({cell.index, trial, config});
        }
    }
    return tasks;
}

std::vector<RunRecord> run_tasks(std::span<const RunTask> tasks, std::size_t workers,
                                 const ProgressCallback& progress) {
    std::vector<RunRecord> records(tasks.size());
    workers = std::clamp<std::size_t>(workers, 1, std::max<std::size_t>(tasks.size(), 1));

    std::atomic<std::size_t> next{0};
    std::atomic<std::size_t> done{0};
    std::mutex report_mutex;
    std::exception_ptr failure;

    auto worker = [&] {
        for (std::size_t i = next++; i < tasks.size(); i = next++) {
            try {
                records[i] = run(tasks[i].config);
            } catch (...) {
                std::lock_guard lock(report_mutex);
                if (!failure) failure = std::current_exception();
                next = tasks.size();
                return;
            }
            const std::size_t finished = ++done;
            if (progress) {
                std::lock_guard lock(report_mutex);
                progress(finished, tasks.size());
            }
        }
    };

    if (workers == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    }
    if (failure) std::rethrow_exception(failure);
    return records;
}

Interval mean_ci95(std::span<const double> values) {
    if (values.empty()) throw AggregationError("mean_ci95: no samples");
    Interval out;
    double sum = 0.0;
    for (double v : values) sum += v;
    const double count = static_cast<double>(values.size());
    out.mean = sum / count;
    if (values.size() < 2) {
        out.degenerate = true;
        return out;
    }
    double squares = 0.0;
    for (double v : values) squares += (v - out.mean) * (v - out.mean);
    const double sd = std::sqrt(squares / (count - 1.0));
    out.ci95 = 1.96 * sd / std::sqrt(count);
    return out;
}

std::vector<TrajectoryRow> mean_trajectory(std::span<const RunRecord> records) {
    std::vector<std::int64_t> ticks;
    for (const RunRecord& r : records)
        for (const TrajectoryPoint& p : r.trajectory) ticks.push_back(p.tick);
    std::sort(ticks.begin(), ticks.end());
    ticks.erase(std::unique(ticks.begin(), ticks.end()), ticks.end());

    std::vector<std::size_t> cursor(records.size(), 0);
    std::vector<double> values(records.size());
    std::vector<TrajectoryRow> rows;
    rows.reserve(ticks.size());
    for (std::int64_t t : ticks) {
        for (std::size_t i = 0; i < records.size(); ++i) {
            const auto& trajectory = records[i].trajectory;
            while (cursor[i] + 1 < trajectory.size() && trajectory[cursor[i] + 1].tick <= t) ++cursor[i];
            values[i] = trajectory[cursor[i]].average_error;
        }
        const Interval interval = mean_ci95(values);
        rows.push_back({t, interval.mean, interval.ci95});
    }
    return rows;
}

CellSummary summarize(const Cell& cell, std::span<const RunRecord> records) {
    if (records.empty()) {
        throw AggregationError("cell " + std::to_string(cell.index) + " has no run records");
    }
    CellSummary summary;
    summary.cell = cell;
    summary.agents = records.front().config.agents;

    double ticks = 0.0;
    std::size_t converged = 0;
    for (const RunRecord& r : records) {
        summary.trial_errors.push_back(r.steady_state_error);
        ticks += static_cast<double>(r.terminal_tick);
        converged += r.converged ? 1 : 0;
    }
    const Interval interval = mean_ci95(summary.trial_errors);
    summary.mean_error = interval.mean;
    summary.ci95 = interval.ci95;
    summary.degenerate = interval.degenerate;
    summary.mean_terminal_tick = ticks / static_cast<double>(records.size());
    summary.consensus_fraction = static_cast<double>(converged) / static_cast<double>(records.size());
    summary.trajectory = mean_trajectory(records);
    return summary;
}

std::vector<CellSummary> aggregate(std::span<const Cell> cells, std::span<const RunTask> tasks,
                                   std::span<const RunRecord> records) {
    if (tasks.size() != records.size()) {
        throw AggregationError("aggregate: " + std::to_string(tasks.size()) + " tasks but " +
                               std::to_string(records.size()) + " records");
    }
    std::vector<std::vector<RunRecord>> grouped(cells.size());
    for (std::size_t i = 0; i < tasks.size(); ++i) {
        if (tasks[i].cell >= cells.size()) throw AggregationError("aggregate: task refers to unknown cell");
        grouped[tasks[i].cell].push_back(records[i]);
    }
    std::vector<CellSummary> out;
    out.reserve(cells.size());
    for (std::size_t c = 0; c < cells.size(); ++c) out.push_back(summarize(cells[c], grouped[c]));
    return out;
}

std::string format_number(double value) {
    char buffer[64];
    auto [end, ec] = std::to_chars(buffer, buffer + sizeof buffer, value);
    return ec == std::errc() ? std::string(buffer, end) : std::to_string(value);
}

void write_sweep_results(std::ostream& out, std::span<const Cell> cells, std::span<const RunTask> tasks,
                         std::span<const RunRecord> records) {
    out << "topology,k,C_r,C_f,epsilon,trial,seed,steady_state_error,terminal_tick,converged\n";
    for (std::size_t i = 0; i < tasks.size() && i < records.size(); ++i) {
        const Cell& cell = cells[tasks[i].cell];
        const RunRecord& r = records[i];
        out << cell_prefix(cell.topology, tasks[i].config.agents, cell.comm_radius, cell.comm_frequency,
                           cell.epsilon)
            << ',' << tasks[i].trial << ',' << tasks[i].config.seed << ',' << format_number(r.steady_state_error)
            << ',' << r.terminal_tick << ',' << (r.converged ? "true" : "false") << '\n';
    }
}

void write_cell_summary(std::ostream& out, std::span<const CellSummary> summaries) {
    out << "topology,k,C_r,C_f,epsilon,mean_error,ci95,mean_terminal_tick,consensus_fraction\n";
    for (const CellSummary& s : summaries) {
        out << cell_prefix(s.cell.topology, s.agents, s.cell.comm_radius, s.cell.comm_frequency, s.cell.epsilon)
            << ',' << format_number(s.mean_error) << ',' << format_number(s.ci95) << ','
            << format_number(s.mean_terminal_tick) << ',' << format_number(s.consensus_fraction) << '\n';
    }
}

void write_trajectories(std::ostream& out, std::span<const CellSummary> summaries) {
    out << "topology,k,C_r,C_f,epsilon,tick,mean_error,ci95\n";
    for (const CellSummary& s : summaries) {
        const std::string prefix =
            cell_prefix(s.cell.topology, s.agents, s.cell.comm_radius, s.cell.comm_frequency, s.cell.epsilon);
        for (const TrajectoryRow& row : s.trajectory) {
            out << prefix << ',' << row.tick << ',' << format_number(row.mean_error) << ','
                << format_number(row.ci95) << '\n';
        }
    }
}

} // namespace colearn
