#include "colearn/cli.hpp"

#include "colearn/config.hpp"
#include "colearn/errors.hpp"

#include "CLI11.hpp"

#include <algorithm>
#include <cerrno>
#include <cstring>
#include <fstream>
#include <ostream>
#include <system_error>
#include <thread>

namespace colearn::cli {

namespace {

class IoError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void add_common_options(CLI::App& sub, CliInvocation& inv, std::string& config_path, bool with_output) {
    sub.add_option("-c,--config", config_path, "JSON configuration file");
    if (with_output) sub.add_option("-o,--out", inv.out_dir, "output directory (created if absent)");
    sub.add_option("--set", inv.overrides, "override a config key, K=V (repeatable)")->take_all();
    sub.add_option("-w,--workers", inv.workers, "worker threads for sweeps")->check(CLI::PositiveNumber);
    sub.add_option("--seed", inv.seed, "seed (run/trace) or base seed (sweep)");
}

std::ofstream open_output(const std::filesystem::path& path) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError(path.string() + ": " + std::strerror(errno));
    return out;
}

void finish(std::ofstream& stream, const std::filesystem::path& path) {
    stream.flush();
    if (!stream) throw IoError(path.string() + ": write failed");
}

void prepare_out_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec) throw IoError(dir.string() + ": " + ec.message());
}

void write_record(const std::filesystem::path& path, const RunRecord& record) {
    auto stream = open_output(path);
    stream << to_json(record).dump(2) << '\n';
    finish(stream, path);
}

std::string run_summary(const RunRecord& r) {
    return "topology=" + r.config.topology.to_string() + " C_r=" + format_number(r.config.comm_radius) +
           " C_f=" + format_number(r.config.comm_frequency) + " epsilon=" + format_number(r.config.epsilon) +
           " seed=" + std::to_string(r.config.seed) + " terminal_tick=" + std::to_string(r.terminal_tick) +
           " converged=" + (r.converged ? "true" : "false") +
           " steady_state_error=" + format_number(r.steady_state_error);
}

int execute_run(const CliInvocation& inv, std::ostream& out, bool every_tick) {
    prepare_out_dir(inv.out_dir);
    const auto trace_path = inv.out_dir / "trace.log";
    auto trace = open_output(trace_path);
    trace << "tick id x y mode certainty belief\n";

    if (every_tick) {
        const SimState initial = initialize(inv.sim);
        const auto grid_path = inv.out_dir / "grid.txt";
        auto grid = open_output(grid_path);
        initial.grid->dump(grid);
        finish(grid, grid_path);

        const auto edges_path = inv.out_dir / "interaction.edges";
        auto edges = open_output(edges_path);
        initial.network.write_edge_list(edges);
        finish(edges, edges_path);
    }

    const std::int64_t every = every_tick ? 1 : inv.sim.sample_every;
    const RunRecord record = run(inv.sim, [&](const SimState& state) {
        if (state.tick % every != 0) return;
        for (const AgentState& agent : state.agents) trace << trace_line(state.tick, agent) << '\n';
    });
    finish(trace, trace_path);
    write_record(inv.out_dir / "run_record.json", record);

    out << run_summary(record) << '\n';
    return kExitOk;
}

int execute_sweep(const CliInvocation& inv, std::ostream& out) {
    prepare_out_dir(inv.out_dir);
    const auto grid = cells(inv.sweep);
    const auto tasks = expand(inv.sweep);
    const auto records = run_tasks(tasks, inv.workers);
    const auto summaries = aggregate(grid, tasks, records);

    const auto results_path = inv.out_dir / "sweep_results.csv";
    auto results = open_output(results_path);
    write_sweep_results(results, grid, tasks, records);
    finish(results, results_path);

    const auto summary_path = inv.out_dir / "cell_summary.csv";
    auto summary = open_output(summary_path);
    write_cell_summary(summary, summaries);
    finish(summary, summary_path);

    const auto trajectory_path = inv.out_dir / "trajectories.csv";
    auto trajectories = open_output(trajectory_path);
    write_trajectories(trajectories, summaries);
    finish(trajectories, trajectory_path);

    for (const CellSummary& s : summaries) {
        out << s.cell.topology.name() << " k=" << s.cell.topology.degree(s.agents)
            << " C_r=" << format_number(s.cell.comm_radius) << " C_f=" << format_number(s.cell.comm_frequency)
            << " epsilon=" << format_number(s.cell.epsilon) << " mean_error=" << format_number(s.mean_error)
            << " ci95=" << format_number(s.ci95) << " mean_terminal_tick=" << format_number(s.mean_terminal_tick)
            << " consensus_fraction=" << format_number(s.consensus_fraction)
            << (s.degenerate ? " (single trial)" : "") << '\n';
    }
    return kExitOk;
}

} // namespace

CliInvocation parse_and_validate(const std::vector<std::string>& args) {
    CliInvocation inv;
    inv.workers = std::max(1u, std::thread::hardware_concurrency());
    std::string config_path;

    CLI::App app{"Collective learning simulator over physical and interaction networks"};
    app.require_subcommand(1);
    auto* run_cmd = app.add_subcommand("run", "single run: run_record.json + sampled trace.log");
    auto* sweep_cmd = app.add_subcommand("sweep", "parameter sweep: sweep_results / cell_summary / trajectories CSVs");
    auto* validate_cmd = app.add_subcommand("validate", "check a configuration without running it");
    auto* trace_cmd = app.add_subcommand("trace", "single run with a per-tick trace, grid and edge dumps");
    add_common_options(*run_cmd, inv, config_path, true);
    add_common_options(*sweep_cmd, inv, config_path, true);
    add_common_options(*validate_cmd, inv, config_path, false);
    add_common_options(*trace_cmd, inv, config_path, true);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    if (!reversed.empty()) reversed.pop_back(); // program name
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        for (auto* sub : {run_cmd, sweep_cmd, validate_cmd, trace_cmd}) {
            if (sub->parsed()) throw UsageError(sub->help(), kExitOk);
        }
        throw UsageError(app.help(), kExitOk);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what() + std::string("\nRun with --help for usage."), kExitUsage);
    }

    if (run_cmd->parsed()) inv.command = Command::Run;
    else if (sweep_cmd->parsed()) inv.command = Command::Sweep;
    else if (validate_cmd->parsed()) inv.command = Command::Validate;
    else inv.command = Command::Trace;

    try {
        if (!config_path.empty()) {
            inv.config_path = config_path;
            inv.document = load_config_document(config_path);
        } else {
            inv.document = nlohmann::json::object();
        }
        for (const std::string& assignment : inv.overrides) apply_override(inv.document, assignment);
        const bool single = inv.command == Command::Run || inv.command == Command::Trace;
        if (inv.seed) inv.document[single ? "seed" : "base_seed"] = *inv.seed;

        if (single) inv.sim = sim_config_from(inv.document);
        else inv.sweep = sweep_spec_from(inv.document);
    } catch (const ConfigError& e) {
        throw UsageError(std::string("invalid configuration: ") + e.what(), kExitUsage);
    }
    return inv;
}

int execute(const CliInvocation& inv, std::ostream& out, std::ostream& err) {
    try {
        switch (inv.command) {
        case Command::Validate: {
            const auto n_cells = cells(inv.sweep).size();
            out << "config ok: " << n_cells << " cells x " << inv.sweep.repeats
                << " repeats = " << n_cells * inv.sweep.repeats << " runs\n";
            return kExitOk;
        }
        case Command::Run: return execute_run(inv, out, false);
        case Command::Trace: return execute_run(inv, out, true);
        case Command::Sweep: return execute_sweep(inv, out);
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const ConfigError& e) {
        err << "invalid configuration: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CliInvocation inv;
    try {
        inv = parse_and_validate(args);
    } catch (const UsageError& e) {
        (e.exit_code() == kExitOk ? out : err) << e.what() << '\n';
        return e.exit_code();
    }
    return execute(inv, out, err);
}

} // namespace colearn::cli
