#pragma once

#include "colearn/engine.hpp"
#include "colearn/experiment.hpp"

#include "json.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace colearn::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitIo = 1;
inline constexpr int kExitUsage = 2;

enum class Command { Run, Sweep, Validate, Trace };

struct CliInvocation {
    Command command = Command::Run;
    std::optional<std::filesystem::path> config_path;
    std::filesystem::path out_dir = "out";
    std::vector<std::string> overrides;
    std::size_t workers = 1;
    std::optional<std::uint64_t> seed;

    nlohmann::json document; ///< config after overrides
    SimConfig sim;           ///< run / trace
    SweepSpec sweep;         ///< sweep / validate
};

/// Bad arguments or configuration. `exit_code()` is 0 for --help.
class UsageError : public std::runtime_error {
public:
    UsageError(const std::string& message, int exit_code)
        : std::runtime_error(message), exit_code_(exit_code) {}
    int exit_code() const noexcept { return exit_code_; }

private:
    int exit_code_;
};

/// Parses argv (including the program name) and validates the resulting
/// configuration. Throws UsageError.
CliInvocation parse_and_validate(const std::vector<std::string>& args);

/// Runs a validated invocation. Returns an exit status; I/O failures
/// produce kExitIo with the path and cause on `err`.
int execute(const CliInvocation& invocation, std::ostream& out, std::ostream& err);

/// parse_and_validate + execute with diagnostics mapped to exit codes.
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace colearn::cli
