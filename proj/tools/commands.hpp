#pragma once

#include "bitroute/discovery.hpp"
#include "bitroute/scenario.hpp"
#include "bitroute/training.hpp"

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>

namespace bitroute::cli
{

enum ExitCode : int
{
    kExitOk = 0,
    kExitMismatch = 1, ///< oracle-check found a longer-than-optimal delivery
    kExitInvalid = 2   ///< usage, parse, validation or I/O failure
};

struct RunOptions
{
    std::string scenario_path;
    std::optional<std::string> out_dir;
    std::optional<Backend> backend;
    std::optional<std::uint64_t> seed;
    bool strict = false;
};

struct GenerateOptions
{
    GeneratorParams params;
    std::optional<std::string> out_path;
};

/// Hook run against the network after setup and before the first event.
using NetworkHook = std::function<void(Network&)>;

/// Runs one scenario. Without out_dir the summary CSV goes to out; with it,
/// summary.csv, events.jsonl and metrics.json are written there, and only
/// after the run has completed.
int cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err);

/// Runs the scenario under both backends and writes a two-row summary.
int cmd_compare(const RunOptions& options, std::ostream& out, std::ostream& err);

/// Writes a generated scenario file (to out when no path is given).
int cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err);

/// Runs a churn-free scenario and checks every delivery against an
/// independent shortest-path oracle.
int cmd_oracle_check(const RunOptions& options,
                     std::ostream& out,
                     std::ostream& err,
                     const NetworkHook& tamper = {});

/// Parses argv and dispatches to a command.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

} // namespace bitroute::cli
