#include "commands.hpp"

#include "oracle.hpp"

#include "bitroute/errors.hpp"
#include "bitroute/metrics_io.hpp"
#include "bitroute/scenario_io.hpp"
#include "bitroute/simulator.hpp"

#include "CLI11.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <vector>

namespace bitroute::cli
{

namespace
{

namespace fs = std::filesystem;

void
print_diagnostics(std::ostream& err, const std::string& path, const ScenarioError& e)
{
    for (const auto& d : e.diagnostics())
    {
        err << path << ":";
        if (d.line != 0)
        {
            err << d.line << ":";
        }
        err << " error: " << d.message << "\n";
    }
}

Scenario
load(const RunOptions& options, std::ostream& err)
{
    auto parsed = load_scenario(options.scenario_path, {options.strict});
    for (const auto& w : parsed.warnings)
    {
        err << options.scenario_path << ":" << w.line << ": warning: " << w.message << "\n";
    }
    if (options.backend)
    {
        parsed.scenario.backend = *options.backend;
    }
    if (options.seed)
    {
        parsed.scenario.seed = *options.seed;
    }
    return std::move(parsed.scenario);
}

/// Writes every file to a temporary name first and renames once all
/// contents are on disk.
void
write_files(const fs::path& dir, const std::map<std::string, std::string>& files)
{
    fs::create_directories(dir);
    std::vector<std::pair<fs::path, fs::path>> staged;
    for (const auto& [name, contents] : files)
    {
        const auto final_path = dir / name;
        auto temp_path = final_path;
        temp_path += ".tmp";
        std::ofstream f(temp_path, std::ios::binary | std::ios::trunc);
        f << contents;
        f.close();
        if (!f)
        {
            for (const auto& [tmp, _] : staged)
            {
                fs::remove(tmp);
            }
            fs::remove(temp_path);
            throw Error("cannot write " + final_path.string());
        }
        staged.emplace_back(temp_path, final_path);
    }
    for (const auto& [tmp, final_path] : staged)
    {
        fs::rename(tmp, final_path);
    }
}

template <typename Fn>
int
guarded(const std::string& path, std::ostream& err, Fn&& fn)
{
    try
    {
        return fn();
    }
    catch (const ScenarioError& e)
    {
        print_diagnostics(err, path, e);
    }
    catch (const Error& e)
    {
        err << path << ": error: " << e.what() << "\n";
    }
    catch (const fs::filesystem_error& e)
    {
        err << "error: " << e.what() << "\n";
    }
    return kExitInvalid;
}

} // namespace

int
cmd_run(const RunOptions& options, std::ostream& out, std::ostream& err)
{
    return guarded(options.scenario_path, err, [&] {
        const auto scenario = load(options, err);
        const auto run = run_scenario(scenario);
        const auto summary =
            std::string(summary_csv_header()) + "\n" + summary_csv_row(run.metrics) + "\n";
        if (!options.out_dir)
        {
            out << summary;
            return kExitOk;
        }
        write_files(*options.out_dir, {{"summary.csv", summary},
                                       {"events.jsonl", event_log_jsonl(run)},
                                       {"metrics.json", metrics_json(run.metrics)}});
        out << "wrote " << *options.out_dir << "\n";
        return kExitOk;
    });
}

int
cmd_compare(const RunOptions& options, std::ostream& out, std::ostream& err)
{
    return guarded(options.scenario_path, err, [&] {
        const auto scenario = load(options, err);
        const auto both = compare_backends(scenario);
        const auto summary = std::string(summary_csv_header()) + "\n" +
                             summary_csv_row(both.link_state.metrics) + "\n" +
                             summary_csv_row(both.flood.metrics) + "\n";
        if (!options.out_dir)
        {
            out << summary;
            return kExitOk;
        }
        write_files(*options.out_dir,
                    {{"summary.csv", summary},
                     {"events_link_state.jsonl", event_log_jsonl(both.link_state)},
                     {"events_flood.jsonl", event_log_jsonl(both.flood)},
                     {"metrics_link_state.json", metrics_json(both.link_state.metrics)},
                     {"metrics_flood.json", metrics_json(both.flood.metrics)}});
        out << "wrote " << *options.out_dir << "\n";
        return kExitOk;
    });
}

int
cmd_generate(const GenerateOptions& options, std::ostream& out, std::ostream& err)
{
    return guarded(options.out_path.value_or("<generate>"), err, [&] {
        const auto text = print_scenario(generate_random_scenario(options.params));
        if (!options.out_path)
        {
            out << text;
            return kExitOk;
        }
        const fs::path path(*options.out_path);
        if (path.has_parent_path())
        {
            fs::create_directories(path.parent_path());
        }
        write_files(path.has_parent_path() ? path.parent_path() : fs::path("."),
                    {{path.filename().string(), text}});
        return kExitOk;
    });
}

int
cmd_oracle_check(const RunOptions& options,
                 std::ostream& out,
                 std::ostream& err,
                 const NetworkHook& tamper)
{
    return guarded(options.scenario_path, err, [&] {
        const auto scenario = load(options, err);
        Simulator sim(scenario);
        for (const auto& e : sim.events())
        {
            if (is_churn(e))
            {
                err << options.scenario_path
                    << ": error: oracle-check needs a static graph, but the scenario has "
                       "remove/add events\n";
                return kExitInvalid;
            }
        }
        if (tamper)
        {
            tamper(sim.network());
        }
        const auto run = sim.run();
        const auto report = check_against_oracle(sim.initial_graph(), run);

        out << "backend: " << to_string(sim.network().backend()) << "\n";
        out << "oracle: " << (report.weighted ? "bellman-ford path weight" : "bfs hop count")
            << "\n";
        out << "delivered transfers checked: " << report.checked << "\n";
        out << "mismatches: " << report.mismatches.size() << "\n";
        for (const auto& m : report.mismatches)
        {
            out << "  step " << m.step << " " << m.source << "->" << m.destination
                << ": observed " << m.observed << ", optimal " << m.expected << "\n";
        }
        return report.mismatches.empty() ? kExitOk : kExitMismatch;
    });
}

int
run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Training-based route caching simulator"};
    app.require_subcommand(1);

    const auto backend_names = CLI::IsMember({"link_state", "flood"});

    RunOptions run_opts;
    std::string backend_name;
    auto add_run_flags = [&](CLI::App* cmd, bool with_out) {
        cmd->add_option("scenario", run_opts.scenario_path, "Scenario file")->required();
        cmd->add_option("--backend", backend_name, "Override the discovery backend")
            ->check(backend_names);
        cmd->add_option("--seed", run_opts.seed, "Override the run seed");
        cmd->add_flag("--strict", run_opts.strict, "Reject unknown keys");
        if (with_out)
        {
            cmd->add_option("--out", run_opts.out_dir, "Output directory");
        }
    };

    auto* run = app.add_subcommand("run", "Run a scenario and report metrics");
    add_run_flags(run, true);
    auto* compare = app.add_subcommand("compare", "Run a scenario under both backends");
    add_run_flags(compare, true);
    auto* oracle =
        app.add_subcommand("oracle-check", "Check deliveries against a shortest-path oracle");
    add_run_flags(oracle, false);

    GenerateOptions gen;
    auto* generate = app.add_subcommand("generate", "Write a random scenario file");
    generate->add_option("--nodes,-n", gen.params.node_count, "Node count")
        ->check(CLI::Range(std::size_t{2}, std::size_t{100000}));
    generate->add_option("--edge-prob,-p", gen.params.edge_prob, "Edge probability")
        ->check(CLI::Range(0.0, 1.0));
    generate->add_option("--transfers,-t", gen.params.transfers, "Transfer events");
    generate->add_option("--churn,-c", gen.params.churn, "Departure/arrival events");
    generate->add_option("--pairs", gen.params.pairs, "Distinct (s,d) pairs; 0 = unrestricted");
    generate->add_flag("--partition", gen.params.allow_partition,
                       "Allow departures that split the network");
    generate->add_option("--seed", gen.params.seed, "Random seed");
    generate->add_option("--backend", backend_name, "Backend recorded in the file")
        ->check(backend_names);
    generate->add_option("--name", gen.params.name, "Scenario name");
    generate->add_option("--out", gen.out_path, "Output file (default: stdout)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e)
    {
        const auto code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInvalid;
    }

    if (!backend_name.empty())
    {
        run_opts.backend = parse_backend(backend_name);
        gen.params.backend = *run_opts.backend;
    }

    if (run->parsed())
    {
        return cmd_run(run_opts, out, err);
    }
    if (compare->parsed())
    {
        return cmd_compare(run_opts, out, err);
    }
    if (oracle->parsed())
    {
        return cmd_oracle_check(run_opts, out, err);
    }
    return cmd_generate(gen, out, err);
}

} // namespace bitroute::cli
