#include "commands.hpp"

#include "bitroute/scenario_io.hpp"
#include "bitroute/training.hpp"

#include <gmock/gmock.h>
#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

namespace bitroute::cli
{
namespace
{

using ::testing::HasSubstr;
namespace fs = std::filesystem;

std::string
scenario(const std::string& name)
{
    return std::string(BITROUTE_SCENARIO_DIR) + "/" + name;
}

struct Captured
{
    int code = 0;
    std::string out;
    std::string err;
};

Captured
invoke(std::vector<std::string> args)
{
    args.insert(args.begin(), "bitroute");
    std::vector<const char*> argv;
    for (const auto& a : args)
    {
        argv.push_back(a.c_str());
    }
    std::ostringstream out;
    std::ostringstream err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
}

fs::path
scratch_dir(const std::string& name)
{
    const auto dir = fs::temp_directory_path() / ("bitroute_cli_" + name);
    fs::remove_all(dir);
    return dir;
}

TEST(Cli, RunPrintsSummary)
{
    const auto r = invoke({"run", scenario("desk.scn")});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_THAT(r.out, HasSubstr("scenario,backend,transfers"));
    EXPECT_THAT(r.out, HasSubstr("desk,link_state,3,3,2,1,0,5,25"));
}

TEST(Cli, BackendOverride)
{
    const auto r = invoke({"run", scenario("desk.scn"), "--backend", "flood"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_THAT(r.out, HasSubstr("desk,flood,3,3,2,1,8,5,25"));
    EXPECT_EQ(invoke({"run", scenario("desk.scn"), "--backend", "dsr"}).code, kExitInvalid);
}

TEST(Cli, RunWritesOutputDirectory)
{
    const auto dir = scratch_dir("run");
    const auto r = invoke({"run", scenario("desk_churn.scn"), "--out", dir.string()});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(fs::exists(dir / "summary.csv"));
    EXPECT_TRUE(fs::exists(dir / "events.jsonl"));
    EXPECT_TRUE(fs::exists(dir / "metrics.json"));
    EXPECT_FALSE(fs::exists(dir / "summary.csv.tmp"));
    fs::remove_all(dir);
}

TEST(Cli, CompareWritesBothBackends)
{
    const auto dir = scratch_dir("compare");
    const auto r = invoke({"compare", scenario("desk.scn"), "--out", dir.string()});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_TRUE(fs::exists(dir / "metrics_link_state.json"));
    EXPECT_TRUE(fs::exists(dir / "metrics_flood.json"));
    std::ifstream summary(dir / "summary.csv");
    std::string header, ls, fl;
    std::getline(summary, header);
    std::getline(summary, ls);
    std::getline(summary, fl);
    EXPECT_EQ(ls, "desk,link_state,3,3,2,1,0,5,25");
    EXPECT_EQ(fl, "desk,flood,3,3,2,1,8,5,25");
    fs::remove_all(dir);
}

TEST(Cli, OracleCheckPassesOnStaticScenario)
{
    const auto r = invoke({"oracle-check", scenario("random_workload.scn")});
    EXPECT_EQ(r.code, kExitOk) << r.err;
    EXPECT_THAT(r.out, HasSubstr("mismatches: 0"));
    EXPECT_THAT(r.out, HasSubstr("delivered transfers checked: 1000"));
}

TEST(Cli, OracleCheckRefusesChurn)
{
    const auto r = invoke({"oracle-check", scenario("desk_churn.scn")});
    EXPECT_EQ(r.code, kExitInvalid);
    EXPECT_THAT(r.err, HasSubstr("static graph"));
}

TEST(Cli, OracleCheckFlagsTamperedTable)
{
    RunOptions opts;
    opts.scenario_path = scenario("desk.scn");
    std::ostringstream out;
    std::ostringstream err;
    const auto code = cmd_oracle_check(opts, out, err, [](Network& net) {
        net.table(1).inject_mask(2, encode_edge(1));
    });
    EXPECT_EQ(code, kExitMismatch);
    EXPECT_THAT(out.str(), HasSubstr("mismatches: 1"));
    EXPECT_THAT(out.str(), HasSubstr("observed 4, optimal 2"));
}

TEST(Cli, GenerateIsReproducibleAndParses)
{
    const std::vector<std::string> args{"generate", "-n", "12", "-p", "0.3", "-t", "40",
                                        "-c", "4", "--seed", "9"};
    const auto a = invoke(args);
    const auto b = invoke(args);
    ASSERT_EQ(a.code, kExitOk) << a.err;
    EXPECT_EQ(a.out, b.out);
    const auto parsed = parse_scenario(a.out);
    EXPECT_EQ(parsed.scenario.events.size(), 44U);

    const auto dir = scratch_dir("generate");
    const auto file = dir / "gen.scn";
    auto with_out = args;
    with_out.push_back("--out");
    with_out.push_back(file.string());
    EXPECT_EQ(invoke(with_out).code, kExitOk);
    const auto run = invoke({"run", file.string()});
    EXPECT_EQ(run.code, kExitOk) << run.err;
    fs::remove_all(dir);
}

TEST(Cli, InvalidInputsExitTwo)
{
    EXPECT_EQ(invoke({}).code, kExitInvalid);
    EXPECT_EQ(invoke({"run", "/nonexistent.scn"}).code, kExitInvalid);
    EXPECT_EQ(invoke({"generate", "-n", "1"}).code, kExitInvalid);

    const auto dir = scratch_dir("bad");
    fs::create_directories(dir);
    const auto file = dir / "bad.scn";
    std::ofstream(file) << "[graph]\nnodes = 3\nedges = 1-2 1-2\n";
    const auto r = invoke({"run", file.string()});
    EXPECT_EQ(r.code, kExitInvalid);
    EXPECT_THAT(r.err, HasSubstr("bad.scn:3:"));
    fs::remove_all(dir);
}

TEST(Cli, HelpExitsZero)
{
    const auto r = invoke({"--help"});
    EXPECT_EQ(r.code, kExitOk);
    EXPECT_THAT(r.out, HasSubstr("oracle-check"));
}

} // namespace
} // namespace bitroute::cli
