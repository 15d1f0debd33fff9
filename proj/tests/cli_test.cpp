#include "qclique/cli.hpp"
#include "qclique/circuit.hpp"
#include "qclique/report.hpp"

#include "gtest/gtest.h"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace qclique;

namespace {

struct CliRun {
    int code = 0;
    std::string out;
    std::string err;
};

CliRun run_cli(std::vector<std::string> args, const std::string& stdin_text = "")
{
    std::istringstream in(stdin_text);
    std::ostringstream out;
    std::ostringstream err;
    CliRun r;
    r.code = cli::run(args, in, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string data(const std::string& name) { return std::string(QCLIQUE_TEST_DATA) + "/" + name; }

} // namespace

TEST(Cli, AllEnginesOnFigureGraph)
{
    const CliRun r = run_cli({"--engine", "all", data("fig4-1.col")});
    EXPECT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_NE(r.out.find("clique size: 2"), std::string::npos);
    EXPECT_NE(r.out.find("witness: 1 2\n"), std::string::npos);
    EXPECT_NE(r.out.find("cross-check: all engines agree"), std::string::npos);
}

TEST(Cli, QuantumJsonOnCompleteGraph)
{
    const CliRun r = run_cli({"--engine", "quantum", "--mode", "oracle-count", "--json", data("k4.col")});
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j.at("clique_size"), 4);
    const auto counts = circuit::expected_oracle_counts(4, 0);
    EXPECT_EQ(j.at("resources").at("not"), counts.not_count);
    EXPECT_EQ(j.at("resources").at("cnot"), counts.cnot_count);
    EXPECT_EQ(j.at("resources").at("ccnot"), counts.ccnot_count);
    EXPECT_EQ(j.at("resources").at("qubits"), circuit::expected_wire_count(4, 0));
}

TEST(Cli, BruteOnEdgeless)
{
    const CliRun r = run_cli({"--engine", "brute", data("empty3.col")});
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.out.find("clique size: 1"), std::string::npos);
}

TEST(Cli, ReadsStdin)
{
    const CliRun r = run_cli({"--engine", "molecular", "--json", "-"}, "p edge 2 1\ne 1 2\n");
    ASSERT_EQ(r.code, cli::kOk) << r.err;
    EXPECT_EQ(nlohmann::json::parse(r.out).at("witness"), (std::vector<int>{1, 2}));
}

TEST(Cli, JsonRoundTrip)
{
    const CliRun r = run_cli({"--engine", "quantum", "--json", data("fig4-1.col")});
    ASSERT_EQ(r.code, cli::kOk);
    const auto j = nlohmann::json::parse(r.out);
    const SolveReport rep = report_from_json(j);
    EXPECT_EQ(rep.clique_size, 2);
    EXPECT_EQ(rep.resources.qubits, 23U);
    EXPECT_EQ(rep.seed, 20240607U);
    EXPECT_EQ(to_json(rep).dump(2) + "\n", r.out);
}

TEST(Cli, AllEnginesJson)
{
    const CliRun r = run_cli({"--json", data("fig4-1.col")});
    ASSERT_EQ(r.code, cli::kOk);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_TRUE(j.at("agree").get<bool>());
    EXPECT_EQ(j.at("reports").size(), 3U);
}

TEST(Cli, IdenticalRunsIdenticalBytes)
{
    const std::vector<std::string> args{"--engine", "quantum", "--seed", "11", "--json", data("k4.col")};
    EXPECT_EQ(run_cli(args).out, run_cli(args).out);
    const std::vector<std::string> all{"--seed", "5", "--mode", "paper-cap", "--json", data("empty3.col")};
    EXPECT_EQ(run_cli(all).out, run_cli(all).out);
}

TEST(Cli, ExitCodes)
{
    EXPECT_EQ(run_cli({"--engine", "nope", data("fig4-1.col")}).code, cli::kUsageError);
    EXPECT_EQ(run_cli({"--retries", "-1", data("fig4-1.col")}).code, cli::kUsageError);
    EXPECT_EQ(run_cli({"--shots", "0", data("fig4-1.col")}).code, cli::kUsageError);
    EXPECT_EQ(run_cli({"--bogus"}).code, cli::kUsageError);
    EXPECT_EQ(run_cli({data("missing.col")}).code, cli::kInputError);
    EXPECT_EQ(run_cli({"-"}, "p edge 2 1\ne 1 5\n").code, cli::kInputError);
    EXPECT_EQ(run_cli({"--engine", "brute", "-"}, "p edge 30 0\n").code, cli::kInputError);

    const CliRun help = run_cli({"--help"});
    EXPECT_EQ(help.code, cli::kOk);
    EXPECT_NE(help.out.find("--engine"), std::string::npos);
}

TEST(Cli, WarningOnHeaderMismatch)
{
    const CliRun r = run_cli({"--engine", "brute", "-"}, "p edge 2 3\ne 1 2\n");
    EXPECT_EQ(r.code, cli::kOk);
    EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(Cli, DumpFiles)
{
    const auto dir = std::filesystem::temp_directory_path() / "qclique_cli_test";
    std::filesystem::create_directories(dir);
    const auto gates = (dir / "gates.txt").string();
    const auto layout = (dir / "layout.txt").string();
    const CliRun r =
        run_cli({"--engine", "brute", "--dump-gates", gates, "--dump-layout", layout, data("fig4-1.col")});
    ASSERT_EQ(r.code, cli::kOk) << r.err;

    std::ifstream gf(gates);
    std::stringstream gtext;
    gtext << gf.rdbuf();
    EXPECT_NE(gtext.str().find("# wires 23\n"), std::string::npos);
    EXPECT_NE(gtext.str().find("CNOT "), std::string::npos);

    std::ifstream lf(layout);
    std::string line;
    int lines = 0;
    while (std::getline(lf, line)) {
        ++lines;
    }
    EXPECT_EQ(lines, 23);
    std::filesystem::remove_all(dir);
}
