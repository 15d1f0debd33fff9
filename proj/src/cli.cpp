#include "qclique/cli.hpp"

#include "qclique/circuit.hpp"
#include "qclique/report.hpp"
#include "qclique/solver.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>

namespace qclique::cli {

namespace {

struct RunConfig {
    std::string input = "-";
    std::string engine = "all";
    std::string mode = "oracle-count";
    std::uint64_t seed = sim::GroverConfig{}.seed;
    int retries = sim::GroverConfig{}.retries;
    int shots = 1;
    bool json = false;
    std::string dump_gates;
    std::string dump_layout;
};

bool dump_circuit(const Graph& g, int clique_size, const RunConfig& cfg, std::ostream& err)
{
    if (cfg.dump_gates.empty() && cfg.dump_layout.empty()) {
        return true;
    }
    const Graph comp = complement(g);
    const circuit::RegisterLayout layout(g.vertex_count(), static_cast<int>(comp.edge_count()));
    if (!cfg.dump_layout.empty()) {
        std::ofstream file(cfg.dump_layout);
        if (!file) {
            err << "error: cannot write " << cfg.dump_layout << '\n';
            return false;
        }
        circuit::write_layout(file, layout);
    }
    if (!cfg.dump_gates.empty()) {
        std::ofstream file(cfg.dump_gates);
        if (!file) {
            err << "error: cannot write " << cfg.dump_gates << '\n';
            return false;
        }
        const int w = std::max(1, clique_size);
        file << "# oracle for w=" << w << '\n';
        circuit::write_gate_list(file, layout, circuit::build_oracle(layout, comp.edges(), w));
    }
    return true;
}

} // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err)
{
    RunConfig cfg;
    CLI::App app{"Maximum clique via Grover search over a reversible clique oracle", "clique"};
    app.add_option("input", cfg.input, "DIMACS edge file, '-' for stdin");
    app.add_option("--engine", cfg.engine, "quantum | molecular | brute | all")
        ->check(CLI::IsMember({"quantum", "molecular", "brute", "all"}));
    app.add_option("--mode", cfg.mode, "Grover iteration policy: oracle-count | paper-cap")
        ->check(CLI::IsMember({"oracle-count", "paper-cap"}));
    app.add_option("--seed", cfg.seed, "RNG seed for measurements and reads");
    app.add_option("--retries", cfg.retries, "extra attempts per target size")->check(CLI::NonNegativeNumber);
    app.add_option("--shots", cfg.shots, "measurements per attempt")->check(CLI::PositiveNumber);
    app.add_flag("--json", cfg.json, "emit JSON");
    app.add_option("--dump-gates", cfg.dump_gates, "write the oracle gate list to this path");
    app.add_option("--dump-layout", cfg.dump_layout, "write the wire index map to this path");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n' << "run with --help for usage\n";
        return kUsageError;
    }

    ParsedGraph parsed;
    try {
        if (cfg.input == "-") {
            parsed = parse_dimacs(in);
        } else {
            std::ifstream file(cfg.input);
            if (!file) {
                err << "error: cannot open " << cfg.input << '\n';
                return kInputError;
            }
            parsed = parse_dimacs(file);
        }
    } catch (const std::exception& e) {
        err << "error: " << cfg.input << ": " << e.what() << '\n';
        return kInputError;
    }
    for (const std::string& w : parsed.warnings) {
        err << "warning: " << w << '\n';
    }

    sim::GroverConfig grover;
    grover.mode = cfg.mode == "paper-cap" ? sim::GroverMode::PaperCap : sim::GroverMode::OracleCount;
    grover.seed = cfg.seed;
    grover.retries = cfg.retries;
    grover.shots = cfg.shots;
    const ReportFormat format = cfg.json ? ReportFormat::Json : ReportFormat::Text;
    const Graph& g = parsed.graph;

    int exit_code = kOk;
    int clique_size = 0;
    try {
        if (cfg.engine == "all") {
            const CrossValidation all = run_all_engines(g, grover);
            emit_report(out, all, format);
            clique_size = all.reports.back().clique_size;
            exit_code = all.agree ? kOk : kEngineMismatch;
        } else {
            SolveReport report;
            if (cfg.engine == "quantum") {
                report = solve_quantum(g, grover);
            } else if (cfg.engine == "molecular") {
                report = solve_molecular(g, cfg.seed);
            } else {
                report = solve_brute(g);
            }
            emit_report(out, report, format);
            clique_size = report.clique_size;
        }
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::length_error& e) {
        err << "error: " << e.what() << '\n';
        return kInputError;
    }

    if (!dump_circuit(g, clique_size, cfg, err)) {
        return kInputError;
    }
    return exit_code;
}

} // namespace qclique::cli
