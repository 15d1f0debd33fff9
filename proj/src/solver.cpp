#include "qclique/solver.hpp"

#include "qclique/circuit.hpp"
#include "qclique/molecular.hpp"

#include <algorithm>
#include <chrono>
#include <random>

namespace qclique {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start)
{
    return std::chrono::duration<double>(Clock::now() - start).count();
}

SolveReport blank_report(Engine engine, const Graph& g)
{
    SolveReport r;
    r.engine = engine;
    r.n = g.vertex_count();
    r.theta = g.edge_count();
    r.m = max_edge_count(g.vertex_count()) - g.edge_count();
    r.witness = VertexSet(g.vertex_count(), 0);
    return r;
}

bool verified(const Graph& g, const VertexSet& x, int w) { return x.size() == w && is_clique(g, x); }

} // namespace

const char* to_string(Engine engine)
{
    switch (engine) {
    case Engine::Quantum:
        return "quantum";
    case Engine::Molecular:
        return "molecular";
    case Engine::Brute:
        return "brute";
    }
    return "?";
}

const char* to_string(sim::GroverMode mode)
{
    return mode == sim::GroverMode::PaperCap ? "paper-cap" : "oracle-count";
}

SolveReport solve_quantum(const Graph& g, const sim::GroverConfig& cfg)
{
    cfg.validate();
    const auto start = Clock::now();
    SolveReport report = blank_report(Engine::Quantum, g);
    report.seed = cfg.seed;

    const int n = g.vertex_count();
    const sim::MarkingOracle oracle(g);
    const auto counts =
        circuit::count_gates(circuit::build_oracle(oracle.layout(), oracle.complement_edges(), n));
    report.resources.qubits = oracle.layout().total_wires();
    report.resources.hadamard = static_cast<std::uint64_t>(n) + 1;
    report.resources.not_count = counts.not_count;
    report.resources.cnot_count = counts.cnot_count;
    report.resources.ccnot_count = counts.ccnot_count;

    const int cap = cfg.max_iterations.value_or(sim::iteration_cap(n));
    std::mt19937_64 rng(cfg.seed);

    for (int w = n; w >= 1; --w) {
        const std::vector<bool> marked = oracle.marked_table(w);
        const auto marked_count = static_cast<std::uint64_t>(std::count(marked.begin(), marked.end(), true));

        std::vector<int> attempt_lengths;
        if (cfg.mode == sim::GroverMode::OracleCount) {
            attempt_lengths.push_back(std::min(sim::optimal_iterations(n, marked_count), cap));
        } else {
            attempt_lengths = sim::doubling_schedule(cap);
        }

        for (int round = 0; round <= cfg.retries; ++round) {
            for (int k : attempt_lengths) {
                const sim::GroverOutcome run = sim::grover_search(n, marked, k, rng, cfg.shots);
                report.resources.oracle_calls += static_cast<std::uint64_t>(k);

                TraceEntry entry{w, k, std::nullopt, false};
                if (cfg.mode == sim::GroverMode::OracleCount) {
                    entry.marked = marked_count;
                }
                for (const VertexSet& x : run.samples) {
                    if (verified(g, x, w)) {
                        entry.accepted = true;
                        report.clique_size = w;
                        report.witness = x;
                        break;
                    }
                }
                report.trace.push_back(entry);
                if (entry.accepted) {
                    report.wall_seconds = seconds_since(start);
                    return report;
                }
            }
        }
    }
    report.wall_seconds = seconds_since(start);
    return report;
}

SolveReport solve_molecular(const Graph& g, std::uint64_t seed)
{
    const auto start = Clock::now();
    SolveReport report = blank_report(Engine::Molecular, g);
    report.seed = seed;

    std::mt19937_64 rng(seed);
    const molecular::CliqueTubes result = molecular::solve_clique_tubes(g, rng);
    for (int w = g.vertex_count(); w >= result.answer_size && w >= 1; --w) {
        const auto& tube = result.tubes[static_cast<std::size_t>(w)];
        report.trace.push_back({w, 0, tube.size(), w == result.answer_size});
    }
    report.clique_size = result.answer_size;
    report.witness = result.answer;
    report.wall_seconds = seconds_since(start);
    return report;
}

SolveReport solve_brute(const Graph& g)
{
    const auto start = Clock::now();
    SolveReport report = blank_report(Engine::Brute, g);
    const CliqueAnswer answer = brute_force_max_clique(g);
    report.clique_size = answer.size;
    report.witness = answer.witnesses.front();
    report.trace.push_back({answer.size, 0, answer.witnesses.size(), true});
    report.wall_seconds = seconds_since(start);
    return report;
}

CrossValidation run_all_engines(const Graph& g, const sim::GroverConfig& cfg)
{
    sim::GroverConfig exact = cfg;
    exact.mode = sim::GroverMode::OracleCount;

    CrossValidation out;
    out.reports.push_back(solve_quantum(g, exact));
    out.reports.push_back(solve_molecular(g, cfg.seed));
    out.reports.push_back(solve_brute(g));

    const int expected = out.reports.back().clique_size;
    for (const SolveReport& r : out.reports) {
        if (r.clique_size != expected) {
            out.problems.push_back(std::string(to_string(r.engine)) + " reports size " +
                                   std::to_string(r.clique_size) + ", brute force " + std::to_string(expected));
        }
        if (r.witness.size() != r.clique_size || !is_clique(g, r.witness)) {
            out.problems.push_back(std::string(to_string(r.engine)) + " witness does not verify");
        }
    }
    out.agree = out.problems.empty();
    return out;
}

bool cross_validate(const Graph& g, const sim::GroverConfig& cfg) { return run_all_engines(g, cfg).agree; }

} // namespace qclique
