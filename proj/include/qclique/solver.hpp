#pragma once

#include "qclique/graph.hpp"
#include "qclique/simulator.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace qclique {

enum class Engine { Quantum, Molecular, Brute };

const char* to_string(Engine engine);
const char* to_string(sim::GroverMode mode);

/// One search attempt at target size w.
struct TraceEntry {
    int w = 0;
    int iterations = 0;
    /// Size of the marked set, when the engine knows it.
    std::optional<std::uint64_t> marked;
    bool accepted = false;

    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

/// Per-oracle-call circuit resources plus the total number of oracle calls.
struct Resources {
    std::uint64_t qubits = 0;
    std::uint64_t hadamard = 0;
    std::uint64_t not_count = 0;
    std::uint64_t cnot_count = 0;
    std::uint64_t ccnot_count = 0;
    std::uint64_t oracle_calls = 0;

    friend bool operator==(const Resources&, const Resources&) = default;
};

struct SolveReport {
    Engine engine = Engine::Brute;
    int n = 0;
    std::uint64_t theta = 0;
    std::uint64_t m = 0;
    int clique_size = 0;
    VertexSet witness;
    std::vector<TraceEntry> trace;
    Resources resources;
    std::uint64_t seed = 0;
    double wall_seconds = 0.0;
};

/// Descending-w search: for w = n..1 run Grover against the w-oracle,
/// verify the measurement classically and stop at the first verified clique.
/// Each w gets 1 + cfg.retries attempts (in paper-cap mode an attempt is one
/// pass over the doubling schedule).
SolveReport solve_quantum(const Graph& g, const sim::GroverConfig& cfg);

/// Tube-algebra engine.
SolveReport solve_molecular(const Graph& g, std::uint64_t seed);

/// Exhaustive enumeration; the witness is the lowest-mask maximum clique.
SolveReport solve_brute(const Graph& g);

struct CrossValidation {
    bool agree = false;
    std::vector<SolveReport> reports;
    std::vector<std::string> problems;
};

/// Runs all three engines (quantum in oracle-count mode) and compares sizes
/// and witnesses.
CrossValidation run_all_engines(const Graph& g, const sim::GroverConfig& cfg);

bool cross_validate(const Graph& g, const sim::GroverConfig& cfg);

} // namespace qclique
