#pragma once

#include "qclique/circuit.hpp"
#include "qclique/graph.hpp"

#include <complex>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <random>
#include <vector>

namespace qclique::sim {

using circuit::GateList;
using circuit::RegisterLayout;
using Complex = std::complex<double>;

/// One computational basis state of the whole oracle register. The kickback
/// wire carries no bit here: a flip aimed at it toggles `phase_flipped`.
struct BitRegister {
    std::vector<std::uint8_t> bits;
    bool phase_flipped = false;

    bool operator[](circuit::Wire w) const { return bits[w] != 0; }
};

/// Loads x into the choice wires of the initial register and applies the
/// gates with boolean semantics.
BitRegister eval_classical(const GateList& gates, const RegisterLayout& layout, const VertexSet& x);

using Predicate = std::function<bool(const VertexSet&)>;

/// Compiled forward pass for one graph; reusable across every w.
class MarkingOracle {
public:
    explicit MarkingOracle(const Graph& g);

    const RegisterLayout& layout() const { return layout_; }
    const std::vector<Edge>& complement_edges() const { return complement_edges_; }
    const GateList& forward() const { return forward_; }

    /// Register just before the kickback CNOT.
    BitRegister evaluate(const VertexSet& x) const;

    /// z_{n,w} after the forward pass.
    bool marked(const VertexSet& x, int w) const;

    /// marked(x, w) for every x in 0..2^n-1.
    std::vector<bool> marked_table(int w) const;

private:
    RegisterLayout layout_;
    std::vector<Edge> complement_edges_;
    GateList forward_;
};

/// Predicate x -> z_{n,w}. Pure and safe to call from several threads.
Predicate marked_predicate(const Graph& g, int w);
Predicate marked_predicate(std::shared_ptr<const MarkingOracle> oracle, int w);

/// Largest choice register the hybrid engine will allocate.
inline constexpr int kMaxHybridQubits = 20;

/// Amplitudes over the n choice wires only.
class AmplitudeVector {
public:
    /// Uniform superposition over 2^n states.
    explicit AmplitudeVector(int n);

    int qubits() const { return n_; }
    std::size_t size() const { return amps_.size(); }
    const std::vector<Complex>& amplitudes() const { return amps_; }
    Complex operator[](std::size_t i) const { return amps_[i]; }

    double norm() const;
    double probability(std::size_t i) const { return std::norm(amps_[i]); }
    double mass(const std::vector<bool>& subset) const;

    /// Negates the amplitude of every marked state.
    void apply_phase_oracle(const std::vector<bool>& marked);

    /// Inversion about the mean, 2|s><s| - I.
    void apply_diffusion();

    /// Draws a basis index from |a_x|^2.
    std::uint64_t sample(std::mt19937_64& rng) const;

private:
    int n_;
    std::vector<Complex> amps_;
};

enum class GroverMode { PaperCap, OracleCount };

struct GroverConfig {
    GroverMode mode = GroverMode::OracleCount;
    /// Per-attempt iteration cap; unset means ceil(2^(n/2)).
    std::optional<int> max_iterations;
    int retries = 3;
    std::uint64_t seed = 20240607;
    int shots = 1;

    /// Throws std::invalid_argument when a field is out of range.
    void validate() const;
};

/// ceil(2^(n/2)).
int iteration_cap(int n);

/// floor((pi/4) / asin(sqrt(M / 2^n))), or 0 when M is 0 or 2^n.
int optimal_iterations(int n, std::uint64_t marked_count);

/// Attempt lengths 1, 2, 4, ... whose running total stays within `cap`.
std::vector<int> doubling_schedule(int cap);

/// sin^2((2k+1) asin(sqrt(M/N))).
double grover_success_probability(int n, std::uint64_t marked_count, int iterations);

struct GroverOutcome {
    /// First measurement; `samples` holds all `shots` of them.
    VertexSet measured;
    std::vector<VertexSet> samples;
    double marked_probability = 0.0;
    int iterations = 0;
    std::uint64_t marked_count = 0;
};

/// Starts from the uniform state, applies `iterations` rounds of phase
/// oracle then diffusion, records the marked mass and samples `shots` times.
GroverOutcome grover_search(int n, const Predicate& predicate, int iterations, std::mt19937_64& rng,
                            int shots = 1);

/// Same, with the marked set already tabulated.
GroverOutcome grover_search(int n, const std::vector<bool>& marked, int iterations, std::mt19937_64& rng,
                            int shots = 1);

/// Dense simulation bound: 2^26 amplitudes.
inline constexpr circuit::Wire kMaxDenseWires = 26;

struct FullRunResult {
    int n = 0;
    std::vector<Complex> state;
    /// Marginal distribution over the choice register, indexed by x.
    std::vector<double> x_distribution;
    /// Largest deviation from "every ancilla back in its initial state and
    /// the kickback wire in (|0> - |1>)/sqrt(2)".
    double ancilla_residual = 0.0;
};

/// Whole-register statevector run of the oracle circuit: Hadamards on the
/// choice wires and the kickback wire (prepared as |1>), then `iterations`
/// rounds of the oracle gate list followed by diffusion on the choice wires.
FullRunResult full_statevector_run(const RegisterLayout& layout, const GateList& oracle, int iterations = 1);

} // namespace qclique::sim
