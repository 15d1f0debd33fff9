#include "qclique/simulator.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>

namespace qclique::sim {

using circuit::Gate;
using circuit::GateKind;
using circuit::Wire;

namespace {

double uniform01(std::mt19937_64& rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

void check_hybrid_size(int n)
{
    if (n < 1 || n > kMaxHybridQubits) {
        throw std::invalid_argument("choice register size must be in 1.." + std::to_string(kMaxHybridQubits));
    }
}

} // namespace

BitRegister eval_classical(const GateList& gates, const RegisterLayout& layout, const VertexSet& x)
{
    if (x.width() != layout.n()) {
        throw std::invalid_argument("choice vector width does not match layout");
    }
    circuit::validate(gates, layout.total_wires());

    BitRegister reg{layout.initial_state(), false};
    for (int b = 1; b <= layout.n(); ++b) {
        reg.bits[layout.x(b)] = x.contains(b) ? 1 : 0;
    }
    const Wire kick = layout.kickback();
    for (const Gate& g : gates) {
        bool fire = true;
        for (int c = 0; c < g.control_count(); ++c) {
            fire = fire && reg.bits[g.controls[static_cast<std::size_t>(c)]] != 0;
        }
        if (!fire) {
            continue;
        }
        if (g.target == kick) {
            reg.phase_flipped = !reg.phase_flipped;
        } else {
            reg.bits[g.target] ^= 1U;
        }
    }
    return reg;
}

MarkingOracle::MarkingOracle(const Graph& g)
    : layout_(g.vertex_count(), static_cast<int>(max_edge_count(g.vertex_count()) - g.edge_count())),
      complement_edges_(complement(g).edges()), forward_(circuit::build_forward(layout_, complement_edges_))
{
}

BitRegister MarkingOracle::evaluate(const VertexSet& x) const { return eval_classical(forward_, layout_, x); }

bool MarkingOracle::marked(const VertexSet& x, int w) const
{
    const Wire out = layout_.z(layout_.n(), w);
    return evaluate(x)[out];
}

std::vector<bool> MarkingOracle::marked_table(int w) const
{
    const int n = layout_.n();
    check_hybrid_size(n);
    const Wire out = layout_.z(n, w);
    std::vector<bool> table(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < table.size(); ++mask) {
        table[mask] = evaluate(VertexSet(n, mask))[out];
    }
    return table;
}

Predicate marked_predicate(std::shared_ptr<const MarkingOracle> oracle, int w)
{
    if (w < 1 || w > oracle->layout().n()) {
        throw std::out_of_range("target clique size w must be in 1..n");
    }
    return [oracle = std::move(oracle), w](const VertexSet& x) { return oracle->marked(x, w); };
}

Predicate marked_predicate(const Graph& g, int w) { return marked_predicate(std::make_shared<const MarkingOracle>(g), w); }

AmplitudeVector::AmplitudeVector(int n) : n_(n)
{
    check_hybrid_size(n);
    const std::size_t size = std::size_t{1} << n;
    amps_.assign(size, Complex(1.0 / std::sqrt(static_cast<double>(size)), 0.0));
}

double AmplitudeVector::norm() const
{
    double sum = 0.0;
    for (const Complex& a : amps_) {
        sum += std::norm(a);
    }
    return sum;
}

double AmplitudeVector::mass(const std::vector<bool>& subset) const
{
    double sum = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (subset[i]) {
            sum += std::norm(amps_[i]);
        }
    }
    return sum;
}

void AmplitudeVector::apply_phase_oracle(const std::vector<bool>& marked)
{
    if (marked.size() != amps_.size()) {
        throw std::invalid_argument("marked table size does not match amplitude vector");
    }
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        if (marked[i]) {
            amps_[i] = -amps_[i];
        }
    }
}

void AmplitudeVector::apply_diffusion()
{
    Complex mean(0.0, 0.0);
    for (const Complex& a : amps_) {
        mean += a;
    }
    mean /= static_cast<double>(amps_.size());
    for (Complex& a : amps_) {
        a = 2.0 * mean - a;
    }
}

std::uint64_t AmplitudeVector::sample(std::mt19937_64& rng) const
{
    const double u = uniform01(rng) * norm();
    double acc = 0.0;
    for (std::size_t i = 0; i < amps_.size(); ++i) {
        acc += std::norm(amps_[i]);
        if (u < acc) {
            return i;
        }
    }
    // Rounding left u above the final partial sum; take the last state with weight.
    for (std::size_t i = amps_.size(); i-- > 0;) {
        if (std::norm(amps_[i]) > 0.0) {
            return i;
        }
    }
    return 0;
}

void GroverConfig::validate() const
{
    if (max_iterations && *max_iterations < 1) {
        throw std::invalid_argument("max_iterations must be >= 1");
    }
    if (retries < 0) {
        throw std::invalid_argument("retries must be >= 0");
    }
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
}

int iteration_cap(int n)
{
    return static_cast<int>(std::ceil(std::pow(2.0, static_cast<double>(n) / 2.0)));
}

int optimal_iterations(int n, std::uint64_t marked_count)
{
    const double total = std::ldexp(1.0, n);
    if (marked_count == 0 || static_cast<double>(marked_count) >= total) {
        return 0;
    }
    const double theta = std::asin(std::sqrt(static_cast<double>(marked_count) / total));
    return static_cast<int>(std::floor((std::numbers::pi / 4.0) / theta));
}

std::vector<int> doubling_schedule(int cap)
{
    std::vector<int> out;
    int used = 0;
    for (int k = 1; used + k <= cap; k *= 2) {
        out.push_back(k);
        used += k;
    }
    if (out.empty() && cap >= 1) {
        out.push_back(cap);
    }
    return out;
}

double grover_success_probability(int n, std::uint64_t marked_count, int iterations)
{
    const double theta = std::asin(std::sqrt(static_cast<double>(marked_count) / std::ldexp(1.0, n)));
    const double s = std::sin((2.0 * iterations + 1.0) * theta);
    return s * s;
}

GroverOutcome grover_search(int n, const std::vector<bool>& marked, int iterations, std::mt19937_64& rng, int shots)
{
    if (iterations < 0) {
        throw std::invalid_argument("iterations must be >= 0");
    }
    if (shots < 1) {
        throw std::invalid_argument("shots must be >= 1");
    }
    AmplitudeVector state(n);
    if (marked.size() != state.size()) {
        throw std::invalid_argument("marked table size does not match 2^n");
    }
    for (int k = 0; k < iterations; ++k) {
        state.apply_phase_oracle(marked);
        state.apply_diffusion();
    }

    GroverOutcome out;
    out.iterations = iterations;
    out.marked_probability = state.mass(marked);
    for (bool m : marked) {
        out.marked_count += m ? 1U : 0U;
    }
    for (int s = 0; s < shots; ++s) {
        out.samples.emplace_back(n, state.sample(rng));
    }
    out.measured = out.samples.front();
    return out;
}

GroverOutcome grover_search(int n, const Predicate& predicate, int iterations, std::mt19937_64& rng, int shots)
{
    check_hybrid_size(n);
    std::vector<bool> marked(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < marked.size(); ++mask) {
        marked[mask] = predicate(VertexSet(n, mask));
    }
    return grover_search(n, marked, iterations, rng, shots);
}

namespace {

class DenseState {
public:
    explicit DenseState(Wire wires) : amps_(std::size_t{1} << wires, Complex(0.0, 0.0)) {}

    void set_basis(std::uint64_t index) { amps_[index] = 1.0; }

    void hadamard(Wire t)
    {
        const std::uint64_t bit = std::uint64_t{1} << t;
        const double s = 1.0 / std::numbers::sqrt2;
        for (std::uint64_t i = 0; i < amps_.size(); ++i) {
            if ((i & bit) == 0) {
                const Complex a = amps_[i];
                const Complex b = amps_[i | bit];
                amps_[i] = s * (a + b);
                amps_[i | bit] = s * (a - b);
            }
        }
    }

    void apply(const Gate& g)
    {
        std::uint64_t need = 0;
        for (int c = 0; c < g.control_count(); ++c) {
            need |= std::uint64_t{1} << g.controls[static_cast<std::size_t>(c)];
        }
        const std::uint64_t bit = std::uint64_t{1} << g.target;
        for (std::uint64_t i = 0; i < amps_.size(); ++i) {
            if ((i & bit) == 0 && (i & need) == need) {
                std::swap(amps_[i], amps_[i | bit]);
            }
        }
    }

    /// Negates every amplitude whose bits under `mask` are not all zero.
    void reflect_about_zero(std::uint64_t mask)
    {
        for (std::uint64_t i = 0; i < amps_.size(); ++i) {
            if ((i & mask) != 0) {
                amps_[i] = -amps_[i];
            }
        }
    }

    std::vector<Complex>& amplitudes() { return amps_; }

private:
    std::vector<Complex> amps_;
};

} // namespace

FullRunResult full_statevector_run(const RegisterLayout& layout, const GateList& oracle, int iterations)
{
    const Wire wires = layout.total_wires();
    if (wires > kMaxDenseWires) {
        throw std::length_error("dense simulation limited to " + std::to_string(kMaxDenseWires) + " wires, layout has " +
                                std::to_string(wires));
    }
    if (iterations < 0) {
        throw std::invalid_argument("iterations must be >= 0");
    }
    circuit::validate(oracle, wires);

    const int n = layout.n();
    const Wire kick = layout.kickback();
    std::uint64_t x_mask = 0;
    for (int b = 1; b <= n; ++b) {
        x_mask |= std::uint64_t{1} << layout.x(b);
    }

    std::vector<std::uint8_t> init = layout.initial_state();
    init[kick] = 1;
    std::uint64_t start = 0;
    for (Wire w = 0; w < wires; ++w) {
        if (init[w] != 0) {
            start |= std::uint64_t{1} << w;
        }
    }

    DenseState state(wires);
    state.set_basis(start);
    state.hadamard(kick);
    for (int b = 1; b <= n; ++b) {
        state.hadamard(layout.x(b));
    }
    for (int k = 0; k < iterations; ++k) {
        for (const Gate& g : oracle) {
            state.apply(g);
        }
        for (int b = 1; b <= n; ++b) {
            state.hadamard(layout.x(b));
        }
        state.reflect_about_zero(x_mask);
        for (int b = 1; b <= n; ++b) {
            state.hadamard(layout.x(b));
        }
    }

    FullRunResult out;
    out.n = n;
    out.x_distribution.assign(std::size_t{1} << n, 0.0);
    const std::uint64_t kick_bit = std::uint64_t{1} << kick;
    const std::uint64_t ancilla_mask = ~(x_mask | kick_bit) & ((std::uint64_t{1} << wires) - 1);
    const std::uint64_t ancilla_init = start & ancilla_mask;

    auto& amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        const double p = std::norm(amps[i]);
        std::uint64_t x = 0;
        for (int b = 1; b <= n; ++b) {
            if ((i >> layout.x(b)) & 1U) {
                x |= std::uint64_t{1} << (b - 1);
            }
        }
        out.x_distribution[x] += p;

        if ((i & ancilla_mask) != ancilla_init) {
            out.ancilla_residual = std::max(out.ancilla_residual, std::abs(amps[i]));
        } else if ((i & kick_bit) == 0) {
            // Kickback must stay (|0> - |1>)/sqrt(2): a(k=0) + a(k=1) = 0.
            out.ancilla_residual = std::max(out.ancilla_residual, std::abs(amps[i] + amps[i | kick_bit]));
        }
    }
    out.state = std::move(amps);
    return out;
}

} // namespace qclique::sim
