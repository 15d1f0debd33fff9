#pragma once

// Reversible oracle for "x is a clique of exactly w vertices", built from
// NOT / CNOT / CCNOT gates over a flat wire register.
//
// Two sub-networks make up the forward pass:
//  * the evaluating circuit: per complement edge e_k = (v_i, v_j) a NAND into
//    r_k (r_k starts at 1) and an AND accumulating legality into c_k;
//  * the ones-counting network: for i = 0..n-1, j = i..0 it routes the
//    legality flag through z_{i,j} into z_{i+1,j+1} (x_{i+1} = 1) or
//    z_{i+1,j} (x_{i+1} = 0), so z_{n,w} = 1 iff x is legal with w ones.
// The oracle is forward pass, one CNOT from z_{n,w} onto the kickback wire,
// then the forward pass reversed.

#include "qclique/graph.hpp"

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <unordered_map>
#include <vector>

namespace qclique::circuit {

using Wire = std::uint32_t;

enum class GateKind : std::uint8_t { Not, Cnot, Ccnot };

const char* to_string(GateKind kind);

struct Gate {
    GateKind kind = GateKind::Not;
    std::array<Wire, 2> controls{};
    Wire target = 0;

    static Gate make_not(Wire target);
    static Gate make_cnot(Wire control, Wire target);
    static Gate make_ccnot(Wire control1, Wire control2, Wire target);

    int control_count() const { return static_cast<int>(kind); }

    friend bool operator==(const Gate&, const Gate&) = default;
};

using GateList = std::vector<Gate>;

/// Named wire assignment for every qubit of the clique oracle.
///
/// Wire order follows the register order of the initial state: kickback,
/// z_{n,n}..z_{1,0}, z_{0,0}, g, f, h (each i = n-1..0, j = i..0, a high to
/// low), c_m..c_0, r_m..r_1, x_n..x_1.
class RegisterLayout {
public:
    /// Throws std::invalid_argument unless n >= 1 and 0 <= m <= n(n-1)/2.
    RegisterLayout(int n, int m);

    int n() const { return n_; }
    int m() const { return m_; }
    Wire total_wires() const { return static_cast<Wire>(names_.size()); }

    Wire kickback() const { return kickback_; }
    /// 0 <= j <= i <= n.
    Wire z(int i, int j) const;
    /// 0 <= j <= i <= n-1.
    Wire g(int i, int j) const;
    Wire f(int i, int j) const;
    /// 0 <= j <= i <= n-1, 0 <= a <= i-j+1.
    Wire h(int i, int j, int a) const;
    /// 0 <= k <= m.
    Wire c(int k) const;
    /// 1 <= k <= m.
    Wire r(int k) const;
    /// 1 <= b <= n.
    Wire x(int b) const;

    const std::string& name(Wire w) const { return names_.at(w); }
    /// Throws std::out_of_range for unknown names.
    Wire index_of(const std::string& name) const;

    /// Register before any gate: z_{0,0} = h_{i,j,0} = c_0 = r_k = 1, all
    /// else 0. The kickback entry is 0; its |-> preparation is a phase
    /// convention handled by the simulators.
    std::vector<std::uint8_t> initial_state() const;

    bool is_choice_wire(Wire w) const;

private:
    Wire add(std::string name);

    int n_;
    int m_;
    Wire kickback_ = 0;
    std::vector<Wire> z_;
    std::vector<Wire> g_;
    std::vector<Wire> f_;
    std::vector<std::vector<Wire>> h_;
    std::vector<Wire> c_;
    std::vector<Wire> r_;
    std::vector<Wire> x_;
    std::vector<std::string> names_;
    std::unordered_map<std::string, Wire> by_name_;
};

/// Closed-form wire count: (2m+3) + (n^3+15n^2+26n)/6.
std::uint64_t expected_wire_count(int n, int m);

struct GateCounts {
    std::uint64_t not_count = 0;
    std::uint64_t cnot_count = 0;
    std::uint64_t ccnot_count = 0;

    std::uint64_t total() const { return not_count + cnot_count + ccnot_count; }
    friend bool operator==(const GateCounts&, const GateCounts&) = default;
};

/// Closed forms for one full oracle (forward, kickback, reverse).
GateCounts expected_oracle_counts(int n, int m);

/// Legality network over the canonical complement edge list.
GateList build_qec(const RegisterLayout& layout, const std::vector<Edge>& complement_edges);

/// Ones-counting step for loop indices (i, j).
GateList build_fmno(const RegisterLayout& layout, int i, int j);

/// Evaluating circuit followed by every counting step, in loop order.
GateList build_forward(const RegisterLayout& layout, const std::vector<Edge>& complement_edges);

/// Full phase oracle for target clique size w, 1 <= w <= n.
GateList build_oracle(const RegisterLayout& layout, const std::vector<Edge>& complement_edges, int w);

/// Reversed sequence; every gate here is its own inverse.
GateList invert(const GateList& gates);

GateCounts count_gates(const GateList& gates);

/// Throws std::out_of_range if any wire index is >= wire_count.
void validate(const GateList& gates, Wire wire_count);

/// Text export: "# <index> <name>" header lines, then one gate per line as
/// "NOT t", "CNOT c t" or "CCNOT c1 c2 t".
void write_gate_list(std::ostream& out, const RegisterLayout& layout, const GateList& gates);

/// "<index> <name>" per line.
void write_layout(std::ostream& out, const RegisterLayout& layout);

} // namespace qclique::circuit
