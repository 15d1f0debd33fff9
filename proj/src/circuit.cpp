#include "qclique/circuit.hpp"

#include <algorithm>
#include <ostream>
#include <stdexcept>

namespace qclique::circuit {

namespace {

std::size_t tri(int i, int j) { return static_cast<std::size_t>(i) * (i + 1) / 2 + static_cast<std::size_t>(j); }

std::string label(const char* sym, std::initializer_list<int> idx)
{
    std::string s(sym);
    s += '[';
    bool first = true;
    for (int v : idx) {
        if (!first) {
            s += ',';
        }
        s += std::to_string(v);
        first = false;
    }
    s += ']';
    return s;
}

[[noreturn]] void bad_index(const char* sym) { throw std::out_of_range(std::string("wire index out of range for ") + sym); }

} // namespace

const char* to_string(GateKind kind)
{
    switch (kind) {
    case GateKind::Not:
        return "NOT";
    case GateKind::Cnot:
        return "CNOT";
    case GateKind::Ccnot:
        return "CCNOT";
    }
    return "?";
}

Gate Gate::make_not(Wire target) { return Gate{GateKind::Not, {}, target}; }

Gate Gate::make_cnot(Wire control, Wire target)
{
    if (control == target) {
        throw std::invalid_argument("CNOT control equals target");
    }
    return Gate{GateKind::Cnot, {control, 0}, target};
}

Gate Gate::make_ccnot(Wire control1, Wire control2, Wire target)
{
    if (control1 == control2 || control1 == target || control2 == target) {
        throw std::invalid_argument("CCNOT wires must be pairwise distinct");
    }
    return Gate{GateKind::Ccnot, {control1, control2}, target};
}

RegisterLayout::RegisterLayout(int n, int m) : n_(n), m_(m)
{
    if (n < 1) {
        throw std::invalid_argument("layout needs n >= 1");
    }
    if (m < 0 || static_cast<std::size_t>(m) > max_edge_count(n)) {
        throw std::invalid_argument("layout needs 0 <= m <= n(n-1)/2");
    }

    kickback_ = add("kickback");

    z_.resize(tri(n, n) + 1);
    for (int i = n; i >= 1; --i) {
        for (int j = i; j >= 0; --j) {
            z_[tri(i, j)] = add(label("z", {i, j}));
        }
    }
    z_[tri(0, 0)] = add(label("z", {0, 0}));

    const std::size_t rows = tri(n - 1, n - 1) + 1;
    g_.resize(rows);
    f_.resize(rows);
    h_.resize(rows);
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i; j >= 0; --j) {
            g_[tri(i, j)] = add(label("g", {i, j}));
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i; j >= 0; --j) {
            f_[tri(i, j)] = add(label("f", {i, j}));
        }
    }
    for (int i = n - 1; i >= 0; --i) {
        for (int j = i; j >= 0; --j) {
            auto& chain = h_[tri(i, j)];
            chain.resize(static_cast<std::size_t>(i - j + 2));
            for (int a = i - j + 1; a >= 0; --a) {
                chain[static_cast<std::size_t>(a)] = add(label("h", {i, j, a}));
            }
        }
    }

    c_.resize(static_cast<std::size_t>(m) + 1);
    for (int k = m; k >= 0; --k) {
        c_[static_cast<std::size_t>(k)] = add(label("c", {k}));
    }
    r_.resize(static_cast<std::size_t>(m) + 1);
    for (int k = m; k >= 1; --k) {
        r_[static_cast<std::size_t>(k)] = add(label("r", {k}));
    }
    x_.resize(static_cast<std::size_t>(n) + 1);
    for (int b = n; b >= 1; --b) {
        x_[static_cast<std::size_t>(b)] = add(label("x", {b}));
    }
}

Wire RegisterLayout::add(std::string name)
{
    const auto w = static_cast<Wire>(names_.size());
    by_name_.emplace(name, w);
    names_.push_back(std::move(name));
    return w;
}

Wire RegisterLayout::z(int i, int j) const
{
    if (i < 0 || i > n_ || j < 0 || j > i) {
        bad_index("z");
    }
    return z_[tri(i, j)];
}

Wire RegisterLayout::g(int i, int j) const
{
    if (i < 0 || i >= n_ || j < 0 || j > i) {
        bad_index("g");
    }
    return g_[tri(i, j)];
}

Wire RegisterLayout::f(int i, int j) const
{
    if (i < 0 || i >= n_ || j < 0 || j > i) {
        bad_index("f");
    }
    return f_[tri(i, j)];
}

Wire RegisterLayout::h(int i, int j, int a) const
{
    if (i < 0 || i >= n_ || j < 0 || j > i || a < 0 || a > i - j + 1) {
        bad_index("h");
    }
    return h_[tri(i, j)][static_cast<std::size_t>(a)];
}

Wire RegisterLayout::c(int k) const
{
    if (k < 0 || k > m_) {
        bad_index("c");
    }
    return c_[static_cast<std::size_t>(k)];
}

Wire RegisterLayout::r(int k) const
{
    if (k < 1 || k > m_) {
        bad_index("r");
    }
    return r_[static_cast<std::size_t>(k)];
}

Wire RegisterLayout::x(int b) const
{
    if (b < 1 || b > n_) {
        bad_index("x");
    }
    return x_[static_cast<std::size_t>(b)];
}

Wire RegisterLayout::index_of(const std::string& name) const
{
    auto it = by_name_.find(name);
    if (it == by_name_.end()) {
        throw std::out_of_range("no wire named " + name);
    }
    return it->second;
}

std::vector<std::uint8_t> RegisterLayout::initial_state() const
{
    std::vector<std::uint8_t> bits(total_wires(), 0);
    bits[z(0, 0)] = 1;
    for (int i = 0; i < n_; ++i) {
        for (int j = 0; j <= i; ++j) {
            bits[h(i, j, 0)] = 1;
        }
    }
    bits[c(0)] = 1;
    for (int k = 1; k <= m_; ++k) {
        bits[r(k)] = 1;
    }
    return bits;
}

bool RegisterLayout::is_choice_wire(Wire w) const
{
    // x_n..x_1 occupy the last n wires.
    return w < total_wires() && w >= total_wires() - static_cast<Wire>(n_);
}

std::uint64_t expected_wire_count(int n, int m)
{
    const auto nn = static_cast<std::uint64_t>(n);
    return (2 * static_cast<std::uint64_t>(m) + 3) + (nn * nn * nn + 15 * nn * nn + 26 * nn) / 6;
}

GateCounts expected_oracle_counts(int n, int m)
{
    const auto nn = static_cast<std::uint64_t>(n);
    GateCounts out;
    out.not_count = 2 * nn * (nn + 1) * (nn + 2) / 3;
    out.cnot_count = 1;
    out.ccnot_count = 4 * static_cast<std::uint64_t>(m) + nn * (nn + 1) * (nn + 14) / 3;
    return out;
}

GateList build_qec(const RegisterLayout& layout, const std::vector<Edge>& complement_edges)
{
    if (complement_edges.size() != static_cast<std::size_t>(layout.m())) {
        throw std::invalid_argument("complement edge count does not match layout m");
    }
    GateList gates;
    gates.reserve(2 * complement_edges.size());
    int k = 0;
    for (const Edge& e : complement_edges) {
        ++k;
        if (e.a < 1 || e.a > layout.n() || e.b < 1 || e.b > layout.n() || e.a == e.b) {
            throw std::invalid_argument("complement edge endpoint out of range");
        }
        // NAND: r_k starts at 1.
        gates.push_back(Gate::make_ccnot(layout.x(e.a), layout.x(e.b), layout.r(k)));
        // AND: c_k starts at 0.
        gates.push_back(Gate::make_ccnot(layout.c(k - 1), layout.r(k), layout.c(k)));
    }
    return gates;
}

GateList build_fmno(const RegisterLayout& layout, int i, int j)
{
    if (i < 0 || i > layout.n() - 1 || j < 0 || j > i) {
        throw std::out_of_range("counting step indices need 0 <= j <= i <= n-1");
    }
    const Wire legal = layout.c(layout.m());
    const Wire xi = layout.x(i + 1);
    const int span = i - j;

    GateList gates;
    gates.reserve(static_cast<std::size_t>(3 * span + 7));

    // z_{i+1,j+1} ^= c_m & x_{i+1} & z_{i,j} & !z_{i+1,k} for k = j+2..i+1.
    for (int k = j + 2; k <= i + 1; ++k) {
        gates.push_back(Gate::make_not(layout.z(i + 1, k)));
    }
    for (int a = 1; a <= span; ++a) {
        gates.push_back(Gate::make_ccnot(layout.h(i, j, a - 1), layout.z(i + 1, j + 1 + a), layout.h(i, j, a)));
    }
    gates.push_back(Gate::make_ccnot(layout.h(i, j, span), layout.z(i, j), layout.h(i, j, span + 1)));
    gates.push_back(Gate::make_ccnot(layout.h(i, j, span + 1), xi, layout.f(i, j)));
    gates.push_back(Gate::make_ccnot(legal, layout.f(i, j), layout.z(i + 1, j + 1)));
    for (int k = j + 2; k <= i + 1; ++k) {
        gates.push_back(Gate::make_not(layout.z(i + 1, k)));
    }

    // z_{i+1,j} ^= c_m & !x_{i+1} & z_{i,j}.
    gates.push_back(Gate::make_not(xi));
    gates.push_back(Gate::make_ccnot(layout.z(i, j), xi, layout.g(i, j)));
    gates.push_back(Gate::make_ccnot(legal, layout.g(i, j), layout.z(i + 1, j)));
    gates.push_back(Gate::make_not(xi));
    return gates;
}

GateList build_forward(const RegisterLayout& layout, const std::vector<Edge>& complement_edges)
{
    GateList gates = build_qec(layout, complement_edges);
    for (int i = 0; i <= layout.n() - 1; ++i) {
        for (int j = i; j >= 0; --j) {
            GateList step = build_fmno(layout, i, j);
            gates.insert(gates.end(), step.begin(), step.end());
        }
    }
    return gates;
}

GateList build_oracle(const RegisterLayout& layout, const std::vector<Edge>& complement_edges, int w)
{
    if (w < 1 || w > layout.n()) {
        throw std::out_of_range("target clique size w must be in 1..n");
    }
    GateList forward = build_forward(layout, complement_edges);
    GateList gates;
    gates.reserve(2 * forward.size() + 1);
    gates = forward;
    gates.push_back(Gate::make_cnot(layout.z(layout.n(), w), layout.kickback()));
    GateList back = invert(forward);
    gates.insert(gates.end(), back.begin(), back.end());
    return gates;
}

GateList invert(const GateList& gates) { return GateList(gates.rbegin(), gates.rend()); }

GateCounts count_gates(const GateList& gates)
{
    GateCounts out;
    for (const Gate& g : gates) {
        switch (g.kind) {
        case GateKind::Not:
            ++out.not_count;
            break;
        case GateKind::Cnot:
            ++out.cnot_count;
            break;
        case GateKind::Ccnot:
            ++out.ccnot_count;
            break;
        }
    }
    return out;
}

void validate(const GateList& gates, Wire wire_count)
{
    for (std::size_t idx = 0; idx < gates.size(); ++idx) {
        const Gate& g = gates[idx];
        bool ok = g.target < wire_count;
        for (int c = 0; c < g.control_count(); ++c) {
            ok = ok && g.controls[static_cast<std::size_t>(c)] < wire_count;
        }
        if (!ok) {
            throw std::out_of_range("gate " + std::to_string(idx) + " references a wire >= " +
                                    std::to_string(wire_count));
        }
    }
}

void write_layout(std::ostream& out, const RegisterLayout& layout)
{
    for (Wire w = 0; w < layout.total_wires(); ++w) {
        out << w << ' ' << layout.name(w) << '\n';
    }
}

void write_gate_list(std::ostream& out, const RegisterLayout& layout, const GateList& gates)
{
    out << "# wires " << layout.total_wires() << '\n';
    for (Wire w = 0; w < layout.total_wires(); ++w) {
        out << "# " << w << ' ' << layout.name(w) << '\n';
    }
    for (const Gate& g : gates) {
        out << to_string(g.kind);
        for (int c = 0; c < g.control_count(); ++c) {
            out << ' ' << g.controls[static_cast<std::size_t>(c)];
        }
        out << ' ' << g.target << '\n';
    }
}

} // namespace qclique::circuit
