#include "qclique/circuit.hpp"

#include "test_support.hpp"

#include "gtest/gtest.h"

#include <set>
#include <sstream>

using namespace qclique;
using namespace qclique::circuit;

TEST(Layout, WireCountExamples)
{
    EXPECT_EQ(RegisterLayout(2, 0).total_wires(), 23U);
    EXPECT_EQ(RegisterLayout(1, 0).total_wires(), 10U);
    EXPECT_EQ(RegisterLayout(3, 3).total_wires(), 49U);
}

TEST(Layout, SingleVertexSymbols)
{
    const RegisterLayout layout(1, 0);
    std::set<std::string> names;
    for (Wire w = 0; w < layout.total_wires(); ++w) {
        names.insert(layout.name(w));
    }
    const std::set<std::string> expected{"kickback", "z[1,1]", "z[1,0]", "z[0,0]", "g[0,0]",
                                         "f[0,0]",   "h[0,0,1]", "h[0,0,0]", "c[0]", "x[1]"};
    EXPECT_EQ(names, expected);
}

TEST(Layout, MatchesClosedFormAndIsBijective)
{
    for (int n = 1; n <= 12; ++n) {
        const int max_m = static_cast<int>(max_edge_count(n));
        for (int m = 0; m <= max_m; m += (max_m < 8 ? 1 : max_m / 7)) {
            const RegisterLayout layout(n, m);
            EXPECT_EQ(layout.total_wires(), expected_wire_count(n, m));
            EXPECT_EQ(layout.total_wires(), ref::enumerate_symbols(n, m));

            std::set<std::string> seen;
            for (Wire w = 0; w < layout.total_wires(); ++w) {
                EXPECT_TRUE(seen.insert(layout.name(w)).second);
                EXPECT_EQ(layout.index_of(layout.name(w)), w);
            }
        }
    }
}

TEST(Layout, Accessors)
{
    const RegisterLayout layout(3, 2);
    EXPECT_EQ(layout.name(layout.z(2, 1)), "z[2,1]");
    EXPECT_EQ(layout.name(layout.h(1, 0, 2)), "h[1,0,2]");
    EXPECT_EQ(layout.name(layout.r(2)), "r[2]");
    EXPECT_EQ(layout.name(layout.x(3)), "x[3]");
    EXPECT_EQ(layout.kickback(), 0U);
    for (int b = 1; b <= 3; ++b) {
        EXPECT_TRUE(layout.is_choice_wire(layout.x(b)));
    }
    EXPECT_FALSE(layout.is_choice_wire(layout.c(0)));

    EXPECT_THROW(layout.z(4, 0), std::out_of_range);
    EXPECT_THROW(layout.g(3, 0), std::out_of_range);
    EXPECT_THROW(layout.h(1, 0, 3), std::out_of_range);
    EXPECT_THROW(layout.r(0), std::out_of_range);
    EXPECT_THROW(layout.c(3), std::out_of_range);
    EXPECT_THROW(layout.x(0), std::out_of_range);
    EXPECT_THROW(layout.index_of("nope"), std::out_of_range);

    EXPECT_THROW(RegisterLayout(0, 0), std::invalid_argument);
    EXPECT_THROW(RegisterLayout(3, 4), std::invalid_argument);
    EXPECT_THROW(RegisterLayout(3, -1), std::invalid_argument);
}

TEST(Layout, InitialState)
{
    const RegisterLayout layout(3, 2);
    const auto bits = layout.initial_state();
    for (Wire w = 0; w < layout.total_wires(); ++w) {
        const std::string& name = layout.name(w);
        const bool one = name == "z[0,0]" || name == "c[0]" || name.rfind("r[", 0) == 0 ||
                         (name.rfind("h[", 0) == 0 && name.size() >= 4 && name.substr(name.size() - 3) == ",0]");
        EXPECT_EQ(bits[w], one ? 1 : 0) << name;
    }
}

TEST(Gate, Validation)
{
    EXPECT_THROW(Gate::make_cnot(1, 1), std::invalid_argument);
    EXPECT_THROW(Gate::make_ccnot(1, 1, 2), std::invalid_argument);
    EXPECT_THROW(Gate::make_ccnot(1, 2, 2), std::invalid_argument);
    EXPECT_EQ(Gate::make_ccnot(1, 2, 3).control_count(), 2);
    EXPECT_THROW(validate({Gate::make_not(5)}, 5), std::out_of_range);
    EXPECT_NO_THROW(validate({Gate::make_cnot(0, 4)}, 5));
}

TEST(Qec, Examples)
{
    EXPECT_TRUE(build_qec(RegisterLayout(2, 0), {}).empty());

    const RegisterLayout one(2, 1);
    const GateList qec = build_qec(one, {{1, 2}});
    const GateList expected{Gate::make_ccnot(one.x(1), one.x(2), one.r(1)),
                            Gate::make_ccnot(one.c(0), one.r(1), one.c(1))};
    EXPECT_EQ(qec, expected);

    const RegisterLayout three(3, 3);
    const GateList all = build_qec(three, complement(Graph(3, {})).edges());
    EXPECT_EQ(all.size(), 6U);
    EXPECT_EQ(count_gates(all), (GateCounts{0, 0, 6}));
    EXPECT_EQ(all[2].target, three.r(2));
    EXPECT_EQ(all[5].target, three.c(3));

    EXPECT_THROW(build_qec(one, {}), std::invalid_argument);
    EXPECT_THROW(build_qec(one, {{1, 3}}), std::invalid_argument);
}

TEST(Fmno, FirstStepGateList)
{
    const RegisterLayout l(2, 0);
    const GateList step = build_fmno(l, 0, 0);
    const GateList expected{
        Gate::make_ccnot(l.h(0, 0, 0), l.z(0, 0), l.h(0, 0, 1)),
        Gate::make_ccnot(l.h(0, 0, 1), l.x(1), l.f(0, 0)),
        Gate::make_ccnot(l.c(0), l.f(0, 0), l.z(1, 1)),
        Gate::make_not(l.x(1)),
        Gate::make_ccnot(l.z(0, 0), l.x(1), l.g(0, 0)),
        Gate::make_ccnot(l.c(0), l.g(0, 0), l.z(1, 0)),
        Gate::make_not(l.x(1)),
    };
    EXPECT_EQ(step, expected);
}

TEST(Fmno, PerCallCounts)
{
    const RegisterLayout l(4, 0);
    EXPECT_EQ(count_gates(build_fmno(l, 0, 0)), (GateCounts{2, 0, 5}));
    EXPECT_EQ(count_gates(build_fmno(l, 1, 0)), (GateCounts{4, 0, 6}));
    for (int i = 0; i < 4; ++i) {
        for (int j = 0; j <= i; ++j) {
            const auto d = static_cast<std::uint64_t>(i - j);
            EXPECT_EQ(count_gates(build_fmno(l, i, j)), (GateCounts{2 * d + 2, 0, d + 5}));
        }
    }
    EXPECT_THROW(build_fmno(l, 4, 0), std::out_of_range);
    EXPECT_THROW(build_fmno(l, 1, 2), std::out_of_range);
}

TEST(Fmno, SummedCountsMatchClosedForms)
{
    for (int n = 1; n <= 10; ++n) {
        const RegisterLayout l(n, 0);
        GateCounts sum;
        for (int i = 0; i < n; ++i) {
            for (int j = i; j >= 0; --j) {
                const GateCounts c = count_gates(build_fmno(l, i, j));
                sum.not_count += c.not_count;
                sum.ccnot_count += c.ccnot_count;
            }
        }
        const auto nn = static_cast<std::uint64_t>(n);
        EXPECT_EQ(sum.not_count, nn * (nn + 1) * (nn + 2) / 3);
        EXPECT_EQ(sum.ccnot_count, nn * (nn + 1) * (nn + 14) / 6);
    }
}

TEST(Oracle, Counts)
{
    const RegisterLayout l2(2, 0);
    EXPECT_EQ(count_gates(build_oracle(l2, {}, 2)), (GateCounts{16, 1, 32}));

    const Graph g3(3, {{1, 2}});
    const RegisterLayout l3(3, 2);
    EXPECT_EQ(count_gates(build_oracle(l3, complement(g3).edges(), 1)).ccnot_count, 76U);

    for (int w = 1; w <= 3; ++w) {
        EXPECT_EQ(count_gates(build_oracle(l3, complement(g3).edges(), w)).cnot_count, 1U);
    }
    EXPECT_THROW(build_oracle(l3, complement(g3).edges(), 0), std::out_of_range);
    EXPECT_THROW(build_oracle(l3, complement(g3).edges(), 4), std::out_of_range);
}

TEST(Oracle, ClosedFormsForAllSmallSizes)
{
    std::mt19937_64 rng(5);
    for (int n = 1; n <= 10; ++n) {
        for (int trial = 0; trial < 3; ++trial) {
            const Graph g = ref::random_graph(n, 0.25 * (trial + 1), rng);
            const auto edges = complement(g).edges();
            const RegisterLayout l(n, static_cast<int>(edges.size()));
            const GateList oracle = build_oracle(l, edges, 1 + trial % n);
            EXPECT_EQ(count_gates(oracle), expected_oracle_counts(n, static_cast<int>(edges.size())));
            EXPECT_NO_THROW(validate(oracle, l.total_wires()));
        }
    }
}

TEST(Oracle, SecondHalfMirrorsFirst)
{
    const RegisterLayout l(3, 1);
    const GateList oracle = build_oracle(l, {{1, 3}}, 2);
    const std::size_t half = oracle.size() / 2;
    EXPECT_EQ(oracle[half], Gate::make_cnot(l.z(3, 2), l.kickback()));
    for (std::size_t k = 0; k < half; ++k) {
        EXPECT_EQ(oracle[k], oracle[oracle.size() - 1 - k]);
    }
}

TEST(Invert, Basics)
{
    EXPECT_TRUE(invert({}).empty());
    const Gate a = Gate::make_not(0);
    const Gate b = Gate::make_cnot(0, 1);
    EXPECT_EQ(invert({a, b}), (GateList{b, a}));

    std::mt19937_64 rng(21);
    for (int trial = 0; trial < 50; ++trial) {
        GateList list;
        const int len = static_cast<int>(rng() % 30);
        for (int k = 0; k < len; ++k) {
            const auto t = static_cast<Wire>(rng() % 5);
            const auto c1 = static_cast<Wire>((t + 1 + rng() % 4) % 5);
            list.push_back(rng() % 2 ? Gate::make_not(t) : Gate::make_cnot(c1, t));
        }
        EXPECT_EQ(invert(invert(list)), list);
    }
}

TEST(CountGates, Examples)
{
    EXPECT_EQ(count_gates({}), (GateCounts{0, 0, 0}));
    EXPECT_EQ(count_gates(build_qec(RegisterLayout(2, 1), {{1, 2}})), (GateCounts{0, 0, 2}));
}

TEST(Export, GateListFormat)
{
    const RegisterLayout l(2, 1);
    std::ostringstream out;
    write_gate_list(out, l, {Gate::make_not(3), Gate::make_cnot(1, 0), Gate::make_ccnot(4, 5, 6)});
    const std::string text = out.str();
    EXPECT_NE(text.find("# wires 25\n"), std::string::npos);
    EXPECT_NE(text.find("# 0 kickback\n"), std::string::npos);
    EXPECT_NE(text.find("\nNOT 3\nCNOT 1 0\nCCNOT 4 5 6\n"), std::string::npos);

    std::ostringstream map;
    write_layout(map, l);
    EXPECT_EQ(map.str().rfind("0 kickback\n", 0), 0U);
    EXPECT_NE(map.str().find(std::to_string(l.x(1)) + " x[1]\n"), std::string::npos);
}
