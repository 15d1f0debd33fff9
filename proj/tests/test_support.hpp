#pragma once

// Independent reference routines for tests. Nothing here calls into the
// code paths it is used to check.

#include "qclique/graph.hpp"

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

namespace qclique::ref {

/// Every graph on n vertices, one per subset of the C(n,2) possible pairs.
inline std::vector<Graph> all_graphs(int n)
{
    std::vector<Edge> pairs;
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            pairs.push_back({a, b});
        }
    }
    std::vector<Graph> out;
    const std::uint64_t subsets = std::uint64_t{1} << pairs.size();
    for (std::uint64_t s = 0; s < subsets; ++s) {
        std::vector<Edge> edges;
        for (std::size_t k = 0; k < pairs.size(); ++k) {
            if ((s >> k) & 1U) {
                edges.push_back(pairs[k]);
            }
        }
        out.emplace_back(n, edges);
    }
    return out;
}

inline Graph random_graph(int n, double density, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(density);
    std::vector<Edge> edges;
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            if (coin(rng)) {
                edges.push_back({a, b});
            }
        }
    }
    return Graph(n, edges);
}

/// Clique test by explicit pair enumeration.
inline bool pairs_all_adjacent(const Graph& g, std::uint64_t mask)
{
    const int n = g.vertex_count();
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            const bool both = ((mask >> (a - 1)) & 1U) && ((mask >> (b - 1)) & 1U);
            if (both && !g.has_edge(a, b)) {
                return false;
            }
        }
    }
    return true;
}

inline int ones(std::uint64_t v)
{
    int c = 0;
    for (; v != 0; v >>= 1) {
        c += static_cast<int>(v & 1U);
    }
    return c;
}

/// {x : x is a clique with exactly w vertices}, as a 2^n membership table.
inline std::vector<bool> reference_marked(const Graph& g, int w)
{
    const int n = g.vertex_count();
    std::vector<bool> out(std::size_t{1} << n);
    for (std::uint64_t x = 0; x < out.size(); ++x) {
        out[x] = ones(x) == w && pairs_all_adjacent(g, x);
    }
    return out;
}

/// Wire count by walking every qubit family of the oracle register.
inline std::uint64_t enumerate_symbols(int n, int m)
{
    std::uint64_t count = 1; // kickback
    for (int i = 1; i <= n; ++i) {
        for (int j = 0; j <= i; ++j) {
            ++count; // z_{i,j}
        }
    }
    ++count; // z_{0,0}
    for (int i = 0; i <= n - 1; ++i) {
        for (int j = 0; j <= i; ++j) {
            count += 2; // g_{i,j}, f_{i,j}
            for (int a = 0; a <= i - j + 1; ++a) {
                ++count; // h_{i,j,a}
            }
        }
    }
    count += static_cast<std::uint64_t>(m) + 1; // c_0..c_m
    count += static_cast<std::uint64_t>(m);     // r_1..r_m
    count += static_cast<std::uint64_t>(n);     // x_1..x_n
    return count;
}

/// Marked mass after k Grover rounds, from the rotation-angle picture.
inline double rotation_law(int n, std::uint64_t marked, int k)
{
    const double theta = std::asin(std::sqrt(static_cast<double>(marked) / std::pow(2.0, n)));
    const double s = std::sin((2 * k + 1) * theta);
    return s * s;
}

} // namespace qclique::ref
