#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qclique {

/// Largest vertex count any graph may declare; vertex sets are 64-bit masks.
inline constexpr int kMaxVertices = 64;

/// Default bound for exhaustive (2^n) enumeration.
inline constexpr int kDefaultExhaustiveLimit = 20;

/// Unordered vertex pair, stored normalized with 1 <= a < b <= n.
struct Edge {
    int a = 0;
    int b = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

/// Subset of {v_1, ..., v_n}. Bit d-1 of the mask holds x_d, so the least
/// significant bit is x_1.
class VertexSet {
public:
    VertexSet() = default;
    VertexSet(int width, std::uint64_t mask);

    static VertexSet from_vertices(int width, const std::vector<int>& vertices);

    int width() const { return width_; }
    std::uint64_t mask() const { return mask_; }
    int size() const;
    bool contains(int vertex) const;
    bool empty() const { return mask_ == 0; }

    /// Members as 1-based vertex numbers, ascending.
    std::vector<int> vertices() const;

    friend auto operator<=>(const VertexSet&, const VertexSet&) = default;

private:
    int width_ = 0;
    std::uint64_t mask_ = 0;
};

/// Simple undirected graph on vertices 1..n with a canonical (sorted,
/// deduplicated) edge list.
class Graph {
public:
    Graph() = default;

    /// Normalizes and deduplicates `edges`. Throws std::invalid_argument on
    /// self-loops, out-of-range endpoints or n outside 1..kMaxVertices.
    Graph(int n, const std::vector<Edge>& edges);

    int vertex_count() const { return n_; }
    std::size_t edge_count() const { return edges_.size(); }

    /// Lexicographically ordered edges (a ascending, then b).
    const std::vector<Edge>& edges() const { return edges_; }

    bool has_edge(int a, int b) const;

    /// Neighbourhood of vertex v as a mask (bit u-1 set for each neighbour u).
    std::uint64_t neighbours(int v) const { return adjacency_[static_cast<std::size_t>(v - 1)]; }

    friend bool operator==(const Graph& lhs, const Graph& rhs)
    {
        return lhs.n_ == rhs.n_ && lhs.edges_ == rhs.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> adjacency_;
};

inline std::size_t max_edge_count(int n)
{
    return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

class DimacsError : public std::runtime_error {
public:
    DimacsError(std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct ParsedGraph {
    Graph graph;
    /// Non-fatal findings, e.g. an edge count that disagrees with the header.
    std::vector<std::string> warnings;
};

/// Reads the DIMACS edge format ("c" comments, one "p edge n e" line,
/// "e a b" lines). Duplicate and reversed edges collapse to one pair.
ParsedGraph parse_dimacs(std::istream& in);
ParsedGraph parse_dimacs(const std::string& text);

void write_dimacs(std::ostream& out, const Graph& g);

/// Graph on the same vertices holding exactly the pairs absent from `g`,
/// in lexicographic order. That order fixes the edge index k = 1..m.
Graph complement(const Graph& g);

/// True iff every pair of members of `s` is an edge of `g`.
bool is_clique(const Graph& g, const VertexSet& s);

struct CliqueAnswer {
    int size = 0;
    /// Every clique of maximum size, ascending by mask.
    std::vector<VertexSet> witnesses;
};

/// Exhaustive search over all 2^n subsets.
CliqueAnswer brute_force_max_clique(const Graph& g, int exhaustive_limit = kDefaultExhaustiveLimit);

} // namespace qclique
