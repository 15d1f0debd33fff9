#include "qclique/graph.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <ostream>
#include <sstream>

namespace qclique {

namespace {

std::uint64_t bit_of(int vertex) { return std::uint64_t{1} << (vertex - 1); }

std::uint64_t width_mask(int width)
{
    return width >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << width) - 1;
}

} // namespace

VertexSet::VertexSet(int width, std::uint64_t mask) : width_(width), mask_(mask)
{
    if (width < 0 || width > kMaxVertices) {
        throw std::invalid_argument("vertex set width out of range: " + std::to_string(width));
    }
    if ((mask & ~width_mask(width)) != 0) {
        throw std::invalid_argument("vertex set mask has bits beyond its width");
    }
}

VertexSet VertexSet::from_vertices(int width, const std::vector<int>& vertices)
{
    std::uint64_t mask = 0;
    for (int v : vertices) {
        if (v < 1 || v > width) {
            throw std::invalid_argument("vertex " + std::to_string(v) + " outside 1.." + std::to_string(width));
        }
        mask |= bit_of(v);
    }
    return VertexSet(width, mask);
}

int VertexSet::size() const { return std::popcount(mask_); }

bool VertexSet::contains(int vertex) const
{
    return vertex >= 1 && vertex <= width_ && (mask_ & bit_of(vertex)) != 0;
}

std::vector<int> VertexSet::vertices() const
{
    std::vector<int> out;
    for (int v = 1; v <= width_; ++v) {
        if (contains(v)) {
            out.push_back(v);
        }
    }
    return out;
}

Graph::Graph(int n, const std::vector<Edge>& edges) : n_(n)
{
    if (n < 1 || n > kMaxVertices) {
        throw std::invalid_argument("vertex count must be in 1.." + std::to_string(kMaxVertices));
    }
    adjacency_.assign(static_cast<std::size_t>(n), 0);
    edges_.reserve(edges.size());
    for (Edge e : edges) {
        if (e.a < 1 || e.a > n || e.b < 1 || e.b > n) {
            throw std::invalid_argument("edge endpoint outside 1.." + std::to_string(n));
        }
        if (e.a == e.b) {
            throw std::invalid_argument("self-loop on vertex " + std::to_string(e.a));
        }
        if (e.a > e.b) {
            std::swap(e.a, e.b);
        }
        edges_.push_back(e);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    for (const Edge& e : edges_) {
        adjacency_[static_cast<std::size_t>(e.a - 1)] |= bit_of(e.b);
        adjacency_[static_cast<std::size_t>(e.b - 1)] |= bit_of(e.a);
    }
}

bool Graph::has_edge(int a, int b) const
{
    if (a < 1 || a > n_ || b < 1 || b > n_ || a == b) {
        return false;
    }
    return (neighbours(a) & bit_of(b)) != 0;
}

DimacsError::DimacsError(std::size_t line, const std::string& what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line)
{
}

ParsedGraph parse_dimacs(std::istream& in)
{
    std::string raw;
    std::size_t line_no = 0;
    bool have_header = false;
    long long n = 0;
    long long declared_edges = 0;
    std::size_t edge_lines = 0;
    std::vector<Edge> edges;

    while (std::getline(in, raw)) {
        ++line_no;
        std::istringstream line(raw);
        std::string tag;
        if (!(line >> tag) || tag == "c") {
            continue;
        }
        if (tag == "p") {
            if (have_header) {
                throw DimacsError(line_no, "duplicate problem line");
            }
            std::string format;
            if (!(line >> format >> n >> declared_edges) || (format != "edge" && format != "col")) {
                throw DimacsError(line_no, "expected 'p edge <n> <e>'");
            }
            if (n < 1 || n > kMaxVertices) {
                throw DimacsError(line_no, "vertex count must be in 1.." + std::to_string(kMaxVertices));
            }
            if (declared_edges < 0) {
                throw DimacsError(line_no, "negative edge count");
            }
            have_header = true;
        } else if (tag == "e") {
            if (!have_header) {
                throw DimacsError(line_no, "edge line before problem line");
            }
            long long a = 0;
            long long b = 0;
            if (!(line >> a >> b)) {
                throw DimacsError(line_no, "expected 'e <a> <b>'");
            }
            if (a < 1 || a > n || b < 1 || b > n) {
                throw DimacsError(line_no, "vertex index outside 1.." + std::to_string(n));
            }
            if (a == b) {
                throw DimacsError(line_no, "self-loop on vertex " + std::to_string(a));
            }
            edges.push_back({static_cast<int>(a), static_cast<int>(b)});
            ++edge_lines;
        } else {
            throw DimacsError(line_no, "unknown line type '" + tag + "'");
        }
    }
    if (!have_header) {
        throw DimacsError(line_no, "missing problem line");
    }

    ParsedGraph out{Graph(static_cast<int>(n), edges), {}};
    if (out.graph.edge_count() != static_cast<std::size_t>(declared_edges)) {
        std::ostringstream msg;
        msg << "header declares " << declared_edges << " edges, found " << out.graph.edge_count()
            << " distinct (" << edge_lines << " edge lines)";
        out.warnings.push_back(msg.str());
    }
    return out;
}

ParsedGraph parse_dimacs(const std::string& text)
{
    std::istringstream in(text);
    return parse_dimacs(in);
}

void write_dimacs(std::ostream& out, const Graph& g)
{
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) {
        out << "e " << e.a << ' ' << e.b << '\n';
    }
}

Graph complement(const Graph& g)
{
    const int n = g.vertex_count();
    std::vector<Edge> missing;
    missing.reserve(max_edge_count(n) - g.edge_count());
    for (int a = 1; a <= n; ++a) {
        for (int b = a + 1; b <= n; ++b) {
            if (!g.has_edge(a, b)) {
                missing.push_back({a, b});
            }
        }
    }
    return Graph(n, missing);
}

bool is_clique(const Graph& g, const VertexSet& s)
{
    if (s.width() != g.vertex_count()) {
        throw std::invalid_argument("vertex set width does not match graph");
    }
    std::uint64_t rest = s.mask();
    while (rest != 0) {
        const int v = std::countr_zero(rest) + 1;
        rest &= rest - 1;
        const std::uint64_t others = s.mask() & ~bit_of(v);
        if ((others & ~g.neighbours(v)) != 0) {
            return false;
        }
    }
    return true;
}

CliqueAnswer brute_force_max_clique(const Graph& g, int exhaustive_limit)
{
    const int n = g.vertex_count();
    if (n > exhaustive_limit) {
        throw std::invalid_argument("graph has " + std::to_string(n) + " vertices, exhaustive limit is " +
                                    std::to_string(exhaustive_limit));
    }
    CliqueAnswer best;
    const std::uint64_t total = std::uint64_t{1} << n;
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        const VertexSet s(n, mask);
        const int size = s.size();
        if (size < best.size || !is_clique(g, s)) {
            continue;
        }
        if (size > best.size) {
            best.size = size;
            best.witnesses.clear();
        }
        best.witnesses.push_back(s);
    }
    return best;
}

} // namespace qclique
