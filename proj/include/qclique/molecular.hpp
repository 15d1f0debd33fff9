#pragma once

// Set-level model of the DNA tube operations (append, extract, merge,
// amplify, discard, detect, read) and the filtering algorithm built on them.
// Strand multiplicity is not modelled: a tube is a set of bitstrings.

#include "qclique/graph.hpp"

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace qclique::molecular {

/// Widest tube the model will materialize (2^24 membership flags).
inline constexpr int kMaxTubeWidth = 24;

/// A set of bitstrings of a common width. Element bit d-1 holds x_d, so the
/// head of the string (x_n) is the most significant bit.
class Tube {
public:
    Tube() = default;
    explicit Tube(int width);
    Tube(int width, std::initializer_list<std::uint64_t> members);

    int width() const { return width_; }
    std::size_t size() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool contains(std::uint64_t value) const;

    void insert(std::uint64_t value);
    void clear();

    /// Members in ascending order.
    std::vector<std::uint64_t> members() const;

    friend bool operator==(const Tube&, const Tube&) = default;

private:
    int width_ = 0;
    std::size_t count_ = 0;
    std::vector<bool> present_ = std::vector<bool>(1, false);
};

/// Prepends `bit` as the new most significant position.
Tube append_head(Tube tube, int bit);

/// Appends `bit` as the new least significant position.
Tube append_tail(Tube tube, int bit);

struct Extracted {
    Tube plus;
    Tube minus;
};

/// Splits on x_position == value. `position` is 1-based.
Extracted extract(Tube tube, int position, int value);

/// Union. Empty tubes adopt the width of the others.
Tube merge(std::vector<Tube> tubes);

/// Empties the tube in place.
void discard(Tube& tube);

/// `copies` identical tubes; the source is discarded.
std::vector<Tube> amplify(Tube& source, std::size_t copies);

bool detect(const Tube& tube);

/// One member chosen uniformly with `rng`. Throws on an empty tube.
VertexSet read(const Tube& tube, std::mt19937_64& rng);

/// All 2^n strings, built by repeated amplify / append-tail / merge.
Tube construct_state_space(int n);

struct CliqueTubes {
    /// tubes[i] holds the legal cliques with exactly i vertices.
    std::vector<Tube> tubes;
    VertexSet answer;
    int answer_size = 0;
};

/// Filter out candidates containing a complement edge, sort the survivors
/// by vertex count, then read from the highest non-empty tube.
CliqueTubes solve_clique_tubes(const Graph& g, std::mt19937_64& rng,
                               int exhaustive_limit = kDefaultExhaustiveLimit);

} // namespace qclique::molecular
