#include "qclique/molecular.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qclique::molecular {

namespace {

void check_bit(int bit)
{
    if (bit != 0 && bit != 1) {
        throw std::invalid_argument("bit must be 0 or 1");
    }
}

void check_width(int width)
{
    if (width < 0 || width > kMaxTubeWidth) {
        throw std::length_error("tube width " + std::to_string(width) + " outside 0.." +
                                std::to_string(kMaxTubeWidth));
    }
}

} // namespace

Tube::Tube(int width) : width_(width)
{
    check_width(width);
    present_.assign(std::size_t{1} << width, false);
}

Tube::Tube(int width, std::initializer_list<std::uint64_t> members) : Tube(width)
{
    for (std::uint64_t v : members) {
        insert(v);
    }
}

bool Tube::contains(std::uint64_t value) const
{
    return value < present_.size() && present_[value];
}

void Tube::insert(std::uint64_t value)
{
    if (value >= present_.size()) {
        throw std::out_of_range("value " + std::to_string(value) + " does not fit in width " +
                                std::to_string(width_));
    }
    if (!present_[value]) {
        present_[value] = true;
        ++count_;
    }
}

void Tube::clear()
{
    present_.assign(present_.size(), false);
    count_ = 0;
}

std::vector<std::uint64_t> Tube::members() const
{
    std::vector<std::uint64_t> out;
    out.reserve(count_);
    for (std::uint64_t v = 0; v < present_.size() && out.size() < count_; ++v) {
        if (present_[v]) {
            out.push_back(v);
        }
    }
    return out;
}

Tube append_head(Tube tube, int bit)
{
    check_bit(bit);
    Tube out(tube.width() + 1);
    const std::uint64_t head = static_cast<std::uint64_t>(bit) << tube.width();
    for (std::uint64_t v : tube.members()) {
        out.insert(head | v);
    }
    return out;
}

Tube append_tail(Tube tube, int bit)
{
    check_bit(bit);
    Tube out(tube.width() + 1);
    for (std::uint64_t v : tube.members()) {
        out.insert((v << 1) | static_cast<std::uint64_t>(bit));
    }
    return out;
}

Extracted extract(Tube tube, int position, int value)
{
    check_bit(value);
    if (position < 1 || position > tube.width()) {
        throw std::out_of_range("extract position " + std::to_string(position) + " outside 1.." +
                                std::to_string(tube.width()));
    }
    Extracted out{Tube(tube.width()), Tube(tube.width())};
    const int shift = position - 1;
    for (std::uint64_t v : tube.members()) {
        if (static_cast<int>((v >> shift) & 1U) == value) {
            out.plus.insert(v);
        } else {
            out.minus.insert(v);
        }
    }
    return out;
}

Tube merge(std::vector<Tube> tubes)
{
    int width = -1;
    for (const Tube& t : tubes) {
        if (t.empty()) {
            continue;
        }
        if (width >= 0 && t.width() != width) {
            throw std::invalid_argument("merge of tubes with widths " + std::to_string(width) + " and " +
                                        std::to_string(t.width()));
        }
        width = t.width();
    }
    if (width < 0) {
        // All empty: keep the widest declared width.
        width = 0;
        for (const Tube& t : tubes) {
            width = std::max(width, t.width());
        }
    }
    Tube out(width);
    for (Tube& t : tubes) {
        for (std::uint64_t v : t.members()) {
            out.insert(v);
        }
        discard(t);
    }
    return out;
}

void discard(Tube& tube) { tube.clear(); }

std::vector<Tube> amplify(Tube& source, std::size_t copies)
{
    std::vector<Tube> out(copies, source);
    discard(source);
    return out;
}

bool detect(const Tube& tube) { return !tube.empty(); }

VertexSet read(const Tube& tube, std::mt19937_64& rng)
{
    if (!detect(tube)) {
        throw std::logic_error("read from an empty tube");
    }
    const std::vector<std::uint64_t> members = tube.members();
    const std::uint64_t pick = members[rng() % members.size()];
    return VertexSet(tube.width(), pick);
}

Tube construct_state_space(int n)
{
    if (n < 1 || n > kMaxTubeWidth) {
        throw std::invalid_argument("state space size n must be in 1.." + std::to_string(kMaxTubeWidth));
    }
    // Each gamma starts as the single empty strand.
    Tube gamma1(0, {0});
    Tube gamma2(0, {0});
    gamma1 = append_tail(std::move(gamma1), 1);
    gamma2 = append_tail(std::move(gamma2), 0);
    Tube beta0 = merge({std::move(gamma1), std::move(gamma2)});

    for (int d = n - 1; d >= 1; --d) {
        std::vector<Tube> copies = amplify(beta0, 2);
        gamma1 = append_tail(std::move(copies[0]), 1);
        gamma2 = append_tail(std::move(copies[1]), 0);
        beta0 = merge({std::move(gamma1), std::move(gamma2)});
    }
    return beta0;
}

CliqueTubes solve_clique_tubes(const Graph& g, std::mt19937_64& rng, int exhaustive_limit)
{
    const int n = g.vertex_count();
    if (n > exhaustive_limit || n > kMaxTubeWidth) {
        throw std::invalid_argument("graph too large for the tube model: n = " + std::to_string(n));
    }

    Tube beta0 = construct_state_space(n);

    // Drop every candidate that contains an edge of the complement graph.
    const Graph comp = complement(g);
    for (const Edge& e : comp.edges()) {
        auto [on, off] = extract(std::move(beta0), e.a, 1);
        auto [on_both, off_second] = extract(std::move(on), e.b, 1);
        discard(on_both);
        beta0 = merge({std::move(off), std::move(off_second)});
    }

    CliqueTubes out;
    out.tubes.assign(static_cast<std::size_t>(n) + 1, Tube(n));
    out.tubes[0] = std::move(beta0);
    for (int i = 0; i <= n - 1; ++i) {
        for (int j = i; j >= 0; --j) {
            auto& lower = out.tubes[static_cast<std::size_t>(j)];
            auto& upper = out.tubes[static_cast<std::size_t>(j) + 1];
            auto [on, off] = extract(std::move(lower), i + 1, 1);
            lower = std::move(off);
            upper = merge({std::move(upper), std::move(on)});
        }
    }

    for (int i = n; i >= 0; --i) {
        if (detect(out.tubes[static_cast<std::size_t>(i)])) {
            out.answer = read(out.tubes[static_cast<std::size_t>(i)], rng);
            out.answer_size = i;
            break;
        }
    }
    return out;
}

} // namespace qclique::molecular
