#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "zigzag/arith.hpp"
#include "zigzag/templates.hpp"
#include "zigzag/word.hpp"

namespace zigzag {

template <class T>
struct OrientedInterval {
    Sign orientation = Sign::Plus;
    T length{};
};

using Interval = OrientedInterval<Rational>;

// Adjacent oriented intervals with positive lengths and no constraint on the total.
class IntervalTuple {
public:
    IntervalTuple() = default;
    explicit IntervalTuple(std::vector<Interval> intervals);

    // "+1/3,-1/6,+1/2"
    static IntervalTuple parse(std::string_view text);
    std::string str() const;

    const std::vector<Interval>& intervals() const { return intervals_; }
    std::size_t size() const { return intervals_.size(); }
    Rational total_length() const;

private:
    std::vector<Interval> intervals_;
};

// Finitary oriented paintbox: an interval tuple of total length exactly 1. Two
// consecutive intervals of equal orientation are distinct components touching at a point.
class Paintbox {
public:
    explicit Paintbox(IntervalTuple intervals);
    static Paintbox parse(std::string_view text);

    const IntervalTuple& intervals() const { return intervals_; }
    std::string str() const { return intervals_.str(); }

private:
    IntervalTuple intervals_;
};

// Sum over splittings of the zigzag into consecutive pieces, piece i a row (positive
// interval) or a column (negative interval), possibly empty, weighted by
// prod length_i^{boxes in piece i}. The symbol between two consecutive nonempty pieces
// is a connector of either sign; all other symbols inside piece i carry its orientation.
// Works over any commutative ring T with T(0), T(1), + and *.
template <class T>
T evaluate_splittings(const BinaryWord& w, std::span<const OrientedInterval<T>> intervals) {
    const std::size_t boxes = w.size() + 1;
    std::vector<T> ways(boxes + 1, T(0));
    ways[0] = T(1);
    std::vector<T> powers;
    for (const auto& iv : intervals) {
        powers.assign(boxes + 1, T(1));
        for (std::size_t e = 1; e <= boxes; ++e) powers[e] = powers[e - 1] * iv.length;
        std::vector<T> next = ways;  // empty piece
        for (std::size_t start = 0; start < boxes; ++start) {
            if (ways[start] == T(0)) continue;
            for (std::size_t end = start + 1; end <= boxes; ++end) {
                // piece covers boxes [start, end); symbol end-2 is its last internal symbol
                if (end >= start + 2 && w[end - 2] != iv.orientation) break;
                next[end] = next[end] + ways[start] * powers[end - start];
            }
        }
        ways = std::move(next);
    }
    return ways[boxes];
}

// Splitting sum via the dynamic program above; the root evaluates to 1.
Rational eval_F(const Vertex& v, const IntervalTuple& u);

// Same quantity through the iterated coproduct, the scaling maps and the row/column
// evaluations. Kept independent of eval_F and used as its oracle.
Rational eval_F_coproduct(const Vertex& v, const IntervalTuple& u);

// Template t_u: one infinite cluster per interval plus a one-symbol separator between
// equally oriented neighbours.
Template template_of_intervals(const std::vector<Sign>& orientations);
Template template_of_paintbox(const Paintbox& w);

// Closed form for words of zeta(t_u) with the largest possible number of blocks.
// Throws PreconditionError for any other word.
Rational eval_F_maxblock(const BinaryWord& w, const IntervalTuple& u);

// Finite harmonic function of a paintbox, normalised at the root.
Rational phi_w(const Vertex& v, const Paintbox& w);

}  // namespace zigzag
