#include "zigzag/paintbox.hpp"

#include <optional>

namespace zigzag {

IntervalTuple::IntervalTuple(std::vector<Interval> intervals) : intervals_(std::move(intervals)) {
    for (const auto& iv : intervals_) {
        if (iv.length <= 0) throw PreconditionError("interval lengths must be positive");
    }
}

IntervalTuple IntervalTuple::parse(std::string_view text) {
    std::vector<Interval> intervals;
    std::size_t start = 0;
    while (start <= text.size()) {
        auto comma = text.find(',', start);
        auto token = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
        while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
        if (token.size() < 2 || (token[0] != '+' && token[0] != '-'))
            throw ParseError("interval token must be a sign followed by a length: '" + std::string(token) + "'");
        Interval iv;
        iv.orientation = token[0] == '+' ? Sign::Plus : Sign::Minus;
        iv.length = parse_rational(token.substr(1));
        if (iv.length <= 0) throw ParseError("interval lengths must be positive: '" + std::string(token) + "'");
        intervals.push_back(iv);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return IntervalTuple(std::move(intervals));
}

std::string IntervalTuple::str() const {
    std::string s;
    for (std::size_t i = 0; i < intervals_.size(); ++i) {
        if (i) s += ',';
        s += sign_char(intervals_[i].orientation);
        s += to_string(intervals_[i].length);
    }
    return s;
}

Rational IntervalTuple::total_length() const {
    Rational total = 0;
    for (const auto& iv : intervals_) total += iv.length;
    return total;
}

Paintbox::Paintbox(IntervalTuple intervals) : intervals_(std::move(intervals)) {
    if (intervals_.size() == 0) throw PreconditionError("a paintbox needs at least one interval");
    if (intervals_.total_length() != 1)
        throw PreconditionError("paintbox lengths must sum to 1, got " + to_string(intervals_.total_length()));
}

Paintbox Paintbox::parse(std::string_view text) {
    auto tuple = IntervalTuple::parse(text);
    if (tuple.total_length() != 1)
        throw ParseError("paintbox lengths must sum to 1, got " + to_string(tuple.total_length()));
    return Paintbox(std::move(tuple));
}

Rational eval_F(const Vertex& v, const IntervalTuple& u) {
    if (v.is_root()) return 1;
    return evaluate_splittings<Rational>(v.word(), u.intervals());
}

namespace {

// F-basis element: nullopt is F of the empty zigzag (the unit).
using FBasis = std::optional<BinaryWord>;
using Tensor = std::vector<FBasis>;

std::size_t box_count(const FBasis& f) { return f ? f->size() + 1 : 0; }

// Delta F_w = sum over cut points k of F_{first k boxes} (x) F_{remaining boxes};
// the symbol at the cut is dropped.
std::vector<std::pair<FBasis, FBasis>> coproduct(const FBasis& f) {
    std::vector<std::pair<FBasis, FBasis>> out;
    if (!f) {
        out.emplace_back(std::nullopt, std::nullopt);
        return out;
    }
    const BinaryWord& w = *f;
    const std::size_t n = w.size() + 1;
    for (std::size_t k = 0; k <= n; ++k) {
        FBasis left = k == 0 ? FBasis{} : FBasis{w.substr(0, k - 1)};
        FBasis right = k == n ? FBasis{} : FBasis{w.substr(k, n - k - 1)};
        out.emplace_back(left, right);
    }
    return out;
}

std::vector<Tensor> iterated_coproduct(const FBasis& f, std::size_t factors) {
    std::vector<Tensor> terms{Tensor{f}};
    for (std::size_t step = 1; step < factors; ++step) {
        std::vector<Tensor> next;
        for (const auto& term : terms) {
            for (const auto& [left, right] : coproduct(term.back())) {
                Tensor t(term.begin(), term.end() - 1);
                t.push_back(left);
                t.push_back(right);
                next.push_back(std::move(t));
            }
        }
        terms = std::move(next);
    }
    return terms;
}

// psi_+ is 1 on rows, psi_- is 1 on columns; both are 1 on the unit.
Rational psi(Sign orientation, const FBasis& f) {
    if (!f) return 1;
    for (std::size_t i = 0; i < f->size(); ++i) {
        if ((*f)[i] != orientation) return 0;
    }
    return 1;
}

}  // namespace

Rational eval_F_coproduct(const Vertex& v, const IntervalTuple& u) {
    if (v.is_root()) return 1;
    const auto& ivs = u.intervals();
    if (ivs.empty()) return 0;
    Rational total = 0;
    for (const auto& term : iterated_coproduct(FBasis{v.word()}, ivs.size())) {
        Rational value = 1;
        for (std::size_t i = 0; i < ivs.size() && value != 0; ++i) {
            value *= psi(ivs[i].orientation, term[i]) * pow(ivs[i].length, static_cast<unsigned>(box_count(term[i])));
        }
        total += value;
    }
    return total;
}

Template template_of_intervals(const std::vector<Sign>& orientations) {
    if (orientations.empty()) throw PreconditionError("no intervals");
    std::vector<Cluster> clusters;
    for (std::size_t i = 0; i < orientations.size(); ++i) {
        if (i && orientations[i] == orientations[i - 1]) clusters.push_back({opposite(orientations[i]), 1});
        clusters.push_back({orientations[i], Cluster::kInfinite});
    }
    return Template(std::move(clusters));
}

Template template_of_paintbox(const Paintbox& w) {
    std::vector<Sign> orientations;
    for (const auto& iv : w.intervals().intervals()) orientations.push_back(iv.orientation);
    return template_of_intervals(orientations);
}

Rational eval_F_maxblock(const BinaryWord& w, const IntervalTuple& u) {
    const auto& ivs = u.intervals();
    std::vector<Sign> orientations;
    for (const auto& iv : ivs) orientations.push_back(iv.orientation);
    const Template tu = template_of_intervals(orientations);
    const auto blocks = w.blocks();
    if (!member(tu, w) || blocks.size() != tu.size())
        throw PreconditionError("eval_F_maxblock: " + w.str() + " is not a maximal-block word of t_u");

    const std::size_t m = ivs.size();
    // Block of each interval: separators occupy exactly one block between equal neighbours.
    std::vector<std::size_t> block_len(m);
    for (std::size_t i = 0, b = 0; i < m; ++i) {
        if (i && orientations[i] == orientations[i - 1]) ++b;
        block_len[i] = blocks[b++].length;
    }

    Rational value = 1;
    for (std::size_t i = 0; i < m; ++i) {
        // Missing outer neighbours count as equally oriented.
        bool left_same = i == 0 || orientations[i - 1] == orientations[i];
        bool right_same = i + 1 == m || orientations[i + 1] == orientations[i];
        std::size_t exponent = block_len[i];
        if (left_same && right_same) {
            exponent += 1;
        } else if (!left_same && !right_same) {
            exponent -= 1;
        }
        value *= pow(ivs[i].length, static_cast<unsigned>(exponent));
    }
    // Sum over rho in {0,1}^S of prod u_{i+rho(i)} factorises into prod (u_i + u_{i+1}).
    for (std::size_t i = 0; i + 1 < m; ++i) {
        if (orientations[i] != orientations[i + 1]) value *= ivs[i].length + ivs[i + 1].length;
    }
    return value;
}

Rational phi_w(const Vertex& v, const Paintbox& w) { return eval_F(v, w.intervals()); }

}  // namespace zigzag
