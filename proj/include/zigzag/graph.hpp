#pragma once

#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "zigzag/arith.hpp"
#include "zigzag/word.hpp"

namespace zigzag {

// Words obtained by inserting one symbol; sorted, deduplicated.
std::vector<BinaryWord> upper_covers(const BinaryWord& w);
// Words obtained by deleting one symbol; sorted, deduplicated. Empty for the empty word.
std::vector<BinaryWord> lower_covers(const BinaryWord& w);

// Vertex-level covers: the root is covered by the empty word and covers nothing.
std::vector<Vertex> upper_covers(const Vertex& v);
std::vector<Vertex> lower_covers(const Vertex& v);

// True iff `a` is a subsequence of `b`.
bool is_subword(const BinaryWord& a, const BinaryWord& b);
// Graph order a <= b (the root lies below everything).
bool is_below(const Vertex& a, const Vertex& b);

// Number of saturated chains from a up to b.
BigInt dim(const Vertex& a, const Vertex& b);

inline constexpr std::size_t kDefaultLevelCap = 20;

// All 2^n words of length n in lexicographic order ('+' < '-').
std::vector<BinaryWord> enumerate_level(std::size_t n, std::size_t cap = kDefaultLevelCap);

// Vertex filter restricting an expansion to a subgraph closed downwards (a coideal).
using VertexFilter = std::function<bool(const Vertex&)>;

// Nonnegative combination of vertices sharing one level.
class FormalCombination {
public:
    FormalCombination() = default;
    explicit FormalCombination(std::size_t level) : level_(level) {}

    static FormalCombination single(const Vertex& v, Rational coeff = 1);

    std::size_t level() const { return level_; }
    const std::map<Vertex, Rational>& terms() const { return terms_; }
    Rational coefficient(const Vertex& v) const;

    // Throws on a level mismatch or a negative coefficient.
    void add(const Vertex& v, const Rational& coeff);
    FormalCombination scaled(const Rational& factor) const;

private:
    std::size_t level_ = 0;
    std::map<Vertex, Rational> terms_;
};

// Iterated harmonicity relation: coefficient dim(a, mu) at every level-n vertex mu.
// With a filter only vertices of the (downward closed) subgraph are kept.
FormalCombination expand(const Vertex& a, std::size_t n, const VertexFilter& keep = {});
FormalCombination expand(const FormalCombination& c, std::size_t n, const VertexFilter& keep = {});

// Certificate for a >=_K c: both sides expanded to `level` compared coefficientwise.
// A true answer proves the order relation; a false answer proves nothing.
bool dominates_K(const Vertex& a, const FormalCombination& c, std::optional<std::size_t> level = {},
                 const VertexFilter& keep = {});

// Searches levels max(level(a), level(c)) .. level_cap for a dominance certificate.
std::optional<std::size_t> find_dominance_level(const Vertex& a, const FormalCombination& c,
                                                std::size_t level_cap, const VertexFilter& keep = {});

}  // namespace zigzag
