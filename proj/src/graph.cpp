#include "zigzag/graph.hpp"

#include <algorithm>
#include <unordered_map>

namespace zigzag {

std::vector<BinaryWord> upper_covers(const BinaryWord& w) {
    std::vector<BinaryWord> out;
    out.reserve(2 * (w.size() + 1));
    for (std::size_t pos = 0; pos <= w.size(); ++pos) {
        out.push_back(w.inserted(pos, Sign::Plus));
        out.push_back(w.inserted(pos, Sign::Minus));
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<BinaryWord> lower_covers(const BinaryWord& w) {
    std::vector<BinaryWord> out;
    out.reserve(w.size());
    for (std::size_t pos = 0; pos < w.size(); ++pos) out.push_back(w.erased(pos));
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Vertex> upper_covers(const Vertex& v) {
    if (v.is_root()) return {Vertex(BinaryWord())};
    auto words = upper_covers(v.word());
    return {words.begin(), words.end()};
}

std::vector<Vertex> lower_covers(const Vertex& v) {
    if (v.is_root()) return {};
    if (v.word().empty()) return {Vertex::root()};
    auto words = lower_covers(v.word());
    return {words.begin(), words.end()};
}

bool is_subword(const BinaryWord& a, const BinaryWord& b) {
    if (a.size() > b.size()) return false;
    std::size_t i = 0;
    for (std::size_t j = 0; j < b.size() && i < a.size(); ++j) {
        if (a[i] == b[j]) ++i;
    }
    return i == a.size();
}

bool is_below(const Vertex& a, const Vertex& b) {
    if (a.is_root()) return true;
    if (b.is_root()) return false;
    return is_subword(a.word(), b.word());
}

BigInt dim(const Vertex& a, const Vertex& b) {
    if (b.is_root()) return a.is_root() ? 1 : 0;
    // The root has the single upper cover "", so chains from it are chains from "".
    const BinaryWord source = a.is_root() ? BinaryWord() : a.word();
    const BinaryWord& target = b.word();
    if (!is_subword(source, target)) return 0;

    std::unordered_map<BinaryWord, BigInt> memo;
    std::function<BigInt(const BinaryWord&)> count = [&](const BinaryWord& w) -> BigInt {
        if (w.size() == source.size()) return w == source ? 1 : 0;
        if (auto it = memo.find(w); it != memo.end()) return it->second;
        BigInt total = 0;
        for (const auto& c : lower_covers(w)) {
            if (is_subword(source, c)) total += count(c);
        }
        memo.emplace(w, total);
        return total;
    };
    return count(target);
}

std::vector<BinaryWord> enumerate_level(std::size_t n, std::size_t cap) {
    if (n > cap) throw PreconditionError("level " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
    if (n >= 63) throw PreconditionError("level too large to enumerate");
    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<BinaryWord> out;
    out.reserve(count);
    for (std::uint64_t k = 0; k < count; ++k) {
        // Most significant bit of k is the first symbol, so k-order is lexicographic.
        std::uint64_t bits = 0;
        for (std::size_t i = 0; i < n; ++i) {
            if ((k >> (n - 1 - i)) & 1u) bits |= std::uint64_t{1} << i;
        }
        out.emplace_back(bits, n);
    }
    return out;
}

FormalCombination FormalCombination::single(const Vertex& v, Rational coeff) {
    FormalCombination c(v.level());
    c.add(v, coeff);
    return c;
}

Rational FormalCombination::coefficient(const Vertex& v) const {
    auto it = terms_.find(v);
    return it == terms_.end() ? Rational(0) : it->second;
}

void FormalCombination::add(const Vertex& v, const Rational& coeff) {
    if (v.level() != level_) throw PreconditionError("formal combination mixes levels");
    if (coeff < 0) throw PreconditionError("formal combination coefficients must be nonnegative");
    if (coeff == 0) return;
    terms_[v] += coeff;
}

FormalCombination FormalCombination::scaled(const Rational& factor) const {
    if (factor < 0) throw PreconditionError("negative scaling of a formal combination");
    FormalCombination out(level_);
    for (const auto& [v, q] : terms_) out.add(v, q * factor);
    return out;
}

FormalCombination expand(const Vertex& a, std::size_t n, const VertexFilter& keep) {
    if (n < a.level()) throw PreconditionError("cannot expand a vertex to a lower level");
    std::map<Vertex, BigInt> current{{a, BigInt(1)}};
    for (std::size_t level = a.level(); level < n; ++level) {
        std::map<Vertex, BigInt> next;
        for (const auto& [v, count] : current) {
            for (const auto& up : upper_covers(v)) {
                if (keep && !keep(up)) continue;
                next[up] += count;
            }
        }
        current = std::move(next);
    }
    FormalCombination out(n);
    for (const auto& [v, count] : current) out.add(v, Rational(count));
    return out;
}

FormalCombination expand(const FormalCombination& c, std::size_t n, const VertexFilter& keep) {
    if (n < c.level()) throw PreconditionError("cannot expand a combination to a lower level");
    FormalCombination out(n);
    for (const auto& [v, q] : c.terms()) {
        const auto step = expand(v, n, keep);
        for (const auto& [mu, coeff] : step.terms()) out.add(mu, q * coeff);
    }
    return out;
}

bool dominates_K(const Vertex& a, const FormalCombination& c, std::optional<std::size_t> level,
                 const VertexFilter& keep) {
    std::size_t n = level.value_or(c.level());
    if (n < a.level() || n < c.level())
        throw PreconditionError("dominance level lies below one of the compared elements");
    auto lhs = expand(a, n, keep);
    auto rhs = expand(c, n, keep);
    for (const auto& [v, q] : rhs.terms()) {
        if (lhs.coefficient(v) < q) return false;
    }
    return true;
}

std::optional<std::size_t> find_dominance_level(const Vertex& a, const FormalCombination& c,
                                                std::size_t level_cap, const VertexFilter& keep) {
    for (std::size_t n = std::max(a.level(), c.level()); n <= level_cap; ++n) {
        if (dominates_K(a, c, n, keep)) return n;
    }
    return std::nullopt;
}

}  // namespace zigzag
