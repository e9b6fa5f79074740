#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <random>
#include <set>

#include "zigzag/graph.hpp"
#include "zigzag/templates.hpp"

using namespace zigzag;

namespace {

std::vector<std::string> strs(const std::vector<BinaryWord>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(w.str());
    return out;
}

// Naive chain count: recurse over every single deletion position, no memo, no dedup of positions.
// Deletions at equal positions of a block give the same word and must be counted once, so
// collect distinct results per step.
std::uint64_t chains(const BinaryWord& a, const BinaryWord& b) {
    if (b.size() < a.size()) return 0;
    if (b.size() == a.size()) return a == b ? 1 : 0;
    std::set<BinaryWord> seen;
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (seen.insert(b.erased(i)).second) total += chains(a, b.erased(i));
    }
    return total;
}

// Subsequence test by trying every deletion set.
bool subword_brute(const BinaryWord& a, const BinaryWord& b) {
    const std::size_t n = b.size();
    for (std::uint64_t keep = 0; keep < (std::uint64_t{1} << n); ++keep) {
        if (static_cast<std::size_t>(std::popcount(keep)) != a.size()) continue;
        BinaryWord s;
        for (std::size_t i = 0; i < n; ++i) {
            if ((keep >> i) & 1u) s.push_back(b[i]);
        }
        if (s == a) return true;
    }
    return false;
}

}  // namespace

TEST_CASE("covers of small words") {
    CHECK(strs(upper_covers(BinaryWord())) == std::vector<std::string>{"+", "-"});
    CHECK(strs(upper_covers(BinaryWord::parse("+"))) == std::vector<std::string>{"++", "+-", "-+"});
    const auto up = upper_covers(BinaryWord::parse("-+-+-+-"));
    CHECK(std::find(up.begin(), up.end(), BinaryWord::parse("-+-+-+-+")) != up.end());
    CHECK(strs(lower_covers(BinaryWord::parse("++"))) == std::vector<std::string>{"+"});
    CHECK(lower_covers(BinaryWord()).empty());
    CHECK(lower_covers(BinaryWord::parse("-++-++-+")).size() == 6);
    std::vector<BinaryWord> expected;
    for (const char* w : {"+-+-+-+", "-+-+-+-", "--+-+-+", "-++-+-+", "-+--+-+", "-+-++-+", "-+-+--+", "-+-+-++"})
        expected.push_back(BinaryWord::parse(w));
    std::sort(expected.begin(), expected.end());
    CHECK(lower_covers(BinaryWord::parse("-+-+-+-+")) == expected);
    CHECK(upper_covers(Vertex::root()) == std::vector<Vertex>{Vertex(BinaryWord())});
    CHECK(lower_covers(Vertex(BinaryWord())) == std::vector<Vertex>{Vertex::root()});
    CHECK(lower_covers(Vertex::root()).empty());
}

TEST_CASE("cover duality and cover counts") {
    for (std::size_t len = 0; len <= 8; ++len) {
        for (const auto& a : enumerate_level(len)) {
            const auto up = upper_covers(a);
            CHECK(up.size() == a.size() + 2);
            CHECK(lower_covers(a).size() == a.block_count());
            for (const auto& b : up) {
                const auto down = lower_covers(b);
                CHECK(std::find(down.begin(), down.end(), a) != down.end());
            }
            for (const auto& c : lower_covers(a)) {
                const auto cu = upper_covers(c);
                CHECK(std::find(cu.begin(), cu.end(), a) != cu.end());
            }
        }
    }
}

TEST_CASE("subword order") {
    CHECK(is_subword(BinaryWord::parse("+--"), BinaryWord::parse("+-+--")));
    CHECK_FALSE(is_subword(BinaryWord::parse("-+"), BinaryWord::parse("+-")));
    for (std::size_t la = 0; la <= 4; ++la) {
        for (const auto& a : enumerate_level(la)) {
            for (const auto& b : enumerate_level(6)) CHECK(is_subword(a, b) == subword_brute(a, b));
        }
    }
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> len(0, 10);
    auto random_word = [&] {
        BinaryWord w;
        const auto n = len(rng);
        for (std::size_t i = 0; i < n; ++i) w.push_back(rng() & 1u ? Sign::Minus : Sign::Plus);
        return w;
    };
    for (int k = 0; k < 2000; ++k) {
        const auto a = random_word(), b = random_word(), c = random_word();
        CHECK(is_subword(a, a));
        if (is_subword(a, b) && is_subword(b, a)) CHECK(a == b);
        if (is_subword(a, b) && is_subword(b, c)) CHECK(is_subword(a, c));
    }
    CHECK(is_below(Vertex::root(), Vertex(BinaryWord::parse("+-"))));
    CHECK_FALSE(is_below(Vertex(BinaryWord()), Vertex::root()));
}

TEST_CASE("dim against naive chain counts") {
    CHECK(dim(Vertex::root(), Vertex(BinaryWord::parse("+-"))) == 2);
    CHECK(dim(Vertex(BinaryWord::parse("++--")), Vertex(BinaryWord::parse("++-+--"))) == 4);
    CHECK(dim(Vertex(BinaryWord::parse("+-")), Vertex(BinaryWord::parse("+-"))) == 1);
    CHECK(dim(Vertex(BinaryWord::parse("-+")), Vertex(BinaryWord::parse("++"))) == 0);
    for (std::size_t lb = 0; lb <= 6; ++lb) {
        for (const auto& b : enumerate_level(lb)) {
            CHECK(dim(Vertex::root(), Vertex(b)) == chains(BinaryWord(), b));
            for (std::size_t la = 0; la <= lb; ++la) {
                for (const auto& a : enumerate_level(la)) {
                    const BigInt d = dim(Vertex(a), Vertex(b));
                    CHECK(d == chains(a, b));
                    if (lb > la) {
                        BigInt sum = 0;
                        for (const auto& c : lower_covers(b)) {
                            if (is_subword(a, c)) sum += dim(Vertex(a), Vertex(c));
                        }
                        CHECK(d == sum);
                    }
                }
            }
        }
    }
    // Grows past 64 bits.
    const auto big = dim(Vertex::root(), Vertex(BinaryWord::parse("+-+-+-+-+-+-+-+-+-+-+-+-+-+")));
    CHECK(big > BigInt(std::numeric_limits<std::uint64_t>::max()));
}

TEST_CASE("expand") {
    const auto e = expand(Vertex(BinaryWord::parse("+")), 3);
    CHECK(e.level() == 3);
    CHECK(e.terms().size() == 3);
    for (const auto& w : {"++", "+-", "-+"}) CHECK(e.coefficient(Vertex(BinaryWord::parse(w))) == 1);
    const auto r = expand(Vertex::root(), 2);
    CHECK(r.terms().size() == 2);
    CHECK(expand(Vertex(BinaryWord::parse("++--")), 7).coefficient(Vertex(BinaryWord::parse("++-+--"))) == 4);
    CHECK_THROWS_AS(expand(Vertex(BinaryWord::parse("++")), 2), PreconditionError);
    for (std::size_t n = 1; n <= 7; ++n) {
        const auto level = expand(Vertex(BinaryWord::parse("+-")), 3 + n);
        Rational mass = 0;
        for (const auto& [v, c] : level.terms()) {
            CHECK(c == Rational(dim(Vertex(BinaryWord::parse("+-")), v)));
            mass += c;
        }
        Rational expected = 0;
        for (const auto& w : enumerate_level(2 + n)) expected += Rational(dim(Vertex(BinaryWord::parse("+-")), Vertex(w)));
        CHECK(mass == expected);
    }
}

TEST_CASE("dominance certificates") {
    const Vertex a(BinaryWord::parse("++--"));
    const auto c = FormalCombination::single(Vertex(BinaryWord::parse("+-+-")), 2);
    const Template t = Template::parse("+* -1 +1 -*");
    const VertexFilter keep = [&t](const Vertex& v) { return member(t, v); };
    CHECK_FALSE(dominates_K(a, c, {}, keep));
    CHECK(dominates_K(a, c, 7, keep));
    CHECK(find_dominance_level(a, c, 12, keep) == std::optional<std::size_t>(7));
    CHECK(dominates_K(a, FormalCombination::single(a)));
    CHECK_FALSE(dominates_K(Vertex(BinaryWord::parse("+")), FormalCombination::single(Vertex(BinaryWord::parse("++")), 4)));
    CHECK_FALSE(find_dominance_level(Vertex(BinaryWord::parse("+")),
                                     FormalCombination::single(Vertex(BinaryWord::parse("-+")), 2), 9));
    FormalCombination mixed(3);
    CHECK_THROWS_AS(mixed.add(Vertex(BinaryWord::parse("+++")), 1), PreconditionError);
    CHECK_THROWS_AS(mixed.add(Vertex(BinaryWord::parse("++")), -1), PreconditionError);
}

TEST_CASE("enumerate_level") {
    CHECK(strs(enumerate_level(0)) == std::vector<std::string>{""});
    CHECK(strs(enumerate_level(1)) == std::vector<std::string>{"+", "-"});
    CHECK(enumerate_level(3).size() == 8);
    CHECK_THROWS_AS(enumerate_level(21), PreconditionError);
}
