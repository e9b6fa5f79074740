#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <functional>
#include <random>

#include "zigzag/graph.hpp"
#include "zigzag/paintbox.hpp"
#include "zigzag/templates.hpp"

using namespace zigzag;

namespace {

std::vector<std::string> strs(const std::vector<BinaryWord>& ws) {
    std::vector<std::string> out;
    for (const auto& w : ws) out.push_back(w.str());
    return out;
}

std::vector<std::string> strs(const std::vector<Template>& ts) {
    std::vector<std::string> out;
    for (const auto& t : ts) out.push_back(t.str());
    return out;
}

// Tries every assignment of block lengths (bounded by the word length) to the clusters.
bool member_brute(const Template& t, const BinaryWord& w) {
    std::function<bool(std::size_t, std::size_t)> fit = [&](std::size_t cluster, std::size_t pos) {
        if (pos == w.size()) return true;
        if (cluster == t.size()) return false;
        const std::size_t cap = t[cluster].infinite() ? w.size() : t[cluster].multiplicity;
        for (std::size_t len = 0; len <= cap && pos + len <= w.size(); ++len) {
            if (len > 0 && w[pos + len - 1] != t[cluster].sign) break;
            if (fit(cluster + 1, pos + len)) return true;
        }
        return false;
    };
    return fit(0, 0);
}

Template random_template(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> count(1, 6), mult(0, 3);
    for (;;) {
        std::vector<Cluster> cs;
        Sign s = rng() & 1u ? Sign::Minus : Sign::Plus;
        const int k = count(rng);
        bool has_inf = false;
        for (int i = 0; i < k; ++i) {
            const int m = mult(rng);
            cs.push_back({s, m == 0 ? Cluster::kInfinite : static_cast<std::uint32_t>(m)});
            has_inf = has_inf || m == 0;
            s = opposite(s);
        }
        if (has_inf) return Template(std::move(cs));
    }
}

std::vector<BinaryWord> words_up_to_length(std::size_t max_len) {
    std::vector<BinaryWord> out;
    for (std::size_t n = 0; n <= max_len; ++n) {
        for (const auto& w : enumerate_level(n)) out.push_back(w);
    }
    return out;
}

const char* const kFiniteFig = "+* -* +* -1 +* -1 +* -* +1 -*";
const char* const kSemifiniteFig = "-1 +* -* +1 -1 +* -2 +* -1 +1 -2 +* -* +1 -*";

}  // namespace

TEST_CASE("template grammar") {
    CHECK(Template::parse("+* -1 +1 -*").str() == "+* -1 +1 -*");
    CHECK(Template::parse("  +*  ").size() == 1);
    CHECK_THROWS_AS(Template::parse("+1 -1"), ParseError);
    CHECK_THROWS_AS(Template::parse("+* +1"), ParseError);
    CHECK_THROWS_AS(Template::parse("+* -0"), ParseError);
    CHECK_THROWS_AS(Template::parse("+* x1"), ParseError);
    CHECK_THROWS_AS(Template::parse(""), ParseError);
    CHECK(Template::parse(kSemifiniteFig).str() == kSemifiniteFig);
}

TEST_CASE("finite and semifinite templates") {
    CHECK(is_finite_template(Template::parse(kFiniteFig)));
    CHECK_FALSE(is_finite_template(Template::parse(kSemifiniteFig)));
    CHECK(is_finite_template(Template::parse("+*")));
    CHECK_FALSE(is_finite_template(Template::parse("+* -1")));  // outermost
    CHECK_FALSE(is_finite_template(Template::parse("+* -2 +*")));
    CHECK_FALSE(is_finite_template(Template::parse("+* -1 +1 -*")));
}

TEST_CASE("membership against brute force") {
    CHECK(member(Template::parse("+1 -* +* -1 +*"), BinaryWord::parse("+--+")));
    CHECK(member(Template::parse("+* -1 +1 -*"), BinaryWord::parse("+-+-")));
    CHECK_FALSE(member(Template::parse("+* -1 +1 -*"), BinaryWord::parse("+--+-")));
    CHECK(member(Template::parse("-*"), Vertex::root()));
    std::mt19937_64 rng(11);
    const auto words = words_up_to_length(9);
    for (int k = 0; k < 40; ++k) {
        const auto t = random_template(rng);
        CHECK(member(t, BinaryWord()));
        for (const auto& w : words) CHECK(member(t, w) == member_brute(t, w));
    }
}

TEST_CASE("coideals are saturated") {
    std::mt19937_64 rng(5);
    const auto words = words_up_to_length(9);
    for (int k = 0; k < 30; ++k) {
        const auto t = random_template(rng);
        const bool semifinite = !is_finite_template(t);
        for (const auto& w : words) {
            if (!member(t, w)) continue;
            for (const auto& d : lower_covers(w)) CHECK(member(t, d));
            const auto up = upper_covers(w);
            CHECK(std::any_of(up.begin(), up.end(), [&](const BinaryWord& u) { return member(t, u); }));
            if (!semifinite || !member_J(t, w)) continue;
            for (const auto& d : lower_covers(w)) CHECK(member_J(t, d));
            CHECK(std::any_of(up.begin(), up.end(), [&](const BinaryWord& u) { return member_J(t, u); }));
        }
        if (!semifinite) continue;
        for (const auto& w : words) {
            if (member_J(t, w)) CHECK(member(t, w));
        }
    }
}

TEST_CASE("flange and sections") {
    const auto fig = flange_and_sections(Template::parse(kSemifiniteFig));
    CHECK(strs(fig.flange) == std::vector<std::string>{"-", "+-", "--", "-+--", ""});
    CHECK(strs(fig.sections) == std::vector<std::string>{"+* -*", "+*", "+*", "+* -* +1 -*"});

    const auto ex = flange_and_sections(Template::parse("+* -1 +1 -*"));
    CHECK(strs(ex.flange) == std::vector<std::string>{"", "-+", ""});
    CHECK(strs(ex.sections) == std::vector<std::string>{"+*", "-*"});

    const auto eq = flange_and_sections(Template::parse("+1 -* +* -1 +*"));
    CHECK(strs(eq.flange) == std::vector<std::string>{"+", ""});
    CHECK(strs(eq.sections) == std::vector<std::string>{"-* +* -1 +*"});

    const auto fin = flange_and_sections(Template::parse(kFiniteFig));
    CHECK(strs(fin.flange) == std::vector<std::string>{"", ""});
    CHECK(fin.sections.size() == 1);

    std::mt19937_64 rng(3);
    for (int k = 0; k < 200; ++k) {
        const auto t = random_template(rng);
        const auto fd = flange_and_sections(t);
        REQUIRE(fd.flange.size() == fd.sections.size() + 1);
        for (const auto& s : fd.sections) CHECK(is_finite_template(s));
        // Interleaving rebuilds the template.
        std::vector<Cluster> rebuilt;
        auto push_word = [&](const BinaryWord& w) {
            for (const auto& b : w.blocks()) rebuilt.push_back({b.sign, static_cast<std::uint32_t>(b.length)});
        };
        for (std::size_t i = 0; i < fd.sections.size(); ++i) {
            push_word(fd.flange[i]);
            for (const auto& c : fd.sections[i].clusters()) rebuilt.push_back(c);
        }
        push_word(fd.flange.back());
        CHECK(Template(rebuilt) == t);
    }
}

TEST_CASE("reduced templates and J(t)") {
    CHECK(strs(reduced_templates(Template::parse("+1 -* +* -1 +*"))) == std::vector<std::string>{"-* +* -1 +*"});
    CHECK(strs(reduced_templates(Template::parse("-1 +* -* +1 -* +* -* +1"))) ==
          std::vector<std::string>{"+* -* +1 -* +* -* +1", "-1 +* -* +1 -* +* -*"});
    CHECK(strs(reduced_templates(Template::parse("+* -1 +1 -*"))) == std::vector<std::string>{"+* -*"});
    CHECK(strs(reduced_templates(Template::parse("+* -2 +*"))) == std::vector<std::string>{"+* -1 +*"});
    CHECK(strs(reduced_templates(Template::parse("+2 -* +1"))) == std::vector<std::string>{"+1 -* +1", "+2 -*"});

    const Template ex = Template::parse("+* -1 +1 -*");
    CHECK(member_J(ex, BinaryWord::parse("++--")));
    CHECK_FALSE(member_J(ex, BinaryWord::parse("-+")));
    CHECK(member_J(ex, BinaryWord()));
    CHECK(member_J(ex, Vertex::root()));
    CHECK_FALSE(member_J(Template::parse("+* -1 +*"), Vertex::root()));  // finite template: J is empty
}

TEST_CASE("injection examples") {
    CHECK(strs(inject(Template::parse("+* -1 +1 -*"), BinaryWord::parse("++-+--"))) ==
          std::vector<std::string>{"++", "--"});
    CHECK(strs(inject(Template::parse("+1 -* +* -1 +*"), BinaryWord::parse("+--+"))) ==
          std::vector<std::string>{"--+"});
    CHECK(strs(inject(Template::parse("-1 +* -* +1 -* +* -* +1"), BinaryWord::parse("-+-+-+-+"))) ==
          std::vector<std::string>{"+-+-+-"});
    CHECK(strs(inject(Template::parse("+* -1 +1 -*"), BinaryWord::parse("-+"))) == std::vector<std::string>{"", ""});
    CHECK_THROWS_AS(inject(Template::parse("+* -1 +1 -*"), BinaryWord::parse("++--")), PreconditionError);
    CHECK_THROWS_AS(inject(Template::parse("+* -1 +1 -*"), BinaryWord::parse("--++")), PreconditionError);
}

TEST_CASE("decompositions are unique exactly off J(t)") {
    for (const char* text : {"+* -1 +1 -*", "+1 -* +* -1 +*", "-1 +* -* +1 -* +* -* +1", kSemifiniteFig, "+* -2 +*"}) {
        const Template t = Template::parse(text);
        const auto fd = flange_and_sections(t);
        for (const auto& w : words_up_to_length(10)) {
            if (!member(t, w) || member_J(t, w)) continue;
            CHECK(count_decompositions(fd, w) == 1);
            CHECK(assemble(fd, inject(t, w)) == w);
        }
    }
}

TEST_CASE("single generator word") {
    const auto [at, flag] = single_generator_word(Template::parse("+* -* +2 -* +* -1 +* -3"));
    CHECK(at.str() == "-++-+----");
    CHECK(flag);
    const auto [empty, flag2] = single_generator_word(Template::parse("+*"));
    CHECK(empty.str() == "");
    CHECK(flag2);
    CHECK_FALSE(single_generator_word(Template::parse("-1 +* -* +1 -* +* -* +1")).second);
}

TEST_CASE("maximal-block words form a Pascal graph") {
    // m infinite clusters, s separators: words with all blocks present have
    // C(len - s - 1, m - 1) members at length len.
    for (const auto& orientations : std::vector<std::vector<Sign>>{{Sign::Plus, Sign::Minus, Sign::Plus},
                                                                   {Sign::Plus, Sign::Plus, Sign::Minus},
                                                                   {Sign::Minus, Sign::Minus, Sign::Minus, Sign::Plus}}) {
        const Template tu = template_of_intervals(orientations);
        const std::size_t m = orientations.size();
        const std::size_t s = tu.size() - m;
        for (std::size_t len = 0; len <= 11; ++len) {
            std::size_t count = 0;
            for (const auto& w : enumerate_level(len)) count += member(tu, w) && w.block_count() == tu.size();
            std::size_t expected = 0;
            if (len >= s + m) {
                // binomial(len - s - 1, m - 1)
                std::size_t top = len - s - 1, k = m - 1;
                std::uint64_t b = 1;
                for (std::size_t i = 1; i <= k; ++i) b = b * (top - k + i) / i;
                expected = b;
            }
            CHECK(count == expected);
        }
    }
}
