#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "zigzag/graph.hpp"
#include "zigzag/paintbox.hpp"

using namespace zigzag;

namespace {

Vertex V(const char* w) { return Vertex(BinaryWord::parse(w)); }

IntervalTuple random_tuple(std::mt19937_64& rng, std::size_t max_intervals) {
    std::uniform_int_distribution<std::size_t> count(1, max_intervals);
    std::uniform_int_distribution<int> num(1, 9), den(1, 9);
    std::vector<Interval> ivs(count(rng));
    for (auto& iv : ivs) iv = {rng() & 1u ? Sign::Minus : Sign::Plus, Rational(num(rng), den(rng))};
    return IntervalTuple(std::move(ivs));
}

Paintbox random_paintbox(std::mt19937_64& rng) {
    const auto u = random_tuple(rng, 4);
    std::vector<Interval> ivs = u.intervals();
    const Rational total = u.total_length();
    for (auto& iv : ivs) iv.length /= total;
    return Paintbox(IntervalTuple(std::move(ivs)));
}

}  // namespace

TEST_CASE("paintbox parsing") {
    const auto p = Paintbox::parse("+1/3,-1/6,+1/2");
    CHECK(p.str() == "+1/3,-1/6,+1/2");
    CHECK(p.intervals().size() == 3);
    CHECK_THROWS_AS(Paintbox::parse("+1/3,-1/3"), ParseError);
    CHECK_THROWS_AS(Paintbox::parse("+1/3,-0,+2/3"), ParseError);
    CHECK_THROWS_AS(Paintbox::parse("*1"), ParseError);
    CHECK_THROWS_AS(IntervalTuple::parse("+-1/2"), ParseError);
    CHECK(IntervalTuple::parse("+1/3,-5").total_length() == Rational(16, 3));
}

TEST_CASE("small evaluations worked by hand") {
    const Rational a(1, 3), b(2, 5);
    const IntervalTuple u({{Sign::Plus, a}, {Sign::Minus, b}});
    CHECK(eval_F(Vertex::root(), u) == 1);
    CHECK(eval_F(V(""), u) == a + b);
    CHECK(eval_F(V("+"), u) == a * a + a * b);
    CHECK(eval_F(V("-"), u) == a * b + b * b);
    CHECK(eval_F(V("+"), IntervalTuple({{Sign::Minus, a}})) == 0);
    CHECK(eval_F(V("++"), IntervalTuple({{Sign::Plus, a}})) == a * a * a);
    // Two touching positive components are not one merged component.
    CHECK(phi_w(V("-"), Paintbox::parse("+1/2,+1/2")) == Rational(1, 4));
    CHECK(phi_w(V("-"), Paintbox::parse("+1")) == 0);
}

TEST_CASE("splitting sum equals the coproduct construction") {
    std::mt19937_64 rng(2024);
    for (int k = 0; k < 12; ++k) {
        const auto u = random_tuple(rng, 4);
        for (std::size_t len = 0; len <= 6; ++len) {
            for (const auto& w : enumerate_level(len)) CHECK(eval_F(Vertex(w), u) == eval_F_coproduct(Vertex(w), u));
        }
    }
}

TEST_CASE("homogeneity") {
    std::mt19937_64 rng(8);
    const Rational c(3, 7);
    for (int k = 0; k < 5; ++k) {
        const auto u = random_tuple(rng, 3);
        std::vector<Interval> scaled = u.intervals();
        for (auto& iv : scaled) iv.length *= c;
        for (const auto& w : enumerate_level(5)) {
            CHECK(eval_F(Vertex(w), IntervalTuple(scaled)) == pow(c, 6) * eval_F(Vertex(w), u));
        }
    }
}

TEST_CASE("finite harmonic functions: normalisation, harmonicity, support") {
    std::mt19937_64 rng(99);
    for (int k = 0; k < 6; ++k) {
        const auto w = random_paintbox(rng);
        const Template tw = template_of_paintbox(w);
        CHECK(phi_w(Vertex::root(), w) == 1);
        CHECK(phi_w(V(""), w) == 1);
        for (std::size_t len = 0; len <= 7; ++len) {
            for (const auto& x : enumerate_level(len)) {
                Rational sum = 0;
                for (const auto& mu : upper_covers(x)) sum += phi_w(Vertex(mu), w);
                CHECK(phi_w(Vertex(x), w) == sum);
                CHECK((phi_w(Vertex(x), w) > 0) == member(tw, x));
            }
        }
    }
}

TEST_CASE("template of a paintbox") {
    CHECK(template_of_paintbox(Paintbox::parse("+1/3,+2/3")).str() == "+* -1 +*");
    CHECK(template_of_paintbox(Paintbox::parse("+1/3,-1/6,+1/2")).str() == "+* -* +*");
    CHECK(template_of_paintbox(Paintbox::parse("-1/4,-1/4,+1/4,+1/4")).str() == "-* +1 -* +* -1 +*");
    CHECK(is_finite_template(template_of_paintbox(Paintbox::parse("-1/4,-1/4,+1/4,+1/4"))));
}

TEST_CASE("maximal-block closed form") {
    std::mt19937_64 rng(31);
    for (int k = 0; k < 25; ++k) {
        const auto u = random_tuple(rng, 4);
        std::vector<Sign> orientations;
        for (const auto& iv : u.intervals()) orientations.push_back(iv.orientation);
        const Template tu = template_of_intervals(orientations);
        std::size_t tested = 0;
        for (std::size_t len = 0; len <= 10; ++len) {
            for (const auto& w : enumerate_level(len)) {
                if (!member(tu, w)) continue;
                if (w.block_count() != tu.size()) {
                    CHECK_THROWS_AS(eval_F_maxblock(w, u), PreconditionError);
                    continue;
                }
                CHECK(eval_F_maxblock(w, u) == eval_F(Vertex(w), u));
                ++tested;
            }
        }
        CHECK(tested > 0);
    }
    // One interval: a row of n boxes gets u^n.
    const IntervalTuple single({{Sign::Plus, Rational(2, 3)}});
    CHECK(eval_F_maxblock(BinaryWord::parse("+++"), single) == pow(Rational(2, 3), 4));
}
