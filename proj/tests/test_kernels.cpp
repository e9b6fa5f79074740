#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "zigzag/kernels.hpp"
#include "zigzag/verify.hpp"

using namespace zigzag;

TEST_CASE("level vertices") {
    CHECK(level_vertices(0) == std::vector<Vertex>{Vertex::root()});
    CHECK(level_vertices(1) == std::vector<Vertex>{Vertex(BinaryWord())});
    CHECK(level_vertices(5).size() == 16);
}

TEST_CASE("parallel scans agree with the serial reference") {
    const auto paintbox = Paintbox::parse("+1/5,-1/3,-1/6,+3/10");
    for (std::size_t n = 0; n <= 9; ++n) {
        CHECK(phi_w_level(paintbox, n, Exec::Parallel) == phi_w_level(paintbox, n, Exec::Serial));
        CHECK(harmonic_defects(paintbox, n, Exec::Parallel).empty());
        CHECK(harmonic_defects(paintbox, n, Exec::Serial).empty());
    }
    for (const auto& model : example_models()) {
        for (std::size_t n = 0; n <= 9; ++n) {
            CHECK(classify_level(model.templ(), n, Exec::Parallel) == classify_level(model.templ(), n, Exec::Serial));
            CHECK(phi_tw_level(model, n, Exec::Parallel) == phi_tw_level(model, n, Exec::Serial));
            CHECK(harmonic_defects(model, n, Exec::Parallel) == harmonic_defects(model, n, Exec::Serial));
        }
    }
}

TEST_CASE("region classification") {
    const auto regions = classify_level(Template::parse("+* -1 +1 -*"), 3, Exec::Parallel);
    // "++", "+-", "-+", "--"
    CHECK(regions == std::vector<Region>{Region::Infinite, Region::Infinite, Region::Finite, Region::Infinite});
    CHECK(classify_level(Template::parse("+* -1 +1 -*"), 0, Exec::Serial) == std::vector<Region>{Region::Infinite});
}
