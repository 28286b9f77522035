#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "fpec/generate.hpp"
#include "fpec/qfo.hpp"
#include "fpec/verify.hpp"

using namespace fpec;

namespace {

void expect_valid(const PlaneMap& g) {
    QfoResult r = qfo_color(g);
    REQUIRE(r.coloring.max_color() <= 4);
    REQUIRE(check_quasi_facially_odd(g, r.coloring, r.c5_blocks).ok);
}

} // namespace

TEST_CASE("cycles of every residue class are colored") {
    for (int n = 2; n <= 30; ++n) {
        PlaneMap g = make_cycle(n);
        QfoResult r = qfo_color(g);
        REQUIRE(r.coloring.max_color() <= 4);
        REQUIRE(check_quasi_facially_odd(g, r.coloring, r.c5_blocks).ok);
        if (n == 5) {
            REQUIRE(r.c5_blocks.size() == 1);
            REQUIRE(r.c5_blocks[0] == std::vector<EdgeId>{0, 1, 2, 3, 4});
        } else {
            REQUIRE(r.c5_blocks.empty());
        }
    }
}

TEST_CASE("the 5-cycle uses four colors with one doubled color") {
    QfoResult r = qfo_color(make_cycle(5));
    std::set<Color> used(r.coloring.colors.begin(), r.coloring.colors.end());
    REQUIRE(used.size() == 4);
}

TEST_CASE("the 9-cycle stays within three colors and no exceptions") {
    QfoResult r = qfo_color(make_cycle(9));
    REQUIRE(r.c5_blocks.empty());
    REQUIRE(r.coloring.max_color() <= 3);
}

TEST_CASE("theta and wheels are colored without exceptions") {
    expect_valid(make_theta());
    for (int n = 3; n <= 8; ++n) {
        QfoResult r = qfo_color(make_wheel(n));
        REQUIRE(r.c5_blocks.empty());
        REQUIRE(check_quasi_facially_odd(make_wheel(n), r.coloring, r.c5_blocks).ok);
    }
}

TEST_CASE("two pentagons grant both blocks") {
    PlaneMap g = make_two_pentagons();
    QfoResult r = qfo_color(g);
    REQUIRE(r.c5_blocks.size() == 2);
    REQUIRE(check_quasi_facially_odd(g, r.coloring, r.c5_blocks).ok);
}

TEST_CASE("pentagon chains grant one block per link") {
    for (int n = 1; n <= 5; ++n) {
        PlaneMap g = make_c5_chain(n);
        QfoResult r = qfo_color(g);
        REQUIRE(static_cast<int>(r.c5_blocks.size()) == n);
        REQUIRE(check_quasi_facially_odd(g, r.coloring, r.c5_blocks).ok);
    }
}

TEST_CASE("random maps are colored with at most four colors") {
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        PlaneMap g = make_random(10 + static_cast<int>(seed * 3) % 41, seed + 1000);
        expect_valid(g);
    }
}

TEST_CASE("the search fallback alone gives facially proper colorings") {
    PlaneMap g = make_wheel(4);
    EdgeColoring col = facially_proper_four_color(g);
    REQUIRE(col.max_color() <= 4);
    REQUIRE(check_facially_proper(g, col).ok);
}

TEST_CASE("maps with bridges or several components are refused") {
    REQUIRE_THROWS_AS(qfo_color(parse_pmap("pmap 2 1\nv 0 : 0\nv 1 : 1\n")),
                      precondition_error);
    REQUIRE_THROWS_AS(qfo_color(parse_pmap("pmap 4 4\nv 0 : 0 3\nv 1 : 2 1\nv 2 : 4 7\nv 3 : 6 5\n")),
                      precondition_error);
}
