#include <catch2/catch_amalgamated.hpp>

#include "fpec/generate.hpp"
#include "fpec/oddcolor.hpp"
#include "fpec/verify.hpp"

#include "fixtures.hpp"

using namespace fpec;

namespace {

EdgeColoring colors_of(std::vector<Color> v) {
    EdgeColoring c(v.size());
    c.colors = std::move(v);
    return c;
}

} // namespace

TEST_CASE("facial properness checker") {
    PlaneMap c6 = make_cycle(6);
    REQUIRE(check_facially_proper(c6, colors_of({1, 2, 1, 2, 1, 2})).ok);
    REQUIRE_FALSE(check_facially_proper(c6, colors_of({1, 1, 2, 1, 2, 2})).ok);
    REQUIRE_FALSE(check_facially_proper(c6, colors_of({1, 2, 1, 2, 1, 0})).ok);
}

TEST_CASE("parity checker accepts odd-or-zero face counts only") {
    PlaneMap c6 = make_cycle(6);
    REQUIRE(check_fpe(c6, colors_of({1, 2, 1, 2, 1, 2})).ok);
    REQUIRE_FALSE(check_fpe(c6, colors_of({1, 3, 1, 2, 1, 2})).ok);

    PlaneMap theta = make_theta();
    REQUIRE(check_fpe(theta, colors_of({1, 2, 3})).ok);
}

TEST_CASE("vertex parity checker") {
    BundledMultigraph p2 = fixtures::path_multigraph(2);
    REQUIRE(check_odd(p2, colors_of({1, 2})).ok);
    REQUIRE_FALSE(check_odd(p2, colors_of({1, 1})).ok);

    BundledMultigraph star;
    star.vertex_count = 4;
    star.edges = {{0, 1}, {0, 2}, {0, 3}};
    star.labels = {0, 0, 0};
    REQUIRE(check_odd(star, colors_of({1, 1, 1})).ok);
    REQUIRE_FALSE(check_odd(star, colors_of({1, 1, 2})).ok);
}

TEST_CASE("quasi checker honors granted 5-cycle blocks") {
    PlaneMap c5 = make_cycle(5);
    EdgeColoring granted = colors_of({1, 2, 1, 3, 4});
    REQUIRE(check_quasi_facially_odd(c5, granted, {{0, 1, 2, 3, 4}}).ok);
    REQUIRE_FALSE(check_quasi_facially_odd(c5, granted, {}).ok);
    REQUIRE_FALSE(check_quasi_facially_odd(c5, colors_of({1, 1, 2, 3, 4}),
                                           {{0, 1, 2, 3, 4}})
                      .ok);
}

TEST_CASE("granted blocks must be real 5-cycle blocks") {
    REQUIRE_THROWS_AS(check_quasi_facially_odd(make_theta(), colors_of({1, 2, 3}), {{0, 1, 2}}),
                      precondition_error);
    REQUIRE_THROWS_AS(check_quasi_facially_odd(make_cycle(6),
                                               colors_of({1, 2, 1, 2, 1, 2}),
                                               {{0, 1, 2, 3, 4}}),
                      precondition_error);
}

TEST_CASE("exhaustive facial parity optimum on the fixture set") {
    REQUIRE(exact_chi_fp(make_cycle(2)) == 2);
    REQUIRE(exact_chi_fp(make_cycle(3)) == 3);
    REQUIRE(exact_chi_fp(make_cycle(4)) == 4);
    REQUIRE(exact_chi_fp(make_cycle(5)) == 5);
    REQUIRE(exact_chi_fp(make_cycle(6)) == 2);
    REQUIRE(exact_chi_fp(make_theta()) == 3);
}

TEST_CASE("exhaustive search is fenced to twelve edges") {
    REQUIRE_THROWS_AS(exact_chi_fp(make_cycle(13)), precondition_error);
}

TEST_CASE("block cap turns into a bound error when exceeded") {
    REQUIRE_THROWS_AS(exact_chi_fp(make_two_pentagons(), 9), bound_error);
}

TEST_CASE("exhaustive odd index on the fixture set") {
    REQUIRE(exact_odd_chromatic_index(abstract_multigraph(make_cycle(4))) == 2);
    REQUIRE(exact_odd_chromatic_index(abstract_multigraph(make_wheel(4))) == 4);
    REQUIRE(exact_odd_chromatic_index(fixtures::shannon_triangle()) == 6);
    REQUIRE(exact_odd_chromatic_index(abstract_multigraph(make_theta())) == 1);
    REQUIRE(exact_odd_chromatic_index(fixtures::path_multigraph(2)) == 2);
}

TEST_CASE("odd index search is fenced to sixteen edges") {
    REQUIRE_THROWS_AS(exact_odd_chromatic_index(abstract_multigraph(make_cycle(17))),
                      precondition_error);
}

TEST_CASE("bounded palette search knows when a palette is too small") {
    REQUIRE_FALSE(detail::find_odd_coloring(fixtures::shannon_triangle(), 5).has_value());
    auto col = detail::find_odd_coloring(fixtures::shannon_triangle(), 6);
    REQUIRE(col.has_value());
    REQUIRE(check_odd(fixtures::shannon_triangle(), *col).ok);
}

TEST_CASE("tree odd index is one for all-odd degrees and two otherwise") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 25; ++trial) {
        BundledMultigraph t = fixtures::random_tree(rng, 2 + static_cast<int>(rng() % 14));
        bool all_odd = true;
        for (Vertex v = 0; v < t.vertex_count; ++v)
            if (t.degree(v) % 2 == 0) all_odd = false;
        REQUIRE(exact_odd_chromatic_index(t) == (all_odd ? 1 : 2));
    }
}

TEST_CASE("checkers reject colorings of the wrong length") {
    REQUIRE_FALSE(check_fpe(make_theta(), colors_of({1, 2})).ok);
    REQUIRE_FALSE(check_odd(fixtures::path_multigraph(2), colors_of({1})).ok);
}
