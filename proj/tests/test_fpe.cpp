#include <map>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "fpec/fpe.hpp"
#include "fpec/generate.hpp"
#include "fpec/verify.hpp"

using namespace fpec;

TEST_CASE("small fixtures land on their known palette sizes") {
    REQUIRE(fpe_color(make_cycle(2)).palette_size == 2);
    REQUIRE(fpe_color(make_cycle(3)).palette_size == 3);
    REQUIRE(fpe_color(make_cycle(4)).palette_size == 4);
    REQUIRE(fpe_color(make_cycle(5)).palette_size == 5);
    REQUIRE(fpe_color(make_cycle(6)).palette_size == 2);
    REQUIRE(fpe_color(make_theta()).palette_size == 3);
}

TEST_CASE("two pentagons need ten colors and the pipeline delivers ten") {
    FpeResult r = fpe_color(make_two_pentagons());
    REQUIRE(r.palette_size == 10);
    REQUIRE(exact_chi_fp(make_two_pentagons()) == 10);
}

TEST_CASE("the pipeline is exact on small cycles") {
    for (int n = 2; n <= 12; ++n)
        REQUIRE(fpe_color(make_cycle(n)).palette_size == exact_chi_fp(make_cycle(n)));
}

TEST_CASE("the pipeline stays within sixteen colors across families") {
    for (int n = 3; n <= 9; ++n) REQUIRE(fpe_color(make_wheel(n)).palette_size <= 16);
    for (int n = 1; n <= 6; ++n) REQUIRE(fpe_color(make_c5_chain(n)).palette_size <= 16);
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        PlaneMap g = make_random(10 + static_cast<int>(seed * 5) % 41, seed + 2000);
        FpeResult r = fpe_color(g);
        REQUIRE(r.palette_size <= 16);
        REQUIRE(check_fpe(g, r.coloring).ok);
    }
}

TEST_CASE("exact optimum never exceeds the pipeline result") {
    std::vector<PlaneMap> fixtures;
    fixtures.push_back(make_theta());
    fixtures.push_back(make_wheel(4));
    fixtures.push_back(make_c5_chain(2));
    for (std::uint64_t seed = 1; seed <= 8; ++seed) fixtures.push_back(make_random(11, seed));
    for (const PlaneMap& g : fixtures) {
        FpeResult r = fpe_color(g);
        REQUIRE(exact_chi_fp(g) <= r.palette_size);
        REQUIRE(r.palette_size <= 16);
    }
}

TEST_CASE("the trace is a faithful account of the construction") {
    PlaneMap g = make_c5_chain(3);
    FpeResult r = fpe_color(g);

    REQUIRE(check_quasi_facially_odd(g, r.base.coloring, r.base.c5_blocks).ok);

    std::map<std::pair<Color, Color>, Color> table;
    for (const auto& [pair, final_color] : r.compaction) table[pair] = final_color;

    std::vector<Color> omega_of(static_cast<std::size_t>(g.edge_count()), kUncolored);
    std::vector<int> covered(static_cast<std::size_t>(g.edge_count()), 0);
    for (const DualTrace& d : r.duals)
        for (const DualComponentTrace& ct : d.components)
            for (std::size_t i = 0; i < ct.edges.size(); ++i) {
                EdgeId e = ct.edges[i];
                ++covered[static_cast<std::size_t>(e)];
                omega_of[static_cast<std::size_t>(e)] = ct.omega[i];
                REQUIRE(r.base.coloring.colors[static_cast<std::size_t>(e)] == d.color);
            }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        REQUIRE(covered[static_cast<std::size_t>(e)] == 1);
        std::pair<Color, Color> key = {r.base.coloring.colors[static_cast<std::size_t>(e)],
                                       omega_of[static_cast<std::size_t>(e)]};
        REQUIRE(table.at(key) == r.coloring.colors[static_cast<std::size_t>(e)]);
    }

    std::set<Color> used(r.coloring.colors.begin(), r.coloring.colors.end());
    REQUIRE(static_cast<int>(used.size()) == r.palette_size);
    REQUIRE(r.coloring.max_color() == r.palette_size);
}

TEST_CASE("maps that are not two-edge-connected are refused") {
    REQUIRE_THROWS_AS(fpe_color(parse_pmap("pmap 2 1\nv 0 : 0\nv 1 : 1\n")),
                      precondition_error);
}
