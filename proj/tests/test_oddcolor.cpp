#include <map>
#include <random>
#include <set>

#include <catch2/catch_amalgamated.hpp>

#include "fpec/generate.hpp"
#include "fpec/oddcolor.hpp"
#include "fpec/planemap.hpp"
#include "fpec/verify.hpp"

#include "fixtures.hpp"

using namespace fpec;

namespace {

BundledMultigraph random_connected(std::mt19937_64& rng, int extra) {
    int n = 2 + static_cast<int>(rng() % 8);
    BundledMultigraph g = fixtures::random_tree(rng, n - 1);
    for (int i = 0; i < extra; ++i) {
        int a = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        int b = static_cast<int>(rng() % static_cast<std::uint64_t>(n));
        if (a != b) g.edges.push_back({a, b});
    }
    g.labels.assign(g.edges.size(), 0);
    return g;
}

} // namespace

TEST_CASE("forests get valid odd colorings with at most two colors") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        BundledMultigraph t = fixtures::random_tree(rng, 1 + static_cast<int>(rng() % 30));
        EdgeColoring col = forest_two_color(t);
        REQUIRE(col.max_color() <= 2);
        REQUIRE(check_odd(t, col).ok);
    }
}

TEST_CASE("a lone edge and a path of two are colored") {
    BundledMultigraph k2 = fixtures::path_multigraph(1);
    EdgeColoring col = forest_two_color(k2);
    REQUIRE(check_odd(k2, col).ok);
    REQUIRE(col.max_color() == 1);

    BundledMultigraph p2 = fixtures::path_multigraph(2);
    col = forest_two_color(p2);
    REQUIRE(check_odd(p2, col).ok);
    REQUIRE(col.max_color() == 2);
}

TEST_CASE("forest coloring refuses graphs with cycles") {
    BundledMultigraph c = abstract_multigraph(make_cycle(4));
    REQUIRE_THROWS_AS(forest_two_color(c), precondition_error);
}

TEST_CASE("tree join forests flip exactly the terminal parities") {
    std::mt19937_64 rng(23);
    for (int trial = 0; trial < 60; ++trial) {
        BundledMultigraph t = fixtures::random_tree(rng, 3 + static_cast<int>(rng() % 20));
        std::vector<int> forest = spanning_tree_edges(t);
        std::set<Vertex> pick;
        while (pick.size() % 2 == 1 || (pick.empty() && trial % 3 == 0))
            pick.insert(static_cast<int>(rng() % static_cast<std::uint64_t>(t.vertex_count)));
        std::vector<Vertex> terminals(pick.begin(), pick.end());
        std::vector<int> join = tjoin_forest(t, forest, terminals);
        std::vector<int> deg(static_cast<std::size_t>(t.vertex_count), 0);
        for (int e : join) {
            ++deg[static_cast<std::size_t>(t.edges[static_cast<std::size_t>(e)].u)];
            ++deg[static_cast<std::size_t>(t.edges[static_cast<std::size_t>(e)].v)];
        }
        for (Vertex v = 0; v < t.vertex_count; ++v)
            REQUIRE(deg[static_cast<std::size_t>(v)] % 2 == (pick.count(v) ? 1 : 0));
    }
}

TEST_CASE("even order multigraphs need at most three colors") {
    std::mt19937_64 rng(37);
    int done = 0;
    while (done < 60) {
        BundledMultigraph g = random_connected(rng, static_cast<int>(rng() % 6));
        if (g.vertex_count % 2 == 1) continue;
        ++done;
        EdgeColoring col = even_order_three_color(g);
        REQUIRE(col.max_color() <= 3);
        REQUIRE(check_odd(g, col).ok);
    }
    BundledMultigraph c4 = abstract_multigraph(make_cycle(4));
    EdgeColoring col = even_order_three_color(c4);
    REQUIRE(col.max_color() <= 3);
    REQUIRE(check_odd(c4, col).ok);
}

TEST_CASE("even order coloring refuses odd orders") {
    REQUIRE_THROWS_AS(even_order_three_color(abstract_multigraph(make_cycle(3))),
                      precondition_error);
}

TEST_CASE("bridged multigraphs get four colors with the bundle pattern") {
    std::mt19937_64 rng(53);
    for (int trial = 0; trial < 120; ++trial) {
        int k = 1 + static_cast<int>(rng() % 5);
        auto [g, br] = fixtures::random_bridged(rng, k);
        EdgeColoring col = k_bridge_four_color(g, br);
        REQUIRE(col.max_color() <= 4);
        REQUIRE(check_odd(g, col).ok);

        std::map<Color, int> hist;
        for (int e : br.edge_ids) ++hist[col.colors[static_cast<std::size_t>(e)]];
        if (k % 2 == 1) {
            REQUIRE(hist.size() == 1);
        } else {
            REQUIRE(hist.size() == 2);
            int small = std::min(hist.begin()->second, hist.rbegin()->second);
            REQUIRE(small == 1);
        }
    }
}

TEST_CASE("odd bundle graphs lift a coloring of the underlying simple graph") {
    BundledMultigraph w4 = abstract_multigraph(make_wheel(4));
    EdgeColoring col = odd_bundle_color(w4);
    REQUIRE(col.max_color() <= 4);
    REQUIRE(check_odd(w4, col).ok);

    BundledMultigraph theta = abstract_multigraph(make_theta());
    col = odd_bundle_color(theta);
    REQUIRE(check_odd(theta, col).ok);
    std::set<Color> used(col.colors.begin(), col.colors.end());
    REQUIRE(used.size() == 1);

    REQUIRE_THROWS_AS(odd_bundle_color(fixtures::shannon_triangle()), precondition_error);
}

TEST_CASE("component dispatcher always produces a valid coloring") {
    std::mt19937_64 rng(71);
    for (int trial = 0; trial < 120; ++trial) {
        BundledMultigraph g = random_connected(rng, static_cast<int>(rng() % 7));
        if (g.edge_count() == 0) continue;
        EdgeColoring col = odd_color_component(g);
        REQUIRE(col.max_color() <= 6);
        REQUIRE(check_odd(g, col).ok);
    }
}

TEST_CASE("component dispatcher is exact or near-exact on small instances") {
    std::mt19937_64 rng(89);
    int done = 0;
    while (done < 40) {
        BundledMultigraph g = random_connected(rng, static_cast<int>(rng() % 5));
        if (g.edge_count() == 0 || g.edge_count() > 12) continue;
        ++done;
        EdgeColoring col = odd_color_component(g);
        REQUIRE(check_odd(g, col).ok);
        REQUIRE(col.max_color() >= exact_odd_chromatic_index(g));
    }
}

TEST_CASE("the doubled triangle needs six colors and the dispatcher finds them") {
    BundledMultigraph sh = fixtures::shannon_triangle();
    EdgeColoring col = odd_color_component(sh);
    REQUIRE(check_odd(sh, col).ok);
    REQUIRE(col.max_color() == 6);
}

TEST_CASE("component dispatcher refuses disconnected input") {
    BundledMultigraph two;
    two.vertex_count = 4;
    two.edges = {{0, 1}, {2, 3}};
    two.labels = {0, 0};
    REQUIRE_THROWS_AS(odd_color_component(two), precondition_error);
}
