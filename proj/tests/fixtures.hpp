#pragma once

#include <cstdint>
#include <random>
#include <utility>
#include <vector>

#include "fpec/multigraph.hpp"

namespace fixtures {

// Triangle with every pair of vertices joined by two parallel edges.
inline fpec::BundledMultigraph shannon_triangle() {
    fpec::BundledMultigraph g;
    g.vertex_count = 3;
    g.edges = {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}};
    g.labels.assign(6, 0);
    return g;
}

inline fpec::BundledMultigraph path_multigraph(int edges) {
    fpec::BundledMultigraph g;
    g.vertex_count = edges + 1;
    for (int i = 0; i < edges; ++i) g.edges.push_back({i, i + 1});
    g.labels.assign(g.edges.size(), 0);
    return g;
}

inline fpec::BundledMultigraph random_tree(std::mt19937_64& rng, int edges) {
    fpec::BundledMultigraph g;
    g.vertex_count = edges + 1;
    for (int i = 1; i <= edges; ++i)
        g.edges.push_back({static_cast<int>(rng() % static_cast<std::uint64_t>(i)), i});
    g.labels.assign(g.edges.size(), 0);
    return g;
}

// Two random connected multigraphs joined by a bundle of k parallel
// edges between vertex 0 and the first vertex of the second part.
inline std::pair<fpec::BundledMultigraph, fpec::KBridge> random_bridged(std::mt19937_64& rng,
                                                                        int k) {
    auto grow = [&](int base, int n, std::vector<fpec::BundledMultigraph::Edge>& es) {
        for (int i = 1; i < n; ++i)
            es.push_back({base + static_cast<int>(rng() % static_cast<std::uint64_t>(i)),
                          base + i});
        int extra = static_cast<int>(rng() % 4);
        for (int i = 0; i < extra && n > 1; ++i) {
            int a = base + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            int b = base + static_cast<int>(rng() % static_cast<std::uint64_t>(n));
            if (a != b) es.push_back({a, b});
        }
    };
    int nu = 1 + static_cast<int>(rng() % 12);
    int nv = 1 + static_cast<int>(rng() % 12);
    fpec::BundledMultigraph g;
    g.vertex_count = nu + nv;
    grow(0, nu, g.edges);
    grow(nu, nv, g.edges);
    fpec::KBridge br;
    br.u = 0;
    br.v = nu;
    for (int i = 0; i < k; ++i) {
        br.edge_ids.push_back(static_cast<int>(g.edges.size()));
        g.edges.push_back({0, nu});
    }
    for (int x = 0; x < nu; ++x) br.side_u.push_back(x);
    for (int x = nu; x < nu + nv; ++x) br.side_v.push_back(x);
    g.labels.assign(g.edges.size(), 0);
    return {g, br};
}

} // namespace fixtures
