#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "fpec/error.hpp"
#include "fpec/planemap.hpp"

namespace fpec {

inline PlaneMap make_cycle(int n) {
    if (n < 2) throw precondition_error("cycle needs at least 2 edges");
    std::vector<std::vector<HalfEdge>> rot(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j)
        rot[static_cast<std::size_t>(j)] = {2 * j, 2 * ((j - 1 + n) % n) + 1};
    return PlaneMap(std::move(rot));
}

// Hub vertex 0, rim vertices 1..n; rim edges 0..n-1, spokes n..2n-1.
inline PlaneMap make_wheel(int n) {
    if (n < 3) throw precondition_error("wheel needs a rim of at least 3");
    std::vector<std::vector<HalfEdge>> rot(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i < n; ++i) rot[0].push_back(2 * (n + i));
    for (int i = 0; i < n; ++i)
        rot[static_cast<std::size_t>(1 + i)] = {2 * i, 2 * (n + i) + 1,
                                                2 * ((i - 1 + n) % n) + 1};
    return PlaneMap(std::move(rot));
}

inline PlaneMap make_theta() {
    return PlaneMap({{0, 2, 4}, {5, 3, 1}});
}

// Two 5-cycles sharing vertex 0; edges 0..4 around 0..4, edges 5..9
// around 0,5..8.
inline PlaneMap make_two_pentagons() {
    std::vector<std::vector<HalfEdge>> rot(9);
    rot[0] = {0, 9, 10, 19};
    for (int i = 1; i < 5; ++i) rot[static_cast<std::size_t>(i)] = {2 * i, 2 * i - 1};
    for (int i = 5; i < 9; ++i) rot[static_cast<std::size_t>(i)] = {2 * i + 2, 2 * i + 1};
    return PlaneMap(std::move(rot));
}

// n 5-cycles in a row, consecutive ones sharing a single vertex: cycle
// j+1 hangs off the vertex two steps along cycle j.
inline PlaneMap make_c5_chain(int n) {
    if (n < 1) throw precondition_error("chain needs at least one 5-cycle");
    int vcount = 5 + 4 * (n - 1);
    std::vector<std::vector<HalfEdge>> rot(static_cast<std::size_t>(vcount));
    std::vector<int> ring = {0, 1, 2, 3, 4};
    for (int j = 0; j < n; ++j) {
        if (j > 0) {
            int shared = ring[2];
            ring = {shared, 4 * j + 1, 4 * j + 2, 4 * j + 3, 4 * j + 4};
        }
        for (int t = 0; t < 5; ++t) {
            int m = 5 * j + t;
            std::size_t v = static_cast<std::size_t>(ring[static_cast<std::size_t>(t)]);
            rot[v].push_back(2 * m);
            rot[v].push_back(2 * (5 * j + (t + 4) % 5) + 1);
        }
    }
    return PlaneMap(std::move(rot));
}

namespace detail {

inline PlaneMap with_chord(const PlaneMap& g, int face, std::size_t pos1, std::size_t pos2) {
    const FacialWalk& w = g.facial_walks()[static_cast<std::size_t>(face)];
    HalfEdge h1 = w.half_edges[pos1];
    HalfEdge h2 = w.half_edges[pos2];
    Vertex u = g.vertex_of(h1);
    Vertex v = g.vertex_of(h2);
    if (u == v) throw precondition_error("chord corners share a vertex");
    int m = g.edge_count();
    std::vector<std::vector<HalfEdge>> rot;
    rot.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex x = 0; x < g.vertex_count(); ++x) rot.push_back(g.rotation(x));
    auto& ru = rot[static_cast<std::size_t>(u)];
    ru.insert(std::find(ru.begin(), ru.end(), h1), 2 * m);
    auto& rv = rot[static_cast<std::size_t>(v)];
    rv.insert(std::find(rv.begin(), rv.end(), h2), 2 * m + 1);
    return PlaneMap(std::move(rot));
}

inline PlaneMap with_parallel(const PlaneMap& g, HalfEdge h) {
    Vertex u = g.vertex_of(h);
    Vertex v = g.vertex_of(twin(h));
    int m = g.edge_count();
    std::vector<std::vector<HalfEdge>> rot;
    rot.reserve(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex x = 0; x < g.vertex_count(); ++x) rot.push_back(g.rotation(x));
    auto& ru = rot[static_cast<std::size_t>(u)];
    ru.insert(std::next(std::find(ru.begin(), ru.end(), h)), 2 * m);
    auto& rv = rot[static_cast<std::size_t>(v)];
    rv.insert(std::find(rv.begin(), rv.end(), twin(h)), 2 * m + 1);
    return PlaneMap(std::move(rot));
}

inline PlaneMap with_subdivision(const PlaneMap& g, EdgeId e) {
    HalfEdge h1 = half(e, 1);
    Vertex v = g.vertex_of(h1);
    int m = g.edge_count();
    std::vector<std::vector<HalfEdge>> rot;
    rot.reserve(static_cast<std::size_t>(g.vertex_count()) + 1);
    for (Vertex x = 0; x < g.vertex_count(); ++x) rot.push_back(g.rotation(x));
    auto& rv = rot[static_cast<std::size_t>(v)];
    *std::find(rv.begin(), rv.end(), h1) = 2 * m + 1;
    rot.push_back({h1, 2 * m});
    return PlaneMap(std::move(rot));
}

} // namespace detail

// Random bridgeless loopless map grown from a short cycle by face
// chords, parallel edges, and subdivisions.  Same seed, same map.
inline PlaneMap make_random(int edges, std::uint64_t seed) {
    if (edges < 2) throw precondition_error("random map needs at least 2 edges");
    std::mt19937_64 rng(seed);
    int start = 2 + static_cast<int>(rng() % 2);
    if (start > edges) start = edges;
    PlaneMap g = make_cycle(start);
    while (g.edge_count() < edges) {
        int move = static_cast<int>(rng() % 4);
        if (move <= 1) {
            int face = static_cast<int>(rng() % static_cast<std::uint64_t>(g.face_count()));
            const FacialWalk& w = g.facial_walks()[static_cast<std::size_t>(face)];
            std::size_t len = w.half_edges.size();
            bool placed = false;
            for (int attempt = 0; attempt < 8 && !placed; ++attempt) {
                std::size_t p1 = static_cast<std::size_t>(rng() % len);
                std::size_t p2 = static_cast<std::size_t>(rng() % len);
                if (p1 == p2 || g.vertex_of(w.half_edges[p1]) == g.vertex_of(w.half_edges[p2]))
                    continue;
                g = detail::with_chord(g, face, p1, p2);
                placed = true;
            }
            if (!placed)
                g = detail::with_parallel(
                    g, static_cast<HalfEdge>(rng() % static_cast<std::uint64_t>(2 * g.edge_count())));
        } else if (move == 2) {
            g = detail::with_parallel(
                g, static_cast<HalfEdge>(rng() % static_cast<std::uint64_t>(2 * g.edge_count())));
        } else {
            g = detail::with_subdivision(
                g, static_cast<EdgeId>(rng() % static_cast<std::uint64_t>(g.edge_count())));
        }
    }
    return g;
}

} // namespace fpec
