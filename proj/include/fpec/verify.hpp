#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fpec/coloring.hpp"
#include "fpec/error.hpp"
#include "fpec/multigraph.hpp"
#include "fpec/planemap.hpp"

namespace fpec {

struct CheckResult {
    bool ok = true;
    std::string message;
    explicit operator bool() const { return ok; }
};

inline CheckResult check_fail(std::string msg) { return {false, std::move(msg)}; }

namespace detail {

inline CheckResult require_complete(const PlaneMap& g, const EdgeColoring& coloring) {
    if (coloring.colors.size() != static_cast<std::size_t>(g.edge_count()))
        return check_fail("coloring has " + std::to_string(coloring.colors.size()) +
                          " entries for " + std::to_string(g.edge_count()) + " edges");
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (coloring.colors[static_cast<std::size_t>(e)] <= 0)
            return check_fail("edge " + std::to_string(e) + " is uncolored");
    return {};
}

} // namespace detail

// Edges consecutive on a facial walk must receive different colors.
inline CheckResult check_facially_proper(const PlaneMap& g, const EdgeColoring& coloring) {
    if (auto r = detail::require_complete(g, coloring); !r) return r;
    for (const FacialWalk& w : g.facial_walks()) {
        std::size_t len = w.half_edges.size();
        for (std::size_t i = 0; i < len; ++i) {
            EdgeId a = edge_of(w.half_edges[i]);
            EdgeId b = edge_of(w.half_edges[(i + 1) % len]);
            if (a == b) continue;
            if (coloring.colors[static_cast<std::size_t>(a)] ==
                coloring.colors[static_cast<std::size_t>(b)])
                return check_fail("edges " + std::to_string(a) + " and " + std::to_string(b) +
                                  " share color " +
                                  std::to_string(coloring.colors[static_cast<std::size_t>(a)]) +
                                  " and meet on face " + std::to_string(w.id));
        }
    }
    return {};
}

// Facially proper, and on every facial walk every color occurs an odd
// number of times or not at all.
inline CheckResult check_fpe(const PlaneMap& g, const EdgeColoring& coloring) {
    if (auto r = check_facially_proper(g, coloring); !r) return r;
    for (const FacialWalk& w : g.facial_walks()) {
        std::map<Color, int> count;
        for (HalfEdge h : w.half_edges)
            ++count[coloring.colors[static_cast<std::size_t>(edge_of(h))]];
        for (auto [c, k] : count)
            if (k % 2 == 0)
                return check_fail("face " + std::to_string(w.id) + " sees color " +
                                  std::to_string(c) + " on " + std::to_string(k) + " edges");
    }
    return {};
}

// Per vertex of the multigraph, every color class has odd degree or
// degree zero.
inline CheckResult check_odd(const BundledMultigraph& mg, const EdgeColoring& coloring) {
    if (coloring.colors.size() != static_cast<std::size_t>(mg.edge_count()))
        return check_fail("coloring has " + std::to_string(coloring.colors.size()) +
                          " entries for " + std::to_string(mg.edge_count()) + " edges");
    for (int e = 0; e < mg.edge_count(); ++e)
        if (coloring.colors[static_cast<std::size_t>(e)] <= 0)
            return check_fail("edge " + std::to_string(e) + " is uncolored");
    auto inc = mg.incidence();
    for (Vertex v = 0; v < mg.vertex_count; ++v) {
        std::map<Color, int> count;
        for (int e : inc[static_cast<std::size_t>(v)])
            ++count[coloring.colors[static_cast<std::size_t>(e)]];
        for (auto [c, k] : count)
            if (k % 2 == 0)
                return check_fail("vertex " + std::to_string(v) + " sees color " +
                                  std::to_string(c) + " on " + std::to_string(k) + " edges");
    }
    return {};
}

// Facially proper with at most 4 colors, and for every pair of adjacent
// faces every color appears on an odd number of their common edges or
// on none, except inside the granted 5-cycle blocks.  Each granted
// block must be an actual block of g that is a simple 5-cycle, colored
// with exactly 4 colors so that the doubled color sits on two edges
// that are not face-adjacent.
inline CheckResult check_quasi_facially_odd(const PlaneMap& g, const EdgeColoring& coloring,
                                            const std::vector<std::vector<EdgeId>>& c5_blocks) {
    if (auto r = check_facially_proper(g, coloring); !r) return r;
    if (coloring.max_color() > 4)
        return check_fail("palette exceeds 4 colors");

    std::vector<bool> excepted(static_cast<std::size_t>(g.edge_count()), false);
    if (!c5_blocks.empty()) {
        BlockDecomposition dec = blocks(g);
        std::set<std::pair<EdgeId, EdgeId>> adjacent;
        for (auto p : face_adjacent_pairs(g)) adjacent.insert(p);
        for (const auto& blk : c5_blocks) {
            std::vector<EdgeId> sorted = blk;
            std::sort(sorted.begin(), sorted.end());
            bool found = false;
            for (std::size_t i = 0; i < dec.block_edges.size(); ++i)
                if (dec.block_edges[i] == sorted && dec.is_c5[i]) found = true;
            if (!found)
                throw precondition_error("granted block is not a 5-cycle block of the map");
            std::map<Color, std::vector<EdgeId>> by_color;
            for (EdgeId e : sorted)
                by_color[coloring.colors[static_cast<std::size_t>(e)]].push_back(e);
            if (by_color.size() != 4)
                return check_fail("granted 5-cycle block does not use exactly 4 colors");
            for (auto& [c, es] : by_color) {
                if (es.size() == 1) continue;
                if (es.size() != 2)
                    return check_fail("granted 5-cycle block repeats color " +
                                      std::to_string(c) + " more than twice");
                if (adjacent.count(std::minmax(es[0], es[1])))
                    return check_fail("granted 5-cycle block doubles color " +
                                      std::to_string(c) + " on face-adjacent edges");
            }
            for (EdgeId e : sorted) excepted[static_cast<std::size_t>(e)] = true;
        }
    }

    for (const auto& [faces, commons] : adjacent_face_commons(g)) {
        std::map<Color, int> count;
        for (EdgeId e : commons) {
            if (excepted[static_cast<std::size_t>(e)]) continue;
            ++count[coloring.colors[static_cast<std::size_t>(e)]];
        }
        for (auto [c, k] : count)
            if (k % 2 == 0 && k != 0)
                return check_fail("faces " + std::to_string(faces.first) + "," +
                                  std::to_string(faces.second) + " share " +
                                  std::to_string(k) + " edges of color " + std::to_string(c));
    }
    return {};
}

// ---------------------------------------------------------------------
// Exact brute-force baselines for small instances.

// Minimum palette size over all facial-parity edge colorings, found by
// enumerating edge partitions in restricted-growth order.  Facial
// properness prunes the growth; the parity condition is checked on
// complete partitions.  Guarded to 12 edges.
inline int exact_chi_fp(const PlaneMap& g, int max_blocks = 16) {
    int m = g.edge_count();
    if (m > 12) throw precondition_error("exact facial-parity search is limited to 12 edges");
    if (m == 0) return 0;

    std::vector<std::uint32_t> adj(static_cast<std::size_t>(m), 0);
    for (auto [a, b] : face_adjacent_pairs(g)) {
        adj[static_cast<std::size_t>(a)] |= std::uint32_t{1} << b;
        adj[static_cast<std::size_t>(b)] |= std::uint32_t{1} << a;
    }

    std::vector<int> block(static_cast<std::size_t>(m), 0);
    std::vector<std::uint32_t> members(static_cast<std::size_t>(m) + 1, 0);
    int best = m + 1;

    auto parity_ok = [&]() {
        std::vector<int> count(static_cast<std::size_t>(m), 0);
        for (const FacialWalk& w : g.facial_walks()) {
            for (HalfEdge h : w.half_edges)
                ++count[static_cast<std::size_t>(block[static_cast<std::size_t>(edge_of(h))])];
            bool ok = true;
            for (HalfEdge h : w.half_edges) {
                std::size_t b = static_cast<std::size_t>(block[static_cast<std::size_t>(edge_of(h))]);
                if (count[b] != 0 && count[b] % 2 == 0) ok = false;
                count[b] = 0;
            }
            if (!ok) return false;
        }
        return true;
    };

    auto rec = [&](auto&& self, int e, int used) -> void {
        if (used >= best) return;
        if (e == m) {
            if (parity_ok()) best = used;
            return;
        }
        int cap = std::min(used + 1, std::min(best - 1, max_blocks));
        for (int b = 0; b < cap; ++b) {
            if (members[static_cast<std::size_t>(b)] & adj[static_cast<std::size_t>(e)]) continue;
            block[static_cast<std::size_t>(e)] = b;
            members[static_cast<std::size_t>(b)] |= std::uint32_t{1} << e;
            self(self, e + 1, std::max(used, b + 1));
            members[static_cast<std::size_t>(b)] &= ~(std::uint32_t{1} << e);
        }
    };
    rec(rec, 0, 0);

    if (best > max_blocks)
        throw bound_error("no facial-parity coloring within " + std::to_string(max_blocks) +
                          " colors");
    return best;
}

namespace detail {

// Lexicographically first odd edge coloring within the palette, or
// nothing.  Backtracking over canonical colorings with a per-vertex
// parity bound: a vertex with r uncolored edges left can still repair
// at most r colors of currently even nonzero degree.
inline std::optional<EdgeColoring> find_odd_coloring(const BundledMultigraph& mg, int palette) {
    int m = mg.edge_count();
    int n = mg.vertex_count;
    if (m == 0) return EdgeColoring(0);

    std::vector<int> left(static_cast<std::size_t>(n), 0);
    for (int e = 0; e < m; ++e) {
        ++left[static_cast<std::size_t>(mg.edges[static_cast<std::size_t>(e)].u)];
        ++left[static_cast<std::size_t>(mg.edges[static_cast<std::size_t>(e)].v)];
    }
    std::vector<std::vector<int>> count(
        static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(palette) + 1, 0));
    std::vector<int> evens(static_cast<std::size_t>(n), 0);
    EdgeColoring coloring(static_cast<std::size_t>(m));

    auto place = [&](Vertex v, Color c, int dir) {
        auto& k = count[static_cast<std::size_t>(v)][static_cast<std::size_t>(c)];
        if (k > 0 && k % 2 == 0) --evens[static_cast<std::size_t>(v)];
        k += dir;
        if (k > 0 && k % 2 == 0) ++evens[static_cast<std::size_t>(v)];
        left[static_cast<std::size_t>(v)] -= dir;
    };

    auto rec = [&](auto&& self, int e, int used) -> bool {
        if (e == m) return true;
        Vertex u = mg.edges[static_cast<std::size_t>(e)].u;
        Vertex v = mg.edges[static_cast<std::size_t>(e)].v;
        int cap = std::min(used + 1, palette);
        for (Color c = 1; c <= cap; ++c) {
            place(u, c, +1);
            place(v, c, +1);
            if (evens[static_cast<std::size_t>(u)] <= left[static_cast<std::size_t>(u)] &&
                evens[static_cast<std::size_t>(v)] <= left[static_cast<std::size_t>(v)]) {
                coloring.colors[static_cast<std::size_t>(e)] = c;
                if (self(self, e + 1, std::max(used, c))) return true;
            }
            place(u, c, -1);
            place(v, c, -1);
        }
        coloring.colors[static_cast<std::size_t>(e)] = kUncolored;
        return false;
    };
    if (rec(rec, 0, 0)) return coloring;
    return std::nullopt;
}

} // namespace detail

// Minimum palette size over all odd edge colorings of a loopless
// multigraph, by iterative deepening on the palette.  Guarded to 16
// edges.
inline int exact_odd_chromatic_index(const BundledMultigraph& mg) {
    int m = mg.edge_count();
    if (m > 16) throw precondition_error("exact odd-index search is limited to 16 edges");
    if (m == 0) return 0;
    for (int palette = 1; palette <= m; ++palette)
        if (detail::find_odd_coloring(mg, palette)) return palette;
    throw internal_error("odd-index search failed although distinct colors always work");
}

} // namespace fpec
