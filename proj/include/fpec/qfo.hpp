#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fpec/coloring.hpp"
#include "fpec/error.hpp"
#include "fpec/planemap.hpp"
#include "fpec/verify.hpp"

namespace fpec {

// A facially proper 4-coloring in which every pair of adjacent faces
// sees each color on an odd number of their common edges or on none,
// except inside the granted 5-cycle blocks (each a block of the map
// that is a simple 5-cycle and, being uncolorable within the parity
// rule, carries one doubled color on two non-face-adjacent edges).
struct QfoResult {
    EdgeColoring coloring;
    std::vector<std::vector<EdgeId>> c5_blocks;
};

// Proper 4-coloring of the edges under face adjacency: saturation-first
// backtracking on the adjacency structure, with a node budget.  The
// adjacency graph of a plane map is planar, so 4 colors always suffice;
// running over the budget aborts rather than degrading.
inline EdgeColoring facially_proper_four_color(const PlaneMap& g) {
    int m = g.edge_count();
    std::vector<std::vector<int>> adj(static_cast<std::size_t>(m));
    for (auto [a, b] : face_adjacent_pairs(g)) {
        adj[static_cast<std::size_t>(a)].push_back(b);
        adj[static_cast<std::size_t>(b)].push_back(a);
    }

    EdgeColoring coloring(static_cast<std::size_t>(m));
    long budget = 5000000;

    auto rec = [&](auto&& self, int colored) -> bool {
        if (colored == m) return true;
        if (--budget < 0) throw bound_error("proper 4-coloring: search budget exceeded");

        int pick = kNoIndex, pick_sat = -1, pick_deg = -1;
        for (int e = 0; e < m; ++e) {
            if (coloring.colors[static_cast<std::size_t>(e)] != kUncolored) continue;
            std::set<Color> around;
            int deg = 0;
            for (int o : adj[static_cast<std::size_t>(e)]) {
                Color c = coloring.colors[static_cast<std::size_t>(o)];
                if (c != kUncolored) around.insert(c);
                else ++deg;
            }
            int sat = static_cast<int>(around.size());
            if (sat > pick_sat || (sat == pick_sat && deg > pick_deg)) {
                pick = e;
                pick_sat = sat;
                pick_deg = deg;
            }
        }

        std::array<bool, 5> used{};
        for (int o : adj[static_cast<std::size_t>(pick)]) {
            Color c = coloring.colors[static_cast<std::size_t>(o)];
            if (c != kUncolored) used[static_cast<std::size_t>(c)] = true;
        }
        for (Color c = 1; c <= 4; ++c) {
            if (used[static_cast<std::size_t>(c)]) continue;
            coloring.colors[static_cast<std::size_t>(pick)] = c;
            if (self(self, colored + 1)) return true;
            coloring.colors[static_cast<std::size_t>(pick)] = kUncolored;
        }
        return false;
    };
    if (!rec(rec, 0))
        throw internal_error("proper 4-coloring: no coloring found for a planar adjacency");
    return coloring;
}

namespace detail {

inline const std::vector<std::array<Color, 5>>& palette_permutations() {
    static const std::vector<std::array<Color, 5>> all = [] {
        std::vector<std::array<Color, 5>> out;
        std::array<Color, 4> p{1, 2, 3, 4};
        do {
            out.push_back({0, p[0], p[1], p[2], p[3]});
        } while (std::next_permutation(p.begin(), p.end()));
        return out;
    }();
    return all;
}

inline bool is_cycle_map(const PlaneMap& g) {
    if (!g.connected() || g.edge_count() < 2) return false;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) != 2) return false;
    return true;
}

// Edges of a cycle map in traversal order, starting at edge 0 and
// walking away from its side-1 endpoint.
inline std::vector<EdgeId> cycle_order(const PlaneMap& g) {
    std::vector<EdgeId> order{0};
    Vertex at = g.vertex_of(half(0, 1));
    EdgeId cur = 0;
    while (static_cast<int>(order.size()) < g.edge_count()) {
        const auto& rot = g.rotation(at);
        EdgeId next = edge_of(rot[0]) == cur ? edge_of(rot[1]) : edge_of(rot[0]);
        order.push_back(next);
        at = g.vertex_of(half(next, 0)) == at ? g.vertex_of(half(next, 1))
                                              : g.vertex_of(half(next, 0));
        cur = next;
    }
    return order;
}

// Parity coloring of a single cycle.  Both faces see every edge, so a
// palette works iff each color is used an odd number of times and the
// cyclic sequence is proper.  Length 5 cannot meet the parity rule with
// 4 colors and becomes the granted block, doubling color 1 on two
// edges at distance two.
inline QfoResult cycle_color(const PlaneMap& g) {
    int n = g.edge_count();
    std::vector<EdgeId> order = cycle_order(g);
    std::vector<Color> seq;
    QfoResult result{EdgeColoring(static_cast<std::size_t>(n)), {}};

    if (n == 5) {
        seq = {1, 2, 1, 3, 4};
        std::vector<EdgeId> block = order;
        std::sort(block.begin(), block.end());
        result.c5_blocks.push_back(std::move(block));
    } else if (n % 4 == 2) {
        for (int i = 0; i < n; ++i) seq.push_back(i % 2 == 0 ? 1 : 2);
    } else if (n % 4 == 0) {
        for (int i = 0; i < n - 2; ++i) seq.push_back(i % 2 == 0 ? 1 : 2);
        seq.push_back(3);
        seq.push_back(4);
    } else if (n % 4 == 3) {
        for (int i = 0; i < n - 3; ++i) seq.push_back(i % 2 == 0 ? 1 : 2);
        seq.insert(seq.end(), {1, 2, 3});
    } else {
        for (int i = 0; i < n - 9; ++i) seq.push_back(i % 2 == 0 ? 1 : 2);
        for (int r = 0; r < 3; ++r) seq.insert(seq.end(), {1, 2, 3});
    }
    for (int i = 0; i < n; ++i)
        result.coloring.colors[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] =
            seq[static_cast<std::size_t>(i)];
    return result;
}

inline Vertex shared_degree_two_vertex(const PlaneMap& g, EdgeId a, EdgeId b) {
    auto [a1, a2] = g.endpoints(a);
    auto [b1, b2] = g.endpoints(b);
    for (Vertex v : {a1, a2})
        if ((v == b1 || v == b2) && g.degree(v) == 2) return v;
    return kNoIndex;
}

// Exhaustive completion of a partial coloring over the listed holes, in
// lexicographic order, returning the first assignment the full checker
// accepts.
inline std::optional<EdgeColoring> search_extension(
    const PlaneMap& g, const EdgeColoring& partial, const std::vector<EdgeId>& holes,
    const std::vector<std::vector<EdgeId>>& c5_blocks) {
    EdgeColoring candidate = partial;
    std::size_t h = holes.size();
    std::vector<Color> pick(h, 1);
    while (true) {
        for (std::size_t i = 0; i < h; ++i)
            candidate.colors[static_cast<std::size_t>(holes[i])] = pick[i];
        if (check_quasi_facially_odd(g, candidate, c5_blocks)) return candidate;
        std::size_t i = h;
        while (i > 0 && pick[i - 1] == 4) pick[--i] = 1;
        if (i == 0) return std::nullopt;
        ++pick[i - 1];
    }
}

inline QfoResult qfo_rec(const PlaneMap& g);

// Split at the lowest cut vertex, color the sides, and align the
// palettes.  Exactly one face of the whole map runs through both sides,
// meeting the vertex at two corners, so only the two corner pairs
// constrain the merge and the parity condition never mixes the sides.
inline QfoResult qfo_cut_merge(const PlaneMap& g, Vertex cut) {
    CutSplit split = split_at_cut_vertex(g, cut);
    QfoResult one = qfo_rec(split.side1.map);
    QfoResult two = qfo_rec(split.side2.map);

    std::vector<std::vector<EdgeId>> lifted;
    std::vector<EdgeId> back1(static_cast<std::size_t>(split.side1.map.edge_count()));
    std::vector<EdgeId> back2(static_cast<std::size_t>(split.side2.map.edge_count()));
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (split.side1.edge_map[static_cast<std::size_t>(e)] != kNoIndex)
            back1[static_cast<std::size_t>(split.side1.edge_map[static_cast<std::size_t>(e)])] = e;
        if (split.side2.edge_map[static_cast<std::size_t>(e)] != kNoIndex)
            back2[static_cast<std::size_t>(split.side2.edge_map[static_cast<std::size_t>(e)])] = e;
    }
    for (const auto& blk : one.c5_blocks) {
        std::vector<EdgeId> b;
        for (EdgeId e : blk) b.push_back(back1[static_cast<std::size_t>(e)]);
        std::sort(b.begin(), b.end());
        lifted.push_back(std::move(b));
    }
    for (const auto& blk : two.c5_blocks) {
        std::vector<EdgeId> b;
        for (EdgeId e : blk) b.push_back(back2[static_cast<std::size_t>(e)]);
        std::sort(b.begin(), b.end());
        lifted.push_back(std::move(b));
    }

    Color c_e1 = one.coloring.colors[static_cast<std::size_t >(
        split.side1.edge_map[static_cast<std::size_t>(split.e1)])];
    Color c_e2 = one.coloring.colors[static_cast<std::size_t>(
        split.side1.edge_map[static_cast<std::size_t>(split.e2)])];
    int o1 = split.side2.edge_map[static_cast<std::size_t>(split.e1_other)];
    int o2 = split.side2.edge_map[static_cast<std::size_t>(split.e2_other)];

    for (const auto& perm : palette_permutations()) {
        if (perm[static_cast<std::size_t>(two.coloring.colors[static_cast<std::size_t>(o1)])] ==
            c_e1)
            continue;
        if (perm[static_cast<std::size_t>(two.coloring.colors[static_cast<std::size_t>(o2)])] ==
            c_e2)
            continue;
        EdgeColoring permuted = permute_palette(two.coloring, perm);
        EdgeColoring candidate(static_cast<std::size_t>(g.edge_count()));
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            int s1 = split.side1.edge_map[static_cast<std::size_t>(e)];
            candidate.colors[static_cast<std::size_t>(e)] =
                s1 != kNoIndex
                    ? one.coloring.colors[static_cast<std::size_t>(s1)]
                    : permuted.colors[static_cast<std::size_t>(
                          split.side2.edge_map[static_cast<std::size_t>(e)])];
        }
        if (check_quasi_facially_odd(g, candidate, lifted))
            return QfoResult{std::move(candidate), std::move(lifted)};
    }
    throw internal_error("cut merge: no palette permutation fits");
}

// The contraction rules for a pair of faces with common edges e_1..e_k
// arranged as a path chained by 2-valent vertices.  The middle of the
// path is contracted, the rest of the map is colored recursively, and
// the removed edges are filled back in so that the pair's per-color
// counts stay odd: for long paths the fill repeats the recursive colors
// of e_1 and e_6 in an alternating pattern, which adds two to their
// counts and nothing else.
inline QfoResult qfo_path_rule(const PlaneMap& g, const std::vector<EdgeId>& path) {
    int k = static_cast<int>(path.size());
    std::vector<Vertex> links;
    for (int i = 0; i + 1 < k; ++i) {
        Vertex w = shared_degree_two_vertex(g, path[static_cast<std::size_t>(i)],
                                            path[static_cast<std::size_t>(i) + 1]);
        if (w == kNoIndex) throw internal_error("path rule: chain vertex missing");
        links.push_back(w);
    }

    MapTransform t = [&] {
        if (k <= 3) return contract_edge(g, path[1]);
        std::vector<Vertex> span(links.begin(),
                                 links.begin() + std::min<std::size_t>(links.size(), 5));
        if (k == 5) {
            auto [y1, y2] = g.endpoints(path[4]);
            span.push_back(y1 == links[3] ? y2 : y1);
        }
        return contract_subgraph(g, span);
    }();

    QfoResult inner = qfo_rec(t.map);
    if (!inner.c5_blocks.empty())
        throw internal_error("path rule: granted block inside a 2-connected map");

    EdgeColoring partial(static_cast<std::size_t>(g.edge_count()));
    std::vector<EdgeId> holes;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        int ne = t.edge_map[static_cast<std::size_t>(e)];
        if (ne != kNoIndex)
            partial.colors[static_cast<std::size_t>(e)] =
                inner.coloring.colors[static_cast<std::size_t>(ne)];
        else
            holes.push_back(e);
    }

    auto color_of = [&](EdgeId e) { return partial.colors[static_cast<std::size_t>(e)]; };
    EdgeColoring candidate = partial;
    auto set = [&](EdgeId e, Color c) { candidate.colors[static_cast<std::size_t>(e)] = c; };

    if (k == 2) {
        std::array<bool, 5> used{};
        for (const FacialWalk& w : g.facial_walks()) {
            std::size_t len = w.half_edges.size();
            for (std::size_t i = 0; i < len; ++i) {
                EdgeId a = edge_of(w.half_edges[i]);
                EdgeId b = edge_of(w.half_edges[(i + 1) % len]);
                if (a == path[1] && b != path[1] && color_of(b) != kUncolored)
                    used[static_cast<std::size_t>(color_of(b))] = true;
                if (b == path[1] && a != path[1] && color_of(a) != kUncolored)
                    used[static_cast<std::size_t>(color_of(a))] = true;
            }
        }
        for (Color c = 1; c <= 4; ++c)
            if (!used[static_cast<std::size_t>(c)]) {
                set(path[1], c);
                break;
            }
    } else if (k == 3) {
        for (Color c = 1; c <= 4; ++c)
            if (c != color_of(path[0]) && c != color_of(path[2])) {
                set(path[1], c);
                break;
            }
    } else if (k == 4) {
        std::vector<Color> rest;
        for (Color c = 1; c <= 4; ++c)
            if (c != color_of(path[0]) && c != color_of(path[3])) rest.push_back(c);
        set(path[1], rest[0]);
        set(path[2], rest[1]);
    } else if (k == 5) {
        std::vector<Color> rest;
        for (Color c = 1; c <= 4; ++c)
            if (c != color_of(path[0])) rest.push_back(c);
        set(path[2], color_of(path[0]));
        set(path[4], color_of(path[0]));
        set(path[1], rest[0]);
        set(path[3], rest[1]);
    } else {
        set(path[2], color_of(path[0]));
        set(path[4], color_of(path[0]));
        set(path[1], color_of(path[5]));
        set(path[3], color_of(path[5]));
    }

    if (check_quasi_facially_odd(g, candidate, {})) return QfoResult{std::move(candidate), {}};
    auto searched = search_extension(g, partial, holes, {});
    if (!searched) throw internal_error("path rule: no completion passes the checker");
    return QfoResult{std::move(*searched), {}};
}

// A pair of common edges forming a cut with at least two vertices on
// each side.  The side between them along the walk holds no further
// commons; contracting it (the far map) and contracting the far side
// (the near map) gives two smaller maps that overlap exactly in the two
// cut edges, whose colors a palette permutation aligns.  A far map that
// collapses to a 5-cycle would demand the granted exception, so that
// shape is absorbed instead: the far path and one cut edge are
// contracted away and the handful of removed edges is filled by search.
inline QfoResult qfo_cut_pair(const PlaneMap& g, int face, EdgeId ea, EdgeId eb) {
    EdgeCut cut = is_nontrivial_edge_cut(g, ea, eb);
    if (!cut.is_cut) throw internal_error("cut pair: common edges fail to separate");
    if (!cut.nontrivial) throw internal_error("cut pair: unlinked commons gave a trivial cut");

    HalfEdge ha = g.face_of(half(ea, 0)) == face ? half(ea, 0) : half(ea, 1);
    Vertex after = g.vertex_of(twin(ha));
    bool near_is_side1 =
        std::binary_search(cut.side1.begin(), cut.side1.end(), after);
    const std::vector<Vertex>& near = near_is_side1 ? cut.side1 : cut.side2;
    const std::vector<Vertex>& far = near_is_side1 ? cut.side2 : cut.side1;

    MapTransform far_map = contract_subgraph(g, near);

    if (is_cycle_map(far_map.map) && far_map.map.edge_count() == 5) {
        auto [b1, b2] = g.endpoints(eb);
        bool b1_near = std::binary_search(near.begin(), near.end(), b1);
        std::vector<Vertex> span = far;
        span.push_back(b1_near ? b1 : b2);
        std::sort(span.begin(), span.end());
        MapTransform t = contract_subgraph(g, span);

        QfoResult inner = qfo_rec(t.map);
        if (!inner.c5_blocks.empty())
            throw internal_error("cut pair: granted block inside a 2-connected map");
        EdgeColoring partial(static_cast<std::size_t>(g.edge_count()));
        std::vector<EdgeId> holes;
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            int ne = t.edge_map[static_cast<std::size_t>(e)];
            if (ne != kNoIndex)
                partial.colors[static_cast<std::size_t>(e)] =
                    inner.coloring.colors[static_cast<std::size_t>(ne)];
            else
                holes.push_back(e);
        }
        auto searched = search_extension(g, partial, holes, {});
        if (!searched) throw internal_error("cut pair: no completion after absorbing a 5-cycle");
        return QfoResult{std::move(*searched), {}};
    }

    MapTransform near_map = contract_subgraph(g, far);
    QfoResult near_res = qfo_rec(near_map.map);
    QfoResult far_res = qfo_rec(far_map.map);
    if (!near_res.c5_blocks.empty() || !far_res.c5_blocks.empty())
        throw internal_error("cut pair: granted block inside a 2-connected map");

    Color na = near_res.coloring.colors[static_cast<std::size_t>(
        near_map.edge_map[static_cast<std::size_t>(ea)])];
    Color nb = near_res.coloring.colors[static_cast<std::size_t>(
        near_map.edge_map[static_cast<std::size_t>(eb)])];
    Color fa = far_res.coloring.colors[static_cast<std::size_t>(
        far_map.edge_map[static_cast<std::size_t>(ea)])];
    Color fb = far_res.coloring.colors[static_cast<std::size_t>(
        far_map.edge_map[static_cast<std::size_t>(eb)])];

    for (const auto& perm : palette_permutations()) {
        if (perm[static_cast<std::size_t>(fa)] != na || perm[static_cast<std::size_t>(fb)] != nb)
            continue;
        EdgeColoring permuted = permute_palette(far_res.coloring, perm);
        EdgeColoring candidate(static_cast<std::size_t>(g.edge_count()));
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            int ne = near_map.edge_map[static_cast<std::size_t>(e)];
            candidate.colors[static_cast<std::size_t>(e)] =
                ne != kNoIndex ? near_res.coloring.colors[static_cast<std::size_t>(ne)]
                               : permuted.colors[static_cast<std::size_t>(
                                     far_map.edge_map[static_cast<std::size_t>(e)])];
        }
        if (check_quasi_facially_odd(g, candidate, {}))
            return QfoResult{std::move(candidate), {}};
    }
    throw internal_error("cut pair: no palette permutation fits");
}

inline QfoResult qfo_rec(const PlaneMap& g) {
    if (is_cycle_map(g)) {
        QfoResult result = cycle_color(g);
        if (!check_quasi_facially_odd(g, result.coloring, result.c5_blocks))
            throw internal_error("cycle coloring failed its own check");
        return result;
    }

    BlockDecomposition dec = blocks(g);
    if (!dec.cut_vertices.empty()) return qfo_cut_merge(g, dec.cut_vertices.front());

    for (const auto& [faces, commons] : adjacent_face_commons(g)) {
        int k = static_cast<int>(commons.size());
        if (k < 2) continue;

        std::vector<bool> linked(static_cast<std::size_t>(k));
        for (int i = 0; i < k; ++i)
            linked[static_cast<std::size_t>(i)] =
                shared_degree_two_vertex(g, commons[static_cast<std::size_t>(i)],
                                         commons[static_cast<std::size_t>((i + 1) % k)]) !=
                kNoIndex;
        std::vector<int> unlinked;
        for (int i = 0; i < k; ++i)
            if (!linked[static_cast<std::size_t>(i)]) unlinked.push_back(i);

        if (unlinked.empty()) {
            if (k == 2) return qfo_path_rule(g, commons);
            throw internal_error("common edges close a cycle in a non-cycle map");
        }
        if (static_cast<int>(unlinked.size()) == 1 && k > 2) {
            std::vector<EdgeId> path;
            int start = (unlinked.front() + 1) % k;
            for (int i = 0; i < k; ++i)
                path.push_back(commons[static_cast<std::size_t>((start + i) % k)]);
            return qfo_path_rule(g, path);
        }
        int j = unlinked.front();
        return qfo_cut_pair(g, faces.first, commons[static_cast<std::size_t>(j)],
                            commons[static_cast<std::size_t>((j + 1) % k)]);
    }

    EdgeColoring proper = facially_proper_four_color(g);
    if (!check_quasi_facially_odd(g, proper, {}))
        throw internal_error("proper coloring fails parity despite single-edge overlaps");
    return QfoResult{std::move(proper), {}};
}

} // namespace detail

// Quasi-facially-odd 4-coloring of a 2-edge-connected plane multigraph.
inline QfoResult qfo_color(const PlaneMap& g) {
    if (g.edge_count() == 0) throw precondition_error("coloring: map has no edges");
    if (!g.connected()) throw precondition_error("coloring: map must be connected");
    if (!g.bridgeless()) throw precondition_error("coloring: map must be bridgeless");
    QfoResult result = detail::qfo_rec(g);
    CheckResult check = check_quasi_facially_odd(g, result.coloring, result.c5_blocks);
    if (!check) throw internal_error("coloring failed final validation: " + check.message);
    return result;
}

} // namespace fpec
