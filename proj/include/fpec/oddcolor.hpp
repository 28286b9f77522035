#pragma once

#include <algorithm>
#include <array>
#include <iostream>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <vector>

#include "fpec/coloring.hpp"
#include "fpec/error.hpp"
#include "fpec/multigraph.hpp"
#include "fpec/verify.hpp"

namespace fpec {

// Odd edge coloring of a forest with colors {1,2}: every root takes
// color 1 on all its edges when its degree is odd, otherwise color 1 on
// all but the last; walking down, a child repeats the color of its
// parent edge on the remaining edges when its degree is odd, otherwise
// uses the opposite color.  Either way every nonzero class ends up odd.
inline EdgeColoring forest_two_color(const BundledMultigraph& mg) {
    if (static_cast<int>(spanning_tree_edges(mg).size()) != mg.edge_count())
        throw precondition_error("forest coloring: graph has a cycle");
    auto inc = mg.incidence();
    for (auto& lst : inc) std::sort(lst.begin(), lst.end());

    EdgeColoring coloring(static_cast<std::size_t>(mg.edge_count()));
    std::vector<bool> seen(static_cast<std::size_t>(mg.vertex_count), false);
    auto other_end = [&](int e, Vertex at) {
        return mg.edges[static_cast<std::size_t>(e)].u == at
                   ? mg.edges[static_cast<std::size_t>(e)].v
                   : mg.edges[static_cast<std::size_t>(e)].u;
    };

    for (Vertex root = 0; root < mg.vertex_count; ++root) {
        if (seen[static_cast<std::size_t>(root)]) continue;
        seen[static_cast<std::size_t>(root)] = true;
        const auto& redges = inc[static_cast<std::size_t>(root)];
        if (redges.empty()) continue;
        std::queue<Vertex> q;
        for (std::size_t i = 0; i < redges.size(); ++i) {
            bool odd = redges.size() % 2 == 1;
            coloring.colors[static_cast<std::size_t>(redges[i])] =
                (odd || i + 1 < redges.size()) ? 1 : 2;
            Vertex w = other_end(redges[i], root);
            seen[static_cast<std::size_t>(w)] = true;
            q.push(w);
        }
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            const auto& ves = inc[static_cast<std::size_t>(v)];
            Color parent = kUncolored;
            for (int e : ves)
                if (coloring.colors[static_cast<std::size_t>(e)] != kUncolored)
                    parent = coloring.colors[static_cast<std::size_t>(e)];
            Color fill = ves.size() % 2 == 1 ? parent : (parent == 1 ? 2 : 1);
            for (int e : ves) {
                if (coloring.colors[static_cast<std::size_t>(e)] != kUncolored) continue;
                coloring.colors[static_cast<std::size_t>(e)] = fill;
                Vertex w = other_end(e, v);
                seen[static_cast<std::size_t>(w)] = true;
                q.push(w);
            }
        }
    }
    return coloring;
}

// Edges of the forest whose degrees are odd exactly at the vertices of
// S: pair up S in sorted order and take the symmetric difference of the
// forest paths between the pairs.
inline std::vector<int> tjoin_forest(const BundledMultigraph& mg,
                                     const std::vector<int>& forest_edges,
                                     const std::vector<Vertex>& s) {
    if (s.size() % 2 != 0)
        throw precondition_error("t-join: odd number of terminals");
    std::vector<Vertex> terms = s;
    std::sort(terms.begin(), terms.end());
    if (std::adjacent_find(terms.begin(), terms.end()) != terms.end())
        throw precondition_error("t-join: repeated terminal");

    std::vector<std::vector<int>> inc(static_cast<std::size_t>(mg.vertex_count));
    for (int e : forest_edges) {
        inc[static_cast<std::size_t>(mg.edges[static_cast<std::size_t>(e)].u)].push_back(e);
        inc[static_cast<std::size_t>(mg.edges[static_cast<std::size_t>(e)].v)].push_back(e);
    }
    std::vector<bool> in_join(static_cast<std::size_t>(mg.edge_count()), false);
    for (std::size_t i = 0; i + 1 < terms.size(); i += 2) {
        Vertex a = terms[i], b = terms[i + 1];
        std::vector<int> via(static_cast<std::size_t>(mg.vertex_count), kNoIndex);
        std::vector<bool> seen(static_cast<std::size_t>(mg.vertex_count), false);
        std::queue<Vertex> q;
        seen[static_cast<std::size_t>(a)] = true;
        q.push(a);
        while (!q.empty() && !seen[static_cast<std::size_t>(b)]) {
            Vertex v = q.front();
            q.pop();
            for (int e : inc[static_cast<std::size_t>(v)]) {
                Vertex w = mg.edges[static_cast<std::size_t>(e)].u == v
                               ? mg.edges[static_cast<std::size_t>(e)].v
                               : mg.edges[static_cast<std::size_t>(e)].u;
                if (seen[static_cast<std::size_t>(w)]) continue;
                seen[static_cast<std::size_t>(w)] = true;
                via[static_cast<std::size_t>(w)] = e;
                q.push(w);
            }
        }
        if (!seen[static_cast<std::size_t>(b)])
            throw precondition_error("t-join: terminals in different forest components");
        for (Vertex v = b; v != a;) {
            int e = via[static_cast<std::size_t>(v)];
            in_join[static_cast<std::size_t>(e)] = !in_join[static_cast<std::size_t>(e)];
            v = mg.edges[static_cast<std::size_t>(e)].u == v
                    ? mg.edges[static_cast<std::size_t>(e)].v
                    : mg.edges[static_cast<std::size_t>(e)].u;
        }
    }
    std::vector<int> out;
    for (int e = 0; e < mg.edge_count(); ++e)
        if (in_join[static_cast<std::size_t>(e)]) out.push_back(e);
    return out;
}

// Odd coloring of a connected multigraph of even order with colors
// {1,2,3}: the even-degree vertices pair up through a spanning-tree
// join whose forest takes colors {1,2}; everything else takes color 3,
// which lands an odd count at every vertex.
inline EdgeColoring even_order_three_color(const BundledMultigraph& mg) {
    if (!multigraph_connected(mg))
        throw precondition_error("even-order coloring: graph must be connected");
    if (mg.vertex_count % 2 != 0)
        throw precondition_error("even-order coloring: order must be even");
    if (mg.edge_count() == 0) return EdgeColoring(0);

    std::vector<Vertex> evens;
    for (Vertex v = 0; v < mg.vertex_count; ++v)
        if (mg.degree(v) % 2 == 0) evens.push_back(v);
    std::vector<int> tree = spanning_tree_edges(mg);
    std::vector<int> join = tjoin_forest(mg, tree, evens);

    SubMultigraph forest = edge_sub_multigraph(mg, join);
    EdgeColoring on_forest = forest_two_color(forest.graph);
    EdgeColoring coloring(static_cast<std::size_t>(mg.edge_count()));
    for (int e = 0; e < mg.edge_count(); ++e) {
        int fe = forest.edge_map[static_cast<std::size_t>(e)];
        coloring.colors[static_cast<std::size_t>(e)] =
            fe == kNoIndex ? 3 : on_forest.colors[static_cast<std::size_t>(fe)];
    }
    return coloring;
}

namespace detail {

// One side of a bridge bundle: the side's vertices plus the far
// endpoint, which the bundle alone attaches.  Even order defers to the
// three-color construction; odd order runs the same join construction
// on the side without the far endpoint and spends color 4 on the
// bundle, pulling one bundle edge into the forest when the bundle is
// even so that color 4 stays odd.
inline EdgeColoring color_bridge_side(const BundledMultigraph& g, Vertex side_anchor,
                                      Vertex far, const std::vector<int>& bundle) {
    if (g.vertex_count % 2 == 0) return even_order_three_color(g);

    int k = static_cast<int>(bundle.size());
    std::vector<int> tree = spanning_tree_edges(g);
    int far_tree_edge = kNoIndex;
    std::vector<int> tree_minus;
    for (int e : tree) {
        if (g.edges[static_cast<std::size_t>(e)].u == far ||
            g.edges[static_cast<std::size_t>(e)].v == far) {
            if (far_tree_edge != kNoIndex)
                throw internal_error("bridge side: far endpoint has two tree edges");
            far_tree_edge = e;
        } else {
            tree_minus.push_back(e);
        }
    }
    if (far_tree_edge == kNoIndex)
        throw internal_error("bridge side: far endpoint missing from tree");

    std::vector<bool> in_bundle(static_cast<std::size_t>(g.edge_count()), false);
    for (int e : bundle) in_bundle[static_cast<std::size_t>(e)] = true;
    std::vector<Vertex> evens;
    for (Vertex v = 0; v < g.vertex_count; ++v) {
        if (v == far) continue;
        int d = g.degree(v) - (v == side_anchor ? k : 0);
        if (d % 2 == 0) evens.push_back(v);
    }
    std::vector<int> join = tjoin_forest(g, tree_minus, evens);
    if (k % 2 == 0) join.push_back(far_tree_edge);
    std::sort(join.begin(), join.end());

    SubMultigraph forest = edge_sub_multigraph(g, join);
    EdgeColoring on_forest = forest_two_color(forest.graph);
    EdgeColoring coloring(static_cast<std::size_t>(g.edge_count()));
    for (int e = 0; e < g.edge_count(); ++e) {
        int fe = forest.edge_map[static_cast<std::size_t>(e)];
        if (fe != kNoIndex)
            coloring.colors[static_cast<std::size_t>(e)] =
                on_forest.colors[static_cast<std::size_t>(fe)];
        else
            coloring.colors[static_cast<std::size_t>(e)] =
                in_bundle[static_cast<std::size_t>(e)] ? 4 : 3;
    }
    return coloring;
}

struct BundleShape {
    Color common = kUncolored;   // color carried by all, or all but one, bundle edges
    int special = kNoIndex;      // the odd one out (original edge id), if any
    Color special_color = kUncolored;
};

inline BundleShape bundle_shape(const std::vector<int>& bundle_ids,
                                const std::vector<int>& edge_map, const EdgeColoring& side) {
    std::map<Color, std::vector<int>> by_color;
    for (int e : bundle_ids)
        by_color[side.colors[static_cast<std::size_t>(edge_map[static_cast<std::size_t>(e)])]]
            .push_back(e);
    BundleShape shape;
    if (by_color.size() == 1) {
        shape.common = by_color.begin()->first;
        return shape;
    }
    if (by_color.size() == 2) {
        for (auto& [c, es] : by_color) {
            if (es.size() == 1 && shape.special == kNoIndex) {
                shape.special = es[0];
                shape.special_color = c;
            } else {
                shape.common = c;
            }
        }
        if (shape.special != kNoIndex && shape.common != kUncolored) return shape;
    }
    throw internal_error("bridge merge: unexpected bundle color pattern");
}

} // namespace detail

// Odd coloring with at most 4 colors of a connected multigraph split by
// a bridge bundle.  Both sides are colored on their own, the side
// colorings are aligned on the bundle by a palette permutation, and any
// disagreement about which bundle edge is the singled-out one is fixed
// by swapping the colors of two parallel edges, which no vertex can
// notice.
inline EdgeColoring k_bridge_four_color(const BundledMultigraph& mg, const KBridge& bridge) {
    if (!multigraph_connected(mg))
        throw precondition_error("bridge coloring: graph must be connected");

    std::vector<Vertex> keep_u = bridge.side_u;
    keep_u.push_back(bridge.v);
    std::sort(keep_u.begin(), keep_u.end());
    std::vector<Vertex> keep_v = bridge.side_v;
    keep_v.push_back(bridge.u);
    std::sort(keep_v.begin(), keep_v.end());

    SubMultigraph sub_u = induced_sub_multigraph(mg, keep_u);
    SubMultigraph sub_v = induced_sub_multigraph(mg, keep_v);
    std::vector<int> bundle_u, bundle_v;
    for (int e : bridge.edge_ids) {
        bundle_u.push_back(sub_u.edge_map[static_cast<std::size_t>(e)]);
        bundle_v.push_back(sub_v.edge_map[static_cast<std::size_t>(e)]);
    }

    EdgeColoring col_u = detail::color_bridge_side(
        sub_u.graph, sub_u.vertex_map[static_cast<std::size_t>(bridge.u)],
        sub_u.vertex_map[static_cast<std::size_t>(bridge.v)], bundle_u);
    EdgeColoring col_v = detail::color_bridge_side(
        sub_v.graph, sub_v.vertex_map[static_cast<std::size_t>(bridge.v)],
        sub_v.vertex_map[static_cast<std::size_t>(bridge.u)], bundle_v);

    detail::BundleShape shape_u = detail::bundle_shape(bridge.edge_ids, sub_u.edge_map, col_u);
    detail::BundleShape shape_v = detail::bundle_shape(bridge.edge_ids, sub_v.edge_map, col_v);
    if ((shape_u.special == kNoIndex) != (shape_v.special == kNoIndex))
        throw internal_error("bridge merge: sides disagree on the bundle pattern");

    if (shape_v.special != kNoIndex && shape_v.special != shape_u.special) {
        int a = sub_v.edge_map[static_cast<std::size_t>(shape_v.special)];
        int b = sub_v.edge_map[static_cast<std::size_t>(shape_u.special)];
        std::swap(col_v.colors[static_cast<std::size_t>(a)],
                  col_v.colors[static_cast<std::size_t>(b)]);
        shape_v.special = shape_u.special;
    }

    std::array<Color, 5> perm{0, 0, 0, 0, 0};
    perm[static_cast<std::size_t>(shape_v.common)] = shape_u.common;
    if (shape_v.special != kNoIndex)
        perm[static_cast<std::size_t>(shape_v.special_color)] = shape_u.special_color;
    std::vector<bool> taken(5, false);
    for (Color c = 1; c <= 4; ++c)
        if (perm[static_cast<std::size_t>(c)] != 0)
            taken[static_cast<std::size_t>(perm[static_cast<std::size_t>(c)])] = true;
    for (Color c = 1; c <= 4; ++c) {
        if (perm[static_cast<std::size_t>(c)] != 0) continue;
        Color t = 1;
        while (taken[static_cast<std::size_t>(t)]) ++t;
        perm[static_cast<std::size_t>(c)] = t;
        taken[static_cast<std::size_t>(t)] = true;
    }
    col_v = permute_palette(col_v, perm);

    EdgeColoring coloring(static_cast<std::size_t>(mg.edge_count()));
    for (int e = 0; e < mg.edge_count(); ++e) {
        int eu = sub_u.edge_map[static_cast<std::size_t>(e)];
        int ev = sub_v.edge_map[static_cast<std::size_t>(e)];
        if (eu == kNoIndex && ev == kNoIndex)
            throw internal_error("bridge merge: edge escapes both sides");
        if (eu != kNoIndex && ev != kNoIndex &&
            col_u.colors[static_cast<std::size_t>(eu)] !=
                col_v.colors[static_cast<std::size_t>(ev)])
            throw internal_error("bridge merge: bundle colors fail to align");
        coloring.colors[static_cast<std::size_t>(e)] =
            eu != kNoIndex ? col_u.colors[static_cast<std::size_t>(eu)]
                           : col_v.colors[static_cast<std::size_t>(ev)];
    }
    return coloring;
}

// Odd coloring with at most 4 colors of a connected multigraph all of
// whose bundles have odd size: an odd coloring of the underlying simple
// graph lifts bundle-wise, since an odd number of odd bundles keeps
// every per-vertex count odd.
inline EdgeColoring odd_bundle_color(const BundledMultigraph& mg) {
    if (!multigraph_connected(mg))
        throw precondition_error("odd-bundle coloring: graph must be connected");
    std::vector<BundledMultigraph::Edge> simple_edges;
    std::vector<std::vector<int>> members;
    for (const auto& [key, ids] : mg.bundles()) {
        if (ids.size() % 2 == 0)
            throw precondition_error("odd-bundle coloring: bundle of even size");
        simple_edges.push_back({key.first, key.second});
        members.push_back(ids);
    }
    BundledMultigraph simple(mg.vertex_count, std::move(simple_edges));

    EdgeColoring on_simple;
    if (simple.vertex_count % 2 == 0) {
        on_simple = even_order_three_color(simple);
    } else {
        auto found = detail::find_odd_coloring(simple, 4);
        if (!found)
            throw internal_error("odd-bundle coloring: no 4-color odd coloring of a simple graph");
        on_simple = *found;
    }

    EdgeColoring coloring(static_cast<std::size_t>(mg.edge_count()));
    for (std::size_t b = 0; b < members.size(); ++b)
        for (int e : members[b])
            coloring.colors[static_cast<std::size_t>(e)] = on_simple.colors[b];
    return coloring;
}

// Odd coloring of one connected piece of a multigraph (isolated
// vertices may tag along).  Dispatch: even order three-colors; odd
// order with a bridge bundle splits there; odd order, bridgeless, all
// bundles odd lifts from the simple graph; the leftover shape falls
// back to a palette search, which past 4 colors is reported on stderr
// and past 6 refused.
inline EdgeColoring odd_color_component(const BundledMultigraph& mg) {
    if (mg.edge_count() == 0)
        throw precondition_error("odd coloring: component has no edges");
    if (!multigraph_connected_ignoring_isolated(mg))
        throw precondition_error("odd coloring: graph is not a single component");

    std::vector<Vertex> live;
    for (Vertex v = 0; v < mg.vertex_count; ++v)
        if (mg.degree(v) > 0) live.push_back(v);
    SubMultigraph sub = induced_sub_multigraph(mg, live);
    const BundledMultigraph& g = sub.graph;

    EdgeColoring colored;
    if (g.vertex_count % 2 == 0) {
        colored = even_order_three_color(g);
    } else if (auto bridge = find_k_bridge(g)) {
        colored = k_bridge_four_color(g, *bridge);
    } else {
        bool all_odd = true;
        for (const auto& [key, ids] : g.bundles())
            if (ids.size() % 2 == 0) all_odd = false;
        if (all_odd) {
            colored = odd_bundle_color(g);
        } else {
            std::optional<EdgeColoring> found;
            int palette = 0;
            for (int p = 1; p <= 6 && !found; ++p) {
                found = detail::find_odd_coloring(g, p);
                palette = p;
            }
            if (!found)
                throw bound_error("odd coloring: component needs more than 6 colors");
            if (palette > 4)
                std::cerr << "warning: odd coloring used " << palette << " colors\n";
            colored = *found;
        }
    }

    EdgeColoring coloring(static_cast<std::size_t>(mg.edge_count()));
    for (int e = 0; e < mg.edge_count(); ++e)
        coloring.colors[static_cast<std::size_t>(e)] =
            colored.colors[static_cast<std::size_t>(sub.edge_map[static_cast<std::size_t>(e)])];
    return coloring;
}

} // namespace fpec
