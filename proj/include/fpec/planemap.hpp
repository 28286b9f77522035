#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "fpec/coloring.hpp"
#include "fpec/error.hpp"
#include "fpec/multigraph.hpp"

namespace fpec {

using HalfEdge = int;

inline HalfEdge twin(HalfEdge h) { return h ^ 1; }
inline EdgeId edge_of(HalfEdge h) { return h >> 1; }
inline HalfEdge half(EdgeId e, int side) { return 2 * e + side; }

struct FacialWalk {
    int id = kNoIndex;
    std::vector<HalfEdge> half_edges; // cyclic, starts at the lowest half-edge of the orbit
};

// Plane multigraph as a rotation system.  Edge e owns half-edges 2e and
// 2e+1; twin(h) = h^1.  Each vertex stores its incident half-edges in
// clockwise order.  The facial successor of h is the rotation successor
// of twin(h), so facial walks are the orbits of that successor map.
// Loops are rejected.  Construction validates the half-edge partition
// and the Euler relation per component.
class PlaneMap {
public:
    explicit PlaneMap(std::vector<std::vector<HalfEdge>> rotations)
        : rotation_(std::move(rotations)) {
        build();
    }

    int vertex_count() const { return static_cast<int>(rotation_.size()); }
    int edge_count() const { return half_edge_count_ / 2; }
    int half_edge_count() const { return half_edge_count_; }
    int face_count() const { return static_cast<int>(faces_.size()); }
    int component_count() const { return component_count_; }
    bool connected() const { return component_count_ == 1; }

    Vertex vertex_of(HalfEdge h) const { return vertex_of_[static_cast<std::size_t>(h)]; }

    std::pair<Vertex, Vertex> endpoints(EdgeId e) const {
        return {vertex_of(half(e, 0)), vertex_of(half(e, 1))};
    }

    const std::vector<HalfEdge>& rotation(Vertex v) const {
        return rotation_[static_cast<std::size_t>(v)];
    }

    int degree(Vertex v) const { return static_cast<int>(rotation(v).size()); }

    HalfEdge rotation_next(HalfEdge h) const {
        Vertex v = vertex_of(h);
        const auto& rot = rotation_[static_cast<std::size_t>(v)];
        std::size_t p = static_cast<std::size_t>(pos_in_rotation_[static_cast<std::size_t>(h)]);
        return rot[(p + 1) % rot.size()];
    }

    HalfEdge face_successor(HalfEdge h) const { return rotation_next(twin(h)); }

    int face_of(HalfEdge h) const { return face_of_[static_cast<std::size_t>(h)]; }

    const std::vector<FacialWalk>& facial_walks() const { return faces_; }

    // (face left of half 2e, face left of half 2e+1)
    std::pair<int, int> faces_of_edge(EdgeId e) const {
        return {face_of(half(e, 0)), face_of(half(e, 1))};
    }

    bool is_bridge(EdgeId e) const {
        auto [a, b] = faces_of_edge(e);
        return a == b;
    }

    bool bridgeless() const {
        for (EdgeId e = 0; e < edge_count(); ++e)
            if (is_bridge(e)) return false;
        return true;
    }

    bool two_edge_connected() const { return connected() && bridgeless(); }

    int component_of(Vertex v) const { return component_of_[static_cast<std::size_t>(v)]; }

private:
    std::vector<std::vector<HalfEdge>> rotation_;
    std::vector<Vertex> vertex_of_;
    std::vector<int> pos_in_rotation_;
    std::vector<int> face_of_;
    std::vector<FacialWalk> faces_;
    std::vector<int> component_of_;
    int half_edge_count_ = 0;
    int component_count_ = 0;

    void build() {
        std::size_t total = 0;
        for (const auto& rot : rotation_) total += rot.size();
        if (total % 2 != 0) throw precondition_error("plane map: odd number of half-edges");
        half_edge_count_ = static_cast<int>(total);

        vertex_of_.assign(total, kNoIndex);
        pos_in_rotation_.assign(total, kNoIndex);
        for (Vertex v = 0; v < vertex_count(); ++v) {
            const auto& rot = rotation_[static_cast<std::size_t>(v)];
            for (std::size_t p = 0; p < rot.size(); ++p) {
                HalfEdge h = rot[p];
                if (h < 0 || h >= half_edge_count_)
                    throw precondition_error("plane map: half-edge id " + std::to_string(h) +
                                             " out of range");
                if (vertex_of_[static_cast<std::size_t>(h)] != kNoIndex)
                    throw precondition_error("plane map: duplicate half-edge id " +
                                             std::to_string(h));
                vertex_of_[static_cast<std::size_t>(h)] = v;
                pos_in_rotation_[static_cast<std::size_t>(h)] = static_cast<int>(p);
            }
        }
        for (HalfEdge h = 0; h < half_edge_count_; ++h)
            if (vertex_of_[static_cast<std::size_t>(h)] == kNoIndex)
                throw precondition_error("plane map: half-edge id " + std::to_string(h) +
                                         " missing from rotations");
        for (EdgeId e = 0; e < edge_count(); ++e)
            if (vertex_of(half(e, 0)) == vertex_of(half(e, 1)))
                throw precondition_error("plane map: loop at edge " + std::to_string(e));

        // Facial walks: orbit scan in ascending half-edge order, so every
        // walk starts at its lowest half-edge and ids follow that order.
        face_of_.assign(total, kNoIndex);
        for (HalfEdge h0 = 0; h0 < half_edge_count_; ++h0) {
            if (face_of_[static_cast<std::size_t>(h0)] != kNoIndex) continue;
            FacialWalk walk;
            walk.id = static_cast<int>(faces_.size());
            HalfEdge h = h0;
            do {
                face_of_[static_cast<std::size_t>(h)] = walk.id;
                walk.half_edges.push_back(h);
                h = face_successor(h);
            } while (h != h0);
            faces_.push_back(std::move(walk));
        }

        // Components over vertices; isolated vertices form their own.
        component_of_.assign(static_cast<std::size_t>(vertex_count()), kNoIndex);
        component_count_ = 0;
        for (Vertex s = 0; s < vertex_count(); ++s) {
            if (component_of_[static_cast<std::size_t>(s)] != kNoIndex) continue;
            component_of_[static_cast<std::size_t>(s)] = component_count_;
            std::queue<Vertex> q;
            q.push(s);
            while (!q.empty()) {
                Vertex v = q.front();
                q.pop();
                for (HalfEdge h : rotation_[static_cast<std::size_t>(v)]) {
                    Vertex w = vertex_of(twin(h));
                    if (component_of_[static_cast<std::size_t>(w)] == kNoIndex) {
                        component_of_[static_cast<std::size_t>(w)] = component_count_;
                        q.push(w);
                    }
                }
            }
            ++component_count_;
        }

        // Euler relation, per component: V - E + F = 2 for every component
        // carrying edges, and an isolated vertex contributes 1.
        int isolated = 0;
        std::set<int> edged;
        for (Vertex v = 0; v < vertex_count(); ++v) {
            if (rotation_[static_cast<std::size_t>(v)].empty()) ++isolated;
            else edged.insert(component_of_[static_cast<std::size_t>(v)]);
        }
        long expected = 2L * static_cast<long>(edged.size()) + isolated;
        long euler = static_cast<long>(vertex_count()) - edge_count() + face_count();
        if (euler != expected)
            throw precondition_error("plane map: Euler check failed (V-E+F = " +
                                     std::to_string(euler) + ", expected " +
                                     std::to_string(expected) + "); not a plane embedding");
    }
};

// ---------------------------------------------------------------------
// PMAP text format.
//
//   pmap <V> <E>
//   v <id> : <half-edge ids in clockwise order>
//
// '#' starts a comment; blank lines are skipped.  Vertex ids must be
// dense and each listed exactly once.

inline PlaneMap parse_pmap(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    int nv = -1, ne = -1;
    std::vector<std::vector<HalfEdge>> rotations;
    std::vector<bool> seen;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.erase(hash);
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok)) continue;
        if (tok == "pmap") {
            if (nv != -1) throw parse_error("pmap line " + std::to_string(lineno) +
                                            ": repeated header");
            if (!(ls >> nv >> ne) || nv < 0 || ne < 0)
                throw parse_error("pmap line " + std::to_string(lineno) + ": bad header");
            std::string extra;
            if (ls >> extra) throw parse_error("pmap line " + std::to_string(lineno) +
                                               ": trailing tokens after header");
            rotations.assign(static_cast<std::size_t>(nv), {});
            seen.assign(static_cast<std::size_t>(nv), false);
        } else if (tok == "v") {
            if (nv == -1) throw parse_error("pmap line " + std::to_string(lineno) +
                                            ": vertex line before header");
            int id;
            std::string colon;
            if (!(ls >> id >> colon) || colon != ":")
                throw parse_error("pmap line " + std::to_string(lineno) + ": bad vertex line");
            if (id < 0 || id >= nv)
                throw parse_error("pmap line " + std::to_string(lineno) +
                                  ": vertex id out of range");
            if (seen[static_cast<std::size_t>(id)])
                throw parse_error("pmap line " + std::to_string(lineno) +
                                  ": repeated vertex " + std::to_string(id));
            seen[static_cast<std::size_t>(id)] = true;
            HalfEdge h;
            while (ls >> h) rotations[static_cast<std::size_t>(id)].push_back(h);
            if (!ls.eof())
                throw parse_error("pmap line " + std::to_string(lineno) +
                                  ": non-numeric half-edge id");
        } else {
            throw parse_error("pmap line " + std::to_string(lineno) + ": unknown keyword '" +
                              tok + "'");
        }
    }
    if (nv == -1) throw parse_error("pmap: missing header");
    for (int id = 0; id < nv; ++id)
        if (!seen[static_cast<std::size_t>(id)])
            throw parse_error("pmap: vertex " + std::to_string(id) + " has no rotation line");
    std::size_t total = 0;
    for (const auto& rot : rotations) total += rot.size();
    if (total != 2 * static_cast<std::size_t>(ne))
        throw parse_error("pmap: header announces " + std::to_string(ne) + " edges but " +
                          std::to_string(total) + " half-edge ids are listed");
    try {
        return PlaneMap(std::move(rotations));
    } catch (const precondition_error& err) {
        throw parse_error(std::string("pmap: ") + err.what());
    }
}

inline std::string serialize_pmap(const PlaneMap& g) {
    std::ostringstream out;
    out << "pmap " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        out << "v " << v << " :";
        for (HalfEdge h : g.rotation(v)) out << ' ' << h;
        out << '\n';
    }
    return out.str();
}

// ---------------------------------------------------------------------
// Face structure queries.

// Unordered pairs of distinct edges that appear consecutively on some
// facial walk, sorted and deduplicated.
inline std::vector<std::pair<EdgeId, EdgeId>> face_adjacent_pairs(const PlaneMap& g) {
    std::set<std::pair<EdgeId, EdgeId>> pairs;
    for (const FacialWalk& w : g.facial_walks()) {
        std::size_t len = w.half_edges.size();
        for (std::size_t i = 0; i < len; ++i) {
            EdgeId a = edge_of(w.half_edges[i]);
            EdgeId b = edge_of(w.half_edges[(i + 1) % len]);
            if (a == b) continue;
            pairs.insert(std::minmax(a, b));
        }
    }
    return {pairs.begin(), pairs.end()};
}

// Edges shared by faces f1 and f2 in the cyclic order in which they
// appear on the walk of f1, rotated so the lowest edge id comes first.
inline std::vector<EdgeId> common_edges_in_walk_order(const PlaneMap& g, int f1, int f2) {
    if (f1 == f2) throw precondition_error("common edges: faces must be distinct");
    if (f1 < 0 || f2 < 0 || f1 >= g.face_count() || f2 >= g.face_count())
        throw precondition_error("common edges: face id out of range");
    std::vector<EdgeId> out;
    for (HalfEdge h : g.facial_walks()[static_cast<std::size_t>(f1)].half_edges)
        if (g.face_of(twin(h)) == f2) out.push_back(edge_of(h));
    if (out.empty()) return out;
    auto lowest = std::min_element(out.begin(), out.end());
    std::rotate(out.begin(), lowest, out.end());
    return out;
}

// All adjacent face pairs with their common edges (in walk order of the
// lower face id, lowest edge first).
inline std::map<std::pair<int, int>, std::vector<EdgeId>> adjacent_face_commons(
    const PlaneMap& g) {
    std::map<std::pair<int, int>, std::vector<EdgeId>> commons;
    std::set<std::pair<int, int>> pairs;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.faces_of_edge(e);
        if (a != b) pairs.insert(std::minmax(a, b));
    }
    for (auto [a, b] : pairs) commons[{a, b}] = common_edges_in_walk_order(g, a, b);
    return commons;
}

// Simple graph on the edge ids of g, adjacent when face-adjacent.  Its
// proper vertex colorings are exactly the facially proper edge
// colorings of g.  Planar for every plane map.
inline BundledMultigraph medial_adjacency_graph(const PlaneMap& g) {
    std::vector<BundledMultigraph::Edge> es;
    for (auto [a, b] : face_adjacent_pairs(g)) es.push_back({a, b});
    return BundledMultigraph(g.edge_count(), std::move(es));
}

// Abstract multigraph underlying g; labels are the edge ids.
inline BundledMultigraph abstract_multigraph(const PlaneMap& g) {
    std::vector<BundledMultigraph::Edge> es;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        es.push_back({u, v});
    }
    return BundledMultigraph(g.vertex_count(), std::move(es));
}

// ---------------------------------------------------------------------
// Map surgery.  Every operation relabels ids densely and reports the
// correspondence, since callers thread colorings across the rewrite.

struct MapTransform {
    PlaneMap map;
    std::vector<EdgeId> edge_map;   // old edge id -> new edge id, kNoIndex if removed
    std::vector<Vertex> vertex_map; // old vertex id -> new vertex id
};

// Contract edge e, merging its endpoints and splicing their rotations
// at the removed half-edge slots.  Refuses when a parallel edge would
// become a loop.
inline MapTransform contract_edge(const PlaneMap& g, EdgeId e) {
    if (e < 0 || e >= g.edge_count()) throw precondition_error("contract: edge id out of range");
    auto [u, v] = g.endpoints(e);
    std::vector<EdgeId> offenders;
    for (EdgeId x = 0; x < g.edge_count(); ++x) {
        if (x == e) continue;
        auto [a, b] = g.endpoints(x);
        if ((a == u && b == v) || (a == v && b == u)) offenders.push_back(x);
    }
    if (!offenders.empty()) {
        std::string ids;
        for (EdgeId x : offenders) ids += ' ' + std::to_string(x);
        throw precondition_error("contract: edges parallel to " + std::to_string(e) +
                                 " would become loops:" + ids);
    }

    Vertex keep = std::min(u, v), drop = std::max(u, v);
    std::vector<Vertex> vmap(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex x = 0; x < g.vertex_count(); ++x)
        vmap[static_cast<std::size_t>(x)] = x - (x > drop ? 1 : 0);
    vmap[static_cast<std::size_t>(drop)] = vmap[static_cast<std::size_t>(keep)];

    std::vector<EdgeId> emap(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId x = 0; x < g.edge_count(); ++x)
        emap[static_cast<std::size_t>(x)] = x - (x > e ? 1 : 0);
    emap[static_cast<std::size_t>(e)] = kNoIndex;

    auto relabel = [&](HalfEdge h) { return half(emap[static_cast<std::size_t>(edge_of(h))], h & 1); };
    auto others_after = [&](Vertex at, HalfEdge skip) {
        const auto& rot = g.rotation(at);
        std::size_t n = rot.size();
        std::size_t p = 0;
        while (rot[p] != skip) ++p;
        std::vector<HalfEdge> out;
        for (std::size_t i = 1; i < n; ++i) out.push_back(rot[(p + i) % n]);
        return out;
    };

    std::vector<std::vector<HalfEdge>> rotations(static_cast<std::size_t>(g.vertex_count()) - 1);
    HalfEdge hu = g.vertex_of(half(e, 0)) == u ? half(e, 0) : half(e, 1);
    HalfEdge hv = twin(hu);
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        if (x == u || x == v) continue;
        auto& rot = rotations[static_cast<std::size_t>(vmap[static_cast<std::size_t>(x)])];
        for (HalfEdge h : g.rotation(x)) rot.push_back(relabel(h));
    }
    auto& merged = rotations[static_cast<std::size_t>(vmap[static_cast<std::size_t>(keep)])];
    for (HalfEdge h : others_after(u, hu)) merged.push_back(relabel(h));
    for (HalfEdge h : others_after(v, hv)) merged.push_back(relabel(h));

    return MapTransform{PlaneMap(std::move(rotations)), std::move(emap), std::move(vmap)};
}

// Delete edge e, keeping every vertex.
inline MapTransform delete_edge(const PlaneMap& g, EdgeId e) {
    if (e < 0 || e >= g.edge_count()) throw precondition_error("delete: edge id out of range");
    std::vector<EdgeId> emap(static_cast<std::size_t>(g.edge_count()));
    for (EdgeId x = 0; x < g.edge_count(); ++x)
        emap[static_cast<std::size_t>(x)] = x - (x > e ? 1 : 0);
    emap[static_cast<std::size_t>(e)] = kNoIndex;
    std::vector<Vertex> vmap(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex x = 0; x < g.vertex_count(); ++x) vmap[static_cast<std::size_t>(x)] = x;

    std::vector<std::vector<HalfEdge>> rotations(static_cast<std::size_t>(g.vertex_count()));
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        for (HalfEdge h : g.rotation(x)) {
            if (edge_of(h) == e) continue;
            rotations[static_cast<std::size_t>(x)].push_back(
                half(emap[static_cast<std::size_t>(edge_of(h))], h & 1));
        }
    }
    return MapTransform{PlaneMap(std::move(rotations)), std::move(emap), std::move(vmap)};
}

// Contract the connected induced subgraph on vs to a single vertex.
// Internal non-tree edges are deleted first (they would close up into
// loops), then a spanning tree of g[vs] is contracted edge by edge.
inline MapTransform contract_subgraph(const PlaneMap& g, const std::vector<Vertex>& vs) {
    if (vs.empty()) throw precondition_error("contract subgraph: empty vertex set");
    std::vector<bool> in(static_cast<std::size_t>(g.vertex_count()), false);
    for (Vertex v : vs) {
        if (v < 0 || v >= g.vertex_count())
            throw precondition_error("contract subgraph: vertex out of range");
        in[static_cast<std::size_t>(v)] = true;
    }
    std::vector<EdgeId> internal;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        if (in[static_cast<std::size_t>(a)] && in[static_cast<std::size_t>(b)])
            internal.push_back(e);
    }

    // Spanning tree of g[vs] by BFS from the lowest vertex.
    std::vector<BundledMultigraph::Edge> sub;
    for (EdgeId e : internal) {
        auto [a, b] = g.endpoints(e);
        sub.push_back({a, b});
    }
    std::vector<bool> reach(static_cast<std::size_t>(g.vertex_count()), false);
    std::vector<EdgeId> tree;
    {
        Vertex s = *std::min_element(vs.begin(), vs.end());
        reach[static_cast<std::size_t>(s)] = true;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (std::size_t i = 0; i < internal.size(); ++i) {
                auto [a, b] = g.endpoints(internal[i]);
                Vertex w = a == v ? b : (b == v ? a : kNoIndex);
                if (w == kNoIndex || reach[static_cast<std::size_t>(w)]) continue;
                reach[static_cast<std::size_t>(w)] = true;
                tree.push_back(internal[i]);
                q.push(w);
            }
        }
    }
    for (Vertex v : vs)
        if (!reach[static_cast<std::size_t>(v)])
            throw precondition_error("contract subgraph: induced subgraph is disconnected");

    // Compose the per-edge rewrites.
    std::vector<EdgeId> emap(static_cast<std::size_t>(g.edge_count()));
    std::vector<Vertex> vmap(static_cast<std::size_t>(g.vertex_count()));
    for (EdgeId x = 0; x < g.edge_count(); ++x) emap[static_cast<std::size_t>(x)] = x;
    for (Vertex x = 0; x < g.vertex_count(); ++x) vmap[static_cast<std::size_t>(x)] = x;

    std::optional<PlaneMap> cur(g);
    std::set<EdgeId> tree_set(tree.begin(), tree.end());
    auto apply = [&](MapTransform t) {
        for (EdgeId x = 0; x < g.edge_count(); ++x) {
            EdgeId c = emap[static_cast<std::size_t>(x)];
            if (c != kNoIndex) emap[static_cast<std::size_t>(x)] = t.edge_map[static_cast<std::size_t>(c)];
        }
        for (Vertex x = 0; x < g.vertex_count(); ++x)
            vmap[static_cast<std::size_t>(x)] =
                t.vertex_map[static_cast<std::size_t>(vmap[static_cast<std::size_t>(x)])];
        cur.emplace(std::move(t.map));
    };
    for (EdgeId e : internal) {
        if (tree_set.count(e)) continue;
        apply(delete_edge(*cur, emap[static_cast<std::size_t>(e)]));
    }
    for (EdgeId e : tree) apply(contract_edge(*cur, emap[static_cast<std::size_t>(e)]));

    return MapTransform{std::move(*cur), std::move(emap), std::move(vmap)};
}

// ---------------------------------------------------------------------
// Connectivity structure.

struct BlockDecomposition {
    std::vector<std::vector<EdgeId>> block_edges; // each sorted ascending
    std::vector<bool> is_c5;                      // block is a simple 5-cycle
    std::vector<Vertex> cut_vertices;             // ascending
};

// Biconnected components of the abstract multigraph via DFS lowpoints.
// Parallel edges are distinct, so a digon is 2-connected, not a bridge.
inline BlockDecomposition blocks(const PlaneMap& g) {
    int n = g.vertex_count();
    int m = g.edge_count();
    std::vector<std::vector<int>> inc(static_cast<std::size_t>(n));
    for (EdgeId e = 0; e < m; ++e) {
        auto [u, v] = g.endpoints(e);
        inc[static_cast<std::size_t>(u)].push_back(e);
        inc[static_cast<std::size_t>(v)].push_back(e);
    }

    std::vector<int> disc(static_cast<std::size_t>(n), 0), low(static_cast<std::size_t>(n), 0);
    std::vector<bool> cut(static_cast<std::size_t>(n), false);
    std::vector<bool> edge_seen(static_cast<std::size_t>(m), false);
    std::vector<EdgeId> estk;
    BlockDecomposition out;
    int timer = 0;

    struct Frame {
        Vertex v;
        EdgeId parent_edge;
        std::size_t next = 0;
        int children = 0;
    };

    auto other_end = [&](EdgeId e, Vertex at) {
        auto [a, b] = g.endpoints(e);
        return a == at ? b : a;
    };
    auto pop_block = [&](EdgeId until) {
        std::vector<EdgeId> blk;
        while (true) {
            EdgeId top = estk.back();
            estk.pop_back();
            blk.push_back(top);
            if (top == until) break;
        }
        std::sort(blk.begin(), blk.end());
        std::set<Vertex> verts;
        for (EdgeId e : blk) {
            auto [a, b] = g.endpoints(e);
            verts.insert(a);
            verts.insert(b);
        }
        bool c5 = blk.size() == 5 && verts.size() == 5;
        if (c5) {
            std::map<Vertex, int> deg;
            for (EdgeId e : blk) {
                auto [a, b] = g.endpoints(e);
                ++deg[a];
                ++deg[b];
            }
            for (auto [v, d] : deg)
                if (d != 2) c5 = false;
        }
        out.block_edges.push_back(std::move(blk));
        out.is_c5.push_back(c5);
    };

    for (Vertex root = 0; root < n; ++root) {
        if (disc[static_cast<std::size_t>(root)] != 0) continue;
        std::vector<Frame> stack;
        stack.push_back({root, kNoIndex});
        disc[static_cast<std::size_t>(root)] = low[static_cast<std::size_t>(root)] = ++timer;
        int root_children = 0;
        while (!stack.empty()) {
            Frame& fr = stack.back();
            if (fr.next < inc[static_cast<std::size_t>(fr.v)].size()) {
                EdgeId e = inc[static_cast<std::size_t>(fr.v)][fr.next++];
                if (e == fr.parent_edge || edge_seen[static_cast<std::size_t>(e)]) continue;
                Vertex w = other_end(e, fr.v);
                if (disc[static_cast<std::size_t>(w)] == 0) {
                    edge_seen[static_cast<std::size_t>(e)] = true;
                    estk.push_back(e);
                    disc[static_cast<std::size_t>(w)] = low[static_cast<std::size_t>(w)] = ++timer;
                    stack.push_back({w, e});
                } else if (disc[static_cast<std::size_t>(w)] < disc[static_cast<std::size_t>(fr.v)]) {
                    edge_seen[static_cast<std::size_t>(e)] = true;
                    estk.push_back(e);
                    low[static_cast<std::size_t>(fr.v)] =
                        std::min(low[static_cast<std::size_t>(fr.v)],
                                 disc[static_cast<std::size_t>(w)]);
                }
            } else {
                Frame done = fr;
                stack.pop_back();
                if (stack.empty()) {
                    if (root_children >= 2) cut[static_cast<std::size_t>(done.v)] = true;
                    break;
                }
                Frame& par = stack.back();
                low[static_cast<std::size_t>(par.v)] =
                    std::min(low[static_cast<std::size_t>(par.v)],
                             low[static_cast<std::size_t>(done.v)]);
                if (par.parent_edge == kNoIndex) ++root_children;
                if (low[static_cast<std::size_t>(done.v)] >=
                    disc[static_cast<std::size_t>(par.v)]) {
                    if (par.parent_edge != kNoIndex) cut[static_cast<std::size_t>(par.v)] = true;
                    pop_block(done.parent_edge);
                }
            }
        }
    }
    for (Vertex v = 0; v < n; ++v)
        if (cut[static_cast<std::size_t>(v)]) out.cut_vertices.push_back(v);
    return out;
}

struct EdgeCut {
    bool is_cut = false;
    bool nontrivial = false;
    std::vector<Vertex> side1; // component of the lowest vertex
    std::vector<Vertex> side2;
};

// Does removing {e1, e2} disconnect g?  Sides are reported when it does;
// nontrivial means both sides have at least two vertices.
inline EdgeCut is_nontrivial_edge_cut(const PlaneMap& g, EdgeId e1, EdgeId e2) {
    if (!g.connected()) throw precondition_error("edge cut: map must be connected");
    if (e1 == e2) throw precondition_error("edge cut: edges must be distinct");
    std::vector<bool> seen(static_cast<std::size_t>(g.vertex_count()), false);
    std::queue<Vertex> q;
    seen[0] = true;
    q.push(0);
    while (!q.empty()) {
        Vertex v = q.front();
        q.pop();
        for (HalfEdge h : g.rotation(v)) {
            if (edge_of(h) == e1 || edge_of(h) == e2) continue;
            Vertex w = g.vertex_of(twin(h));
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = true;
                q.push(w);
            }
        }
    }
    EdgeCut cut;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        (seen[static_cast<std::size_t>(v)] ? cut.side1 : cut.side2).push_back(v);
    cut.is_cut = !cut.side2.empty();
    cut.nontrivial = cut.is_cut && cut.side1.size() >= 2 && cut.side2.size() >= 2;
    return cut;
}

// ---------------------------------------------------------------------
// Induced submaps and cut-vertex splits.

struct SubmapResult {
    PlaneMap map;
    std::vector<EdgeId> edge_map;   // g edge id -> submap edge id, kNoIndex if absent
    std::vector<Vertex> vertex_map; // g vertex id -> submap vertex id, kNoIndex if absent
};

inline SubmapResult induced_submap(const PlaneMap& g, const std::vector<Vertex>& keep) {
    std::vector<bool> in(static_cast<std::size_t>(g.vertex_count()), false);
    for (Vertex v : keep) {
        if (v < 0 || v >= g.vertex_count())
            throw precondition_error("induced submap: vertex out of range");
        in[static_cast<std::size_t>(v)] = true;
    }
    std::vector<Vertex> vmap(static_cast<std::size_t>(g.vertex_count()), kNoIndex);
    int nv = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        if (in[static_cast<std::size_t>(v)]) vmap[static_cast<std::size_t>(v)] = nv++;
    std::vector<EdgeId> emap(static_cast<std::size_t>(g.edge_count()), kNoIndex);
    int ne = 0;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [a, b] = g.endpoints(e);
        if (in[static_cast<std::size_t>(a)] && in[static_cast<std::size_t>(b)])
            emap[static_cast<std::size_t>(e)] = ne++;
    }
    std::vector<std::vector<HalfEdge>> rotations(static_cast<std::size_t>(nv));
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!in[static_cast<std::size_t>(v)]) continue;
        auto& rot = rotations[static_cast<std::size_t>(vmap[static_cast<std::size_t>(v)])];
        for (HalfEdge h : g.rotation(v)) {
            EdgeId ne2 = emap[static_cast<std::size_t>(edge_of(h))];
            if (ne2 != kNoIndex) rot.push_back(half(ne2, h & 1));
        }
    }
    return SubmapResult{PlaneMap(std::move(rotations)), std::move(emap), std::move(vmap)};
}

struct CutSplit {
    SubmapResult side1; // one component of g - v, plus v
    SubmapResult side2; // the rest, plus v
    // Face-adjacent pairs of g that straddle the split, by g's edge ids.
    EdgeId e1 = kNoIndex, e1_other = kNoIndex; // e1 in side1, e1_other in side2
    EdgeId e2 = kNoIndex, e2_other = kNoIndex;
};

// Split g at cut vertex v.  Side 1 is a component of g - v whose
// edge-ends occupy a contiguous arc of v's rotation; such a component
// always exists in a plane map since components nest without
// interleaving.  The two cross pairs sit at the ends of that arc.
inline CutSplit split_at_cut_vertex(const PlaneMap& g, Vertex v) {
    if (v < 0 || v >= g.vertex_count())
        throw precondition_error("cut split: vertex out of range");
    if (!g.connected()) throw precondition_error("cut split: map must be connected");

    // Components of g - v.
    std::vector<int> comp(static_cast<std::size_t>(g.vertex_count()), kNoIndex);
    int ncomp = 0;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        if (s == v || comp[static_cast<std::size_t>(s)] != kNoIndex) continue;
        comp[static_cast<std::size_t>(s)] = ncomp;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            for (HalfEdge h : g.rotation(x)) {
                Vertex w = g.vertex_of(twin(h));
                if (w == v || comp[static_cast<std::size_t>(w)] != kNoIndex) continue;
                comp[static_cast<std::size_t>(w)] = ncomp;
                q.push(w);
            }
        }
        ++ncomp;
    }
    if (ncomp < 2) throw precondition_error("cut split: vertex " + std::to_string(v) +
                                            " is not a cut vertex");

    const auto& rot = g.rotation(v);
    std::size_t d = rot.size();
    auto comp_at = [&](std::size_t p) {
        return comp[static_cast<std::size_t>(g.vertex_of(twin(rot[p])))];
    };

    // First component whose arc in the rotation is cyclically contiguous.
    int chosen = kNoIndex;
    std::size_t arc_start = 0, arc_len = 0;
    for (int c = 0; c < ncomp && chosen == kNoIndex; ++c) {
        std::size_t count = 0;
        for (std::size_t p = 0; p < d; ++p)
            if (comp_at(p) == c) ++count;
        for (std::size_t p = 0; p < d; ++p) {
            if (comp_at(p) != c || comp_at((p + d - 1) % d) == c) continue;
            // p starts a run of component c; contiguous iff the run covers all of c.
            std::size_t run = 0;
            while (run < d && comp_at((p + run) % d) == c) ++run;
            if (run == count) {
                chosen = c;
                arc_start = p;
                arc_len = run;
            }
            break;
        }
    }
    if (chosen == kNoIndex)
        throw internal_error("cut split: no component occupies a contiguous arc");

    std::size_t arc_end = (arc_start + arc_len - 1) % d;
    std::vector<Vertex> keep1{v}, keep2{v};
    for (Vertex x = 0; x < g.vertex_count(); ++x) {
        if (x == v) continue;
        (comp[static_cast<std::size_t>(x)] == chosen ? keep1 : keep2).push_back(x);
    }
    return CutSplit{induced_submap(g, keep1),
                    induced_submap(g, keep2),
                    edge_of(rot[arc_start]),
                    edge_of(rot[(arc_start + d - 1) % d]),
                    edge_of(rot[arc_end]),
                    edge_of(rot[(arc_end + 1) % d])};
}

// ---------------------------------------------------------------------
// Dual restricted to one color class.

// Vertices are the faces of g; for every edge of color c an edge joins
// its two sides, labeled by the primal edge id.  Bridgeless input keeps
// the result loopless.
inline BundledMultigraph dual_restricted(const PlaneMap& g, const EdgeColoring& coloring,
                                         Color c) {
    if (coloring.colors.size() != static_cast<std::size_t>(g.edge_count()))
        throw precondition_error("dual: coloring size does not match edge count");
    if (!g.connected()) throw precondition_error("dual: map must be connected");
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        if (g.is_bridge(e))
            throw precondition_error("dual: bridge at edge " + std::to_string(e) +
                                     " (same face on both sides)");
    std::vector<BundledMultigraph::Edge> es;
    std::vector<long> labels;
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        if (coloring.colors[static_cast<std::size_t>(e)] != c) continue;
        auto [a, b] = g.faces_of_edge(e);
        es.push_back({a, b});
        labels.push_back(e);
    }
    return BundledMultigraph(g.face_count(), std::move(es), std::move(labels));
}

} // namespace fpec
