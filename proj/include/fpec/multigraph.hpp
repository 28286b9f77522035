#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <utility>
#include <vector>

#include "fpec/error.hpp"

namespace fpec {

using Vertex = int;
using EdgeId = int;

inline constexpr int kNoIndex = -1;

// Loopless multigraph with explicit parallel edges.  Vertices are dense
// 0..n-1; edges are dense 0..m-1 and carry an optional external label so
// subgraphs and duals can refer back to the edges they came from.
struct BundledMultigraph {
    struct Edge {
        Vertex u = kNoIndex;
        Vertex v = kNoIndex;
    };

    int vertex_count = 0;
    std::vector<Edge> edges;
    std::vector<long> labels; // parallel to edges; defaults to the edge index

    BundledMultigraph() = default;

    BundledMultigraph(int n, std::vector<Edge> es) : vertex_count(n), edges(std::move(es)) {
        labels.resize(edges.size());
        for (std::size_t i = 0; i < edges.size(); ++i) labels[i] = static_cast<long>(i);
        validate();
    }

    BundledMultigraph(int n, std::vector<Edge> es, std::vector<long> ls)
        : vertex_count(n), edges(std::move(es)), labels(std::move(ls)) {
        if (labels.size() != edges.size())
            throw precondition_error("multigraph: label list does not match edge list");
        validate();
    }

    int edge_count() const { return static_cast<int>(edges.size()); }

    void validate() const {
        for (const Edge& e : edges) {
            if (e.u < 0 || e.u >= vertex_count || e.v < 0 || e.v >= vertex_count)
                throw precondition_error("multigraph: edge endpoint out of range");
            if (e.u == e.v) throw precondition_error("multigraph: loop edge");
        }
    }

    std::vector<std::vector<int>> incidence() const {
        std::vector<std::vector<int>> inc(vertex_count);
        for (int i = 0; i < edge_count(); ++i) {
            inc[edges[i].u].push_back(i);
            inc[edges[i].v].push_back(i);
        }
        return inc;
    }

    int degree(Vertex v) const {
        int d = 0;
        for (const Edge& e : edges)
            if (e.u == v || e.v == v) ++d;
        return d;
    }

    // Parallel classes, keyed by the normalized endpoint pair.
    std::map<std::pair<Vertex, Vertex>, std::vector<int>> bundles() const {
        std::map<std::pair<Vertex, Vertex>, std::vector<int>> out;
        for (int i = 0; i < edge_count(); ++i) {
            auto key = std::minmax(edges[i].u, edges[i].v);
            out[{key.first, key.second}].push_back(i);
        }
        return out;
    }
};

// Component id per vertex, ids assigned in order of the lowest vertex
// in each component.  skip_edge marks edges to ignore.
inline std::vector<int> multigraph_components(const BundledMultigraph& g,
                                              const std::vector<bool>* skip_edge = nullptr) {
    std::vector<int> comp(g.vertex_count, kNoIndex);
    auto inc = g.incidence();
    int next = 0;
    for (Vertex s = 0; s < g.vertex_count; ++s) {
        if (comp[s] != kNoIndex) continue;
        comp[s] = next;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (int ei : inc[v]) {
                if (skip_edge && (*skip_edge)[ei]) continue;
                Vertex w = g.edges[ei].u == v ? g.edges[ei].v : g.edges[ei].u;
                if (comp[w] == kNoIndex) {
                    comp[w] = next;
                    q.push(w);
                }
            }
        }
        ++next;
    }
    return comp;
}

inline bool multigraph_connected(const BundledMultigraph& g) {
    if (g.vertex_count == 0) return true;
    auto comp = multigraph_components(g);
    return *std::max_element(comp.begin(), comp.end()) == 0;
}

// True when the non-isolated part of g is connected.  Dual restrictions
// carry zero-degree vertices that the odd colorers may ignore.
inline bool multigraph_connected_ignoring_isolated(const BundledMultigraph& g) {
    if (g.edges.empty()) return true;
    auto comp = multigraph_components(g);
    std::vector<bool> touched(g.vertex_count, false);
    for (const auto& e : g.edges) touched[e.u] = touched[e.v] = true;
    int id = kNoIndex;
    for (Vertex v = 0; v < g.vertex_count; ++v) {
        if (!touched[v]) continue;
        if (id == kNoIndex) id = comp[v];
        else if (comp[v] != id) return false;
    }
    return true;
}

// BFS spanning tree edge set, exploring vertices in id order from the
// lowest vertex of each component.  Deterministic.
inline std::vector<int> spanning_tree_edges(const BundledMultigraph& g) {
    std::vector<int> tree;
    std::vector<bool> seen(g.vertex_count, false);
    auto inc = g.incidence();
    for (auto& lst : inc) std::sort(lst.begin(), lst.end());
    for (Vertex s = 0; s < g.vertex_count; ++s) {
        if (seen[s]) continue;
        seen[s] = true;
        std::queue<Vertex> q;
        q.push(s);
        while (!q.empty()) {
            Vertex v = q.front();
            q.pop();
            for (int ei : inc[v]) {
                Vertex w = g.edges[ei].u == v ? g.edges[ei].v : g.edges[ei].u;
                if (!seen[w]) {
                    seen[w] = true;
                    tree.push_back(ei);
                    q.push(w);
                }
            }
        }
    }
    std::sort(tree.begin(), tree.end());
    return tree;
}

struct SubMultigraph {
    BundledMultigraph graph;
    std::vector<int> edge_map;      // g edge id -> sub edge id, kNoIndex if absent
    std::vector<Vertex> vertex_map; // g vertex id -> sub vertex id, kNoIndex if absent
};

// Subgraph induced on a vertex set; labels carry over.
inline SubMultigraph induced_sub_multigraph(const BundledMultigraph& g,
                                            const std::vector<Vertex>& keep) {
    std::vector<Vertex> vmap(g.vertex_count, kNoIndex);
    int nv = 0;
    for (Vertex v : keep) {
        if (v < 0 || v >= g.vertex_count)
            throw precondition_error("induced subgraph: vertex out of range");
        if (vmap[v] == kNoIndex) vmap[v] = nv++;
    }
    std::vector<int> emap(g.edges.size(), kNoIndex);
    std::vector<BundledMultigraph::Edge> es;
    std::vector<long> ls;
    for (int i = 0; i < g.edge_count(); ++i) {
        Vertex u = vmap[g.edges[i].u], v = vmap[g.edges[i].v];
        if (u == kNoIndex || v == kNoIndex) continue;
        emap[i] = static_cast<int>(es.size());
        es.push_back({u, v});
        ls.push_back(g.labels[i]);
    }
    return {BundledMultigraph(nv, std::move(es), std::move(ls)), std::move(emap),
            std::move(vmap)};
}

// Subgraph keeping every vertex but only the listed edges.
inline SubMultigraph edge_sub_multigraph(const BundledMultigraph& g,
                                         const std::vector<int>& keep_edges) {
    std::vector<int> emap(g.edges.size(), kNoIndex);
    std::vector<BundledMultigraph::Edge> es;
    std::vector<long> ls;
    for (int i : keep_edges) {
        if (i < 0 || i >= g.edge_count())
            throw precondition_error("edge subgraph: edge id out of range");
        if (emap[i] != kNoIndex) continue;
        emap[i] = static_cast<int>(es.size());
        es.push_back(g.edges[i]);
        ls.push_back(g.labels[i]);
    }
    std::vector<Vertex> vmap(g.vertex_count);
    for (Vertex v = 0; v < g.vertex_count; ++v) vmap[v] = v;
    return {BundledMultigraph(g.vertex_count, std::move(es), std::move(ls)), std::move(emap),
            std::move(vmap)};
}

// A bundle between u and v whose removal disconnects u from v.
struct KBridge {
    Vertex u = kNoIndex;
    Vertex v = kNoIndex;
    std::vector<int> edge_ids;        // the bundle, ascending
    std::vector<Vertex> side_u;       // vertices of the component of u after removal
    std::vector<Vertex> side_v;
};

// Lowest-endpoint bundle that forms a bridge, if any.
inline std::optional<KBridge> find_k_bridge(const BundledMultigraph& g) {
    for (const auto& [key, ids] : g.bundles()) {
        std::vector<bool> skip(g.edges.size(), false);
        for (int ei : ids) skip[ei] = true;
        auto comp = multigraph_components(g, &skip);
        if (comp[key.first] == comp[key.second]) continue;
        KBridge b;
        b.u = key.first;
        b.v = key.second;
        b.edge_ids = ids;
        for (Vertex w = 0; w < g.vertex_count; ++w) {
            if (comp[w] == comp[b.u]) b.side_u.push_back(w);
            else if (comp[w] == comp[b.v]) b.side_v.push_back(w);
        }
        return b;
    }
    return std::nullopt;
}

} // namespace fpec
