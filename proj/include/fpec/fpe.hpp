#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "fpec/coloring.hpp"
#include "fpec/error.hpp"
#include "fpec/multigraph.hpp"
#include "fpec/oddcolor.hpp"
#include "fpec/planemap.hpp"
#include "fpec/qfo.hpp"
#include "fpec/verify.hpp"

namespace fpec {

struct DualComponentTrace {
    std::vector<int> faces;      // dual vertices of the component
    std::vector<EdgeId> edges;   // primal edge ids, ascending
    std::vector<Color> omega;    // odd coloring, parallel to edges
};

struct DualTrace {
    Color color = kUncolored;    // the class of the base coloring
    std::vector<DualComponentTrace> components;
};

struct FpeResult {
    EdgeColoring coloring;       // final colors 1..palette_size
    int palette_size = 0;
    QfoResult base;              // the 4-color stage
    std::vector<DualTrace> duals;
    std::vector<std::pair<std::pair<Color, Color>, Color>> compaction; // (base, omega) -> final
};

// Facial-parity edge coloring with at most 16 colors: a quasi-facially-
// odd 4-coloring splits the edges into four classes; the faces-and-
// class-edges multigraph of each class gets an odd coloring with at
// most 4 colors per component; the pair (class, odd color) becomes the
// final color.  Every face then sees each pair an odd number of times
// or never, because that count is a class-c degree of the face in one
// odd color.  The two doubled edges a granted 5-cycle block leaves in
// one class sit as a parallel pair in its dual, which the odd coloring
// necessarily separates.
inline FpeResult fpe_color(const PlaneMap& g) {
    FpeResult out{EdgeColoring(static_cast<std::size_t>(g.edge_count())), 0, qfo_color(g), {}, {}};

    std::map<EdgeId, std::size_t> block_of;
    for (std::size_t b = 0; b < out.base.c5_blocks.size(); ++b)
        for (EdgeId e : out.base.c5_blocks[b]) block_of[e] = b;

    std::vector<std::pair<Color, Color>> pair_of(static_cast<std::size_t>(g.edge_count()),
                                                 {kUncolored, kUncolored});
    for (Color c = 1; c <= out.base.coloring.max_color(); ++c) {
        BundledMultigraph dual = dual_restricted(g, out.base.coloring, c);
        if (dual.edge_count() == 0) continue;

        for (const auto& [faces, ids] : dual.bundles()) {
            if (ids.size() % 2 == 1) continue;
            if (ids.size() != 2)
                throw bound_error("granulation: faces " + std::to_string(faces.first) + "," +
                                  std::to_string(faces.second) + " share " +
                                  std::to_string(ids.size()) + " edges of class " +
                                  std::to_string(c));
            EdgeId p1 = static_cast<EdgeId>(dual.labels[static_cast<std::size_t>(ids[0])]);
            EdgeId p2 = static_cast<EdgeId>(dual.labels[static_cast<std::size_t>(ids[1])]);
            auto b1 = block_of.find(p1);
            auto b2 = block_of.find(p2);
            if (b1 == block_of.end() || b2 == block_of.end() || b1->second != b2->second)
                throw bound_error("granulation: even overlap of class " + std::to_string(c) +
                                  " outside a granted 5-cycle block");
        }

        DualTrace trace;
        trace.color = c;
        std::vector<Color> omega(static_cast<std::size_t>(dual.edge_count()), kUncolored);
        std::vector<int> comp = multigraph_components(dual);
        int ncomp = *std::max_element(comp.begin(), comp.end()) + 1;
        for (int ci = 0; ci < ncomp; ++ci) {
            std::vector<Vertex> verts;
            for (Vertex v = 0; v < dual.vertex_count; ++v)
                if (comp[static_cast<std::size_t>(v)] == ci) verts.push_back(v);
            SubMultigraph sub = induced_sub_multigraph(dual, verts);
            if (sub.graph.edge_count() == 0) continue;

            EdgeColoring col = odd_color_component(sub.graph);
            if (col.max_color() > 4)
                throw bound_error("granulation: a class component needs more than 4 odd colors");

            DualComponentTrace ct;
            ct.faces = verts;
            for (int de = 0; de < dual.edge_count(); ++de) {
                int se = sub.edge_map[static_cast<std::size_t>(de)];
                if (se == kNoIndex) continue;
                omega[static_cast<std::size_t>(de)] =
                    col.colors[static_cast<std::size_t>(se)];
                ct.edges.push_back(static_cast<EdgeId>(dual.labels[static_cast<std::size_t>(de)]));
                ct.omega.push_back(omega[static_cast<std::size_t>(de)]);
            }
            trace.components.push_back(std::move(ct));
        }
        for (int de = 0; de < dual.edge_count(); ++de) {
            EdgeId e = static_cast<EdgeId>(dual.labels[static_cast<std::size_t>(de)]);
            pair_of[static_cast<std::size_t>(e)] = {c, omega[static_cast<std::size_t>(de)]};
        }
        out.duals.push_back(std::move(trace));
    }

    std::set<std::pair<Color, Color>> used(pair_of.begin(), pair_of.end());
    std::map<std::pair<Color, Color>, Color> final_of;
    for (auto& p : used) {
        Color next = static_cast<Color>(final_of.size()) + 1;
        final_of[p] = next;
        out.compaction.push_back({p, next});
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e)
        out.coloring.colors[static_cast<std::size_t>(e)] =
            final_of[pair_of[static_cast<std::size_t>(e)]];
    out.palette_size = static_cast<int>(final_of.size());

    if (out.palette_size > 16)
        throw internal_error("granulation: palette exceeded 16 despite per-stage bounds");
    CheckResult check = check_fpe(g, out.coloring);
    if (!check) throw internal_error("granulation: final coloring invalid: " + check.message);
    return out;
}

} // namespace fpec
