#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "fpec/coloring.hpp"
#include "fpec/error.hpp"
#include "fpec/fpe.hpp"
#include "fpec/planemap.hpp"

namespace fpec {

inline nlohmann::json coloring_to_json(const PlaneMap& g, const FpeResult& r, bool with_trace) {
    nlohmann::json j;
    j["palette_size"] = r.palette_size;
    j["edges"] = nlohmann::json::array();
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        j["edges"].push_back({{"id", e},
                              {"endpoints", {u, v}},
                              {"color", r.coloring.colors[static_cast<std::size_t>(e)]}});
    }
    j["faces"] = nlohmann::json::array();
    for (const FacialWalk& w : g.facial_walks())
        j["faces"].push_back({{"id", w.id}, {"walk", w.half_edges}});
    if (with_trace) {
        nlohmann::json trace;
        trace["base"] = {{"colors", r.base.coloring.colors},
                         {"c5_blocks", r.base.c5_blocks}};
        trace["duals"] = nlohmann::json::array();
        for (const DualTrace& d : r.duals) {
            nlohmann::json dj;
            dj["color"] = d.color;
            dj["components"] = nlohmann::json::array();
            for (const DualComponentTrace& ct : d.components)
                dj["components"].push_back(
                    {{"faces", ct.faces}, {"edges", ct.edges}, {"omega", ct.omega}});
            trace["duals"].push_back(std::move(dj));
        }
        trace["compaction"] = nlohmann::json::array();
        for (const auto& [pair, final_color] : r.compaction)
            trace["compaction"].push_back(
                {{"base", pair.first}, {"omega", pair.second}, {"final", final_color}});
        j["trace"] = std::move(trace);
    }
    return j;
}

struct ParsedColoring {
    EdgeColoring coloring;
    // 4-color stage and its excepted blocks, present when the file
    // carries a trace.
    EdgeColoring base;
    std::vector<std::vector<EdgeId>> c5_blocks;
    bool has_base = false;
};

inline ParsedColoring parse_coloring_json(const std::string& text, int edge_count) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("coloring file: ") + e.what());
    }
    ParsedColoring out{EdgeColoring(static_cast<std::size_t>(edge_count)), EdgeColoring(), {}, false};
    try {
        if (j.contains("edges")) {
            for (const auto& ej : j.at("edges")) {
                int id = ej.at("id").get<int>();
                if (id < 0 || id >= edge_count)
                    throw parse_error("coloring file: edge id " + std::to_string(id) +
                                      " out of range");
                out.coloring.colors[static_cast<std::size_t>(id)] = ej.at("color").get<Color>();
            }
        } else if (j.contains("colors")) {
            auto cols = j.at("colors").get<std::vector<Color>>();
            if (static_cast<int>(cols.size()) != edge_count)
                throw parse_error("coloring file: expected " + std::to_string(edge_count) +
                                  " colors, got " + std::to_string(cols.size()));
            out.coloring.colors = std::move(cols);
        } else {
            throw parse_error("coloring file: no \"edges\" or \"colors\" field");
        }
        if (j.contains("trace") && j.at("trace").contains("base")) {
            const auto& bj = j.at("trace").at("base");
            out.base.colors = bj.at("colors").get<std::vector<Color>>();
            if (static_cast<int>(out.base.colors.size()) != edge_count)
                throw parse_error("coloring file: trace base has wrong edge count");
            if (bj.contains("c5_blocks"))
                out.c5_blocks = bj.at("c5_blocks").get<std::vector<std::vector<EdgeId>>>();
            out.has_base = true;
        }
    } catch (const nlohmann::json::exception& e) {
        throw parse_error(std::string("coloring file: ") + e.what());
    }
    return out;
}

} // namespace fpec
