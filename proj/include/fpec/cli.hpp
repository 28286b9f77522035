#pragma once

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpec/error.hpp"
#include "fpec/fpe.hpp"
#include "fpec/generate.hpp"
#include "fpec/json_io.hpp"
#include "fpec/multigraph.hpp"
#include "fpec/oddcolor.hpp"
#include "fpec/planemap.hpp"
#include "fpec/qfo.hpp"
#include "fpec/verify.hpp"

namespace fpec {
namespace cli {

namespace detail {

inline std::string slurp(const std::string& path, std::istream& stdin_stream) {
    if (path == "-") {
        std::ostringstream os;
        os << stdin_stream.rdbuf();
        return os.str();
    }
    std::ifstream f(path);
    if (!f) throw parse_error("cannot open " + path);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

inline void spill(const std::string& path, const std::string& text, std::ostream& stdout_stream) {
    if (path == "-") {
        stdout_stream << text;
        return;
    }
    std::ofstream f(path);
    if (!f) throw parse_error("cannot open " + path + " for writing");
    f << text;
}

inline PlaneMap load_map(const std::string& path, std::istream& stdin_stream) {
    return parse_pmap(slurp(path, stdin_stream));
}

} // namespace detail

inline int run_gen(const std::string& family, int n, std::uint64_t seed,
                   const std::string& out_path, std::istream&, std::ostream& out) {
    PlaneMap g = [&] {
        if (family == "cycle") return make_cycle(n);
        if (family == "wheel") return make_wheel(n);
        if (family == "theta") return make_theta();
        if (family == "two-pentagons") return make_two_pentagons();
        if (family == "c5-chain") return make_c5_chain(n);
        if (family == "random") return make_random(n, seed);
        throw parse_error("unknown family " + family);
    }();
    detail::spill(out_path, serialize_pmap(g), out);
    return 0;
}

inline int run_color(const std::string& in_path, const std::string& out_path, bool with_trace,
                     std::istream& in, std::ostream& out) {
    PlaneMap g = detail::load_map(in_path, in);
    FpeResult r = fpe_color(g);
    detail::spill(out_path, coloring_to_json(g, r, with_trace).dump(2) + "\n", out);
    return 0;
}

inline int run_check(const std::string& in_path, const std::string& coloring_path,
                     const std::string& mode, std::istream& in, std::ostream& out) {
    PlaneMap g = detail::load_map(in_path, in);
    ParsedColoring pc = parse_coloring_json(detail::slurp(coloring_path, in), g.edge_count());
    CheckResult res = [&] {
        if (mode == "fpe") return check_fpe(g, pc.coloring);
        if (mode == "qfo") {
            if (pc.has_base) return check_quasi_facially_odd(g, pc.base, pc.c5_blocks);
            return check_quasi_facially_odd(g, pc.coloring, pc.c5_blocks);
        }
        if (mode == "odd") return check_odd(abstract_multigraph(g), pc.coloring);
        throw parse_error("unknown mode " + mode);
    }();
    nlohmann::json report;
    report["verdict"] = res.ok ? "pass" : "fail";
    report["violations"] = nlohmann::json::array();
    if (!res.ok) report["violations"].push_back(res.message);
    out << report.dump(2) << "\n";
    return res.ok ? 0 : 1;
}

inline int run_chi(const std::string& in_path, const std::string& mode, std::istream& in,
                   std::ostream& out) {
    PlaneMap g = detail::load_map(in_path, in);
    if (mode == "fpe") {
        out << exact_chi_fp(g) << "\n";
        return 0;
    }
    if (mode == "odd") {
        out << exact_odd_chromatic_index(abstract_multigraph(g)) << "\n";
        return 0;
    }
    throw parse_error("unknown mode " + mode);
}

inline int run_stats(const std::string& in_path, std::istream& in, std::ostream& out) {
    PlaneMap g = detail::load_map(in_path, in);
    BlockDecomposition dec = blocks(g);
    int c5 = static_cast<int>(std::count(dec.is_c5.begin(), dec.is_c5.end(), true));
    out << "vertices " << g.vertex_count() << "\n";
    out << "edges " << g.edge_count() << "\n";
    out << "faces " << g.face_count() << "\n";
    out << "components " << g.component_count() << "\n";
    out << "bridgeless " << (g.bridgeless() ? "yes" : "no") << "\n";
    out << "two_edge_connected " << (g.two_edge_connected() ? "yes" : "no") << "\n";
    out << "blocks " << dec.block_edges.size() << "\n";
    out << "c5_blocks " << c5 << "\n";
    out << "face_lengths";
    for (const FacialWalk& w : g.facial_walks()) out << " " << w.half_edges.size();
    out << "\n";
    return 0;
}

inline int run_export_dot(const std::string& in_path, const std::string& coloring_path,
                          std::istream& in, std::ostream& out) {
    PlaneMap g = detail::load_map(in_path, in);
    ParsedColoring pc{EdgeColoring(static_cast<std::size_t>(g.edge_count())), EdgeColoring(), {}, false};
    bool colored = !coloring_path.empty();
    if (colored) pc = parse_coloring_json(detail::slurp(coloring_path, in), g.edge_count());
    out << "graph fpec {\n";
    for (const FacialWalk& w : g.facial_walks()) {
        out << "  // face " << w.id << ":";
        for (HalfEdge h : w.half_edges) out << " " << edge_of(h);
        out << "\n";
    }
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        auto [u, v] = g.endpoints(e);
        out << "  " << u << " -- " << v << " [label=\"" << e;
        if (colored) out << " (" << pc.coloring.colors[static_cast<std::size_t>(e)] << ")";
        out << "\"];\n";
    }
    out << "}\n";
    return 0;
}

// Dispatches a whole command line (without the program name); errors
// map to exit codes 2 (parse), 3 (precondition), 4 (bound), 70 (bug).
inline int run(std::vector<std::string> args, std::istream& in, std::ostream& out,
               std::ostream& err) {
    CLI::App app{"facial parity edge coloring toolkit"};
    app.require_subcommand(1);

    std::string family, in_path = "-", out_path = "-", coloring_path, mode = "fpe";
    int n = 5;
    std::uint64_t seed = 1;
    bool with_trace = false;

    CLI::App* gen = app.add_subcommand("gen", "generate a map");
    gen->add_option("--family", family, "cycle, wheel, theta, two-pentagons, c5-chain, random")
        ->required()
        ->check(CLI::IsMember(
            {"cycle", "wheel", "theta", "two-pentagons", "c5-chain", "random"}));
    gen->add_option("--n", n, "size parameter (edges for random)");
    gen->add_option("--seed", seed, "random seed");
    gen->add_option("--out", out_path, "output file, - for stdout");

    CLI::App* color = app.add_subcommand("color", "compute a facial parity edge coloring");
    color->add_option("--in", in_path, "input map, - for stdin");
    color->add_option("--out", out_path, "output file, - for stdout");
    color->add_flag("--trace", with_trace, "include the construction trace");

    CLI::App* check = app.add_subcommand("check", "validate a coloring");
    check->add_option("--in", in_path, "input map");
    check->add_option("--coloring", coloring_path, "coloring JSON file")->required();
    check->add_option("--mode", mode, "fpe, qfo, or odd")
        ->check(CLI::IsMember({"fpe", "qfo", "odd"}));

    CLI::App* chi = app.add_subcommand("chi", "exact optimum by exhaustive search");
    chi->add_option("--in", in_path, "input map");
    chi->add_option("--mode", mode, "fpe or odd")->check(CLI::IsMember({"fpe", "odd"}));

    CLI::App* stats = app.add_subcommand("stats", "print map statistics");
    stats->add_option("--in", in_path, "input map");

    CLI::App* dot = app.add_subcommand("export-dot", "emit the abstract graph in DOT");
    dot->add_option("--in", in_path, "input map");
    dot->add_option("--coloring", coloring_path, "coloring JSON file");

    try {
        std::reverse(args.begin(), args.end());
        app.parse(args);
    } catch (const CLI::ParseError& e) {
        std::ostringstream os;
        int code = app.exit(e, out, os);
        err << os.str();
        return code == 0 ? 0 : 2;
    }

    try {
        if (gen->parsed()) return run_gen(family, n, seed, out_path, in, out);
        if (color->parsed()) return run_color(in_path, out_path, with_trace, in, out);
        if (check->parsed()) return run_check(in_path, coloring_path, mode, in, out);
        if (chi->parsed()) return run_chi(in_path, mode, in, out);
        if (stats->parsed()) return run_stats(in_path, in, out);
        if (dot->parsed()) return run_export_dot(in_path, coloring_path, in, out);
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const precondition_error& e) {
        err << "error: " << e.what() << "\n";
        return 3;
    } catch (const bound_error& e) {
        err << "error: " << e.what() << "\n";
        return 4;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << "\n";
        return 70;
    }
    return 2;
}

} // namespace cli
} // namespace fpec
