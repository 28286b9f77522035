#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fpec/cli.hpp"
#include "fpec/fpe.hpp"
#include "fpec/generate.hpp"
#include "fpec/oddcolor.hpp"
#include "fpec/qfo.hpp"
#include "fpec/verify.hpp"

#include "fixtures.hpp"

using namespace fpec;

namespace {

struct Criterion {
    std::string name;
    std::function<bool(std::string&)> body;
    double limit_seconds = 0; // 0 means no limit enforced
};

std::vector<PlaneMap> suite() {
    std::vector<PlaneMap> maps;
    for (int i = 0; i < 200; ++i)
        maps.push_back(make_random(10 + (7 * i) % 51, 4242 + static_cast<std::uint64_t>(i)));
    return maps;
}

std::vector<PlaneMap> named_fixtures() {
    std::vector<PlaneMap> maps;
    for (int n = 2; n <= 12; ++n) maps.push_back(make_cycle(n));
    maps.push_back(make_theta());
    maps.push_back(make_wheel(4));
    maps.push_back(make_two_pentagons());
    maps.push_back(make_c5_chain(4));
    return maps;
}

struct CliResult {
    int code;
    std::string out;
};

CliResult run_cli(std::vector<std::string> args, const std::string& input) {
    std::istringstream in(input);
    std::ostringstream out, err;
    int code = cli::run(std::move(args), in, out, err);
    return {code, out.str()};
}

bool criterion_exact_two_pentagons(std::string& detail) {
    CliResult r = run_cli({"chi", "--in", "-", "--mode", "fpe"},
                          serialize_pmap(make_two_pentagons()));
    detail = "chi reported " + r.out.substr(0, r.out.find('\n'));
    return r.code == 0 && r.out == "10\n";
}

bool criterion_suite_bound(std::string& detail) {
    int worst = 0;
    for (const PlaneMap& g : suite()) {
        CliResult r = run_cli({"color", "--in", "-", "--out", "-"}, serialize_pmap(g));
        if (r.code != 0) {
            detail = "color exited " + std::to_string(r.code);
            return false;
        }
        auto j = nlohmann::json::parse(r.out);
        int k = j["palette_size"].get<int>();
        worst = std::max(worst, k);
        if (k > 16) {
            detail = "palette_size " + std::to_string(k);
            return false;
        }
        EdgeColoring col(static_cast<std::size_t>(g.edge_count()));
        for (const auto& ej : j["edges"])
            col.colors[ej["id"].get<std::size_t>()] = ej["color"].get<Color>();
        if (!check_fpe(g, col)) {
            detail = "independent checker rejected a result";
            return false;
        }
    }
    detail = "200 maps, worst palette " + std::to_string(worst);
    return true;
}

bool criterion_base_four_colors(std::string& detail) {
    std::vector<PlaneMap> maps = suite();
    std::vector<PlaneMap> named = named_fixtures();
    maps.insert(maps.end(), named.begin(), named.end());
    for (const PlaneMap& g : maps) {
        QfoResult r = qfo_color(g);
        if (r.coloring.max_color() > 4) {
            detail = "more than 4 colors";
            return false;
        }
        if (!check_quasi_facially_odd(g, r.coloring, r.c5_blocks)) {
            detail = "checker rejected a base coloring";
            return false;
        }
    }
    detail = std::to_string(maps.size()) + " maps";
    return true;
}

bool criterion_forests(std::string& detail) {
    std::mt19937_64 rng(1003);
    for (int trial = 0; trial < 100; ++trial) {
        BundledMultigraph t =
            fixtures::random_tree(rng, 1 + static_cast<int>(rng() % 200));
        EdgeColoring col = forest_two_color(t);
        if (col.max_color() > 2 || !check_odd(t, col)) {
            detail = "trial " + std::to_string(trial);
            return false;
        }
    }
    int confirmed = 0;
    for (int trial = 0; trial < 40; ++trial) {
        BundledMultigraph t = fixtures::random_tree(rng, 2 + static_cast<int>(rng() % 15));
        bool has_even = false;
        for (Vertex v = 0; v < t.vertex_count; ++v)
            if (t.degree(v) % 2 == 0) has_even = true;
        if (!has_even) continue;
        if (exact_odd_chromatic_index(t) != 2) {
            detail = "oracle disagrees on a tree";
            return false;
        }
        ++confirmed;
    }
    detail = "100 trees, oracle confirmed 2 on " + std::to_string(confirmed);
    return true;
}

bool criterion_bridged(std::string& detail) {
    std::mt19937_64 rng(1005);
    for (int trial = 0; trial < 100; ++trial) {
        int k = 1 + static_cast<int>(rng() % 5);
        auto [g, br] = fixtures::random_bridged(rng, k);
        EdgeColoring col = k_bridge_four_color(g, br);
        if (col.max_color() > 4 || !check_odd(g, col)) {
            detail = "trial " + std::to_string(trial);
            return false;
        }
        std::map<Color, int> hist;
        for (int e : br.edge_ids) ++hist[col.colors[static_cast<std::size_t>(e)]];
        bool pattern = (k % 2 == 1)
                           ? hist.size() == 1
                           : hist.size() == 2 && std::min(hist.begin()->second,
                                                          hist.rbegin()->second) == 1;
        if (!pattern) {
            detail = "bundle pattern broken at trial " + std::to_string(trial);
            return false;
        }
    }
    detail = "100 bridged multigraphs";
    return true;
}

bool criterion_wheel_odd_index(std::string& detail) {
    BundledMultigraph w4 = abstract_multigraph(make_wheel(4));
    int exact = exact_odd_chromatic_index(w4);
    EdgeColoring col = odd_bundle_color(w4);
    std::set<Color> used(col.colors.begin(), col.colors.end());
    detail = "exact " + std::to_string(exact) + ", constructive uses " +
             std::to_string(used.size());
    return exact == 4 && used.size() == 4 && check_odd(w4, col).ok;
}

bool criterion_oracle_sandwich(std::string& detail) {
    int covered = 0;
    for (const PlaneMap& g : named_fixtures()) {
        if (g.edge_count() > 12) continue;
        int lo = exact_chi_fp(g);
        int k = fpe_color(g).palette_size;
        if (lo > k || k > 16) {
            detail = "sandwich broken on a fixture";
            return false;
        }
        ++covered;
    }
    if (exact_chi_fp(make_cycle(4)) != 4 || exact_chi_fp(make_cycle(5)) != 5) {
        detail = "cycle anchors off";
        return false;
    }
    detail = std::to_string(covered) + " fixtures";
    return true;
}

bool criterion_dual_bundles(std::string& detail) {
    std::vector<PlaneMap> maps = suite();
    std::vector<PlaneMap> named = named_fixtures();
    maps.insert(maps.end(), named.begin(), named.end());
    int excepted = 0;
    for (const PlaneMap& g : maps) {
        QfoResult base = qfo_color(g);
        std::map<EdgeId, std::size_t> block_of;
        for (std::size_t b = 0; b < base.c5_blocks.size(); ++b)
            for (EdgeId e : base.c5_blocks[b]) block_of[e] = b;
        for (Color c = 1; c <= 4; ++c) {
            BundledMultigraph dual = dual_restricted(g, base.coloring, c);
            for (const auto& [faces, ids] : dual.bundles()) {
                if (ids.size() % 2 == 1) continue;
                if (ids.size() != 2) {
                    detail = "even bundle of size " + std::to_string(ids.size());
                    return false;
                }
                auto b1 = block_of.find(static_cast<EdgeId>(dual.labels[static_cast<std::size_t>(ids[0])]));
                auto b2 = block_of.find(static_cast<EdgeId>(dual.labels[static_cast<std::size_t>(ids[1])]));
                if (b1 == block_of.end() || b2 == block_of.end() || b1->second != b2->second) {
                    detail = "even bundle outside a granted block";
                    return false;
                }
                ++excepted;
            }
        }
    }
    detail = "zero violations across " + std::to_string(maps.size()) + " maps, " +
             std::to_string(excepted) + " granted 2-bundles";
    return true;
}

bool criterion_determinism(std::string& detail) {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        std::vector<std::string> gen_args = {"gen", "--family", "random", "--n",
                                             std::to_string(10 + seed * 9), "--seed",
                                             std::to_string(seed)};
        CliResult a = run_cli(gen_args, "");
        CliResult b = run_cli(gen_args, "");
        if (a.out != b.out) {
            detail = "gen differs at seed " + std::to_string(seed);
            return false;
        }
        CliResult ca = run_cli({"color", "--in", "-", "--out", "-", "--trace"}, a.out);
        CliResult cb = run_cli({"color", "--in", "-", "--out", "-", "--trace"}, b.out);
        if (ca.out != cb.out || ca.code != 0) {
            detail = "color differs at seed " + std::to_string(seed);
            return false;
        }
    }
    detail = "5 seeds, gen and color byte-identical";
    return true;
}

} // namespace

int main() {
    std::vector<Criterion> criteria = {
        {"two-pentagons exact optimum is 10", criterion_exact_two_pentagons, 60},
        {"random suite colored with at most 16 colors", criterion_suite_bound, 300},
        {"base stage uses at most 4 colors", criterion_base_four_colors, 0},
        {"forests take two colors", criterion_forests, 0},
        {"bridged multigraphs take four colors", criterion_bridged, 0},
        {"wheel odd index is exactly 4", criterion_wheel_odd_index, 1},
        {"exact optimum never exceeds the pipeline", criterion_oracle_sandwich, 0},
        {"even dual bundles only inside granted blocks", criterion_dual_bundles, 0},
        {"seeded runs are byte-identical", criterion_determinism, 0},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        auto t0 = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].body(detail);
        } catch (const std::exception& e) {
            detail = std::string("exception: ") + e.what();
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (criteria[i].limit_seconds > 0 && secs > criteria[i].limit_seconds) {
            ok = false;
            detail += " [over the " + std::to_string(criteria[i].limit_seconds) + "s limit]";
        }
        std::ostringstream line;
        line.setf(std::ios::fixed);
        line.precision(2);
        line << "criterion " << (i + 1) << " (" << criteria[i].name << "): "
             << (ok ? "pass" : "FAIL") << " [" << secs << "s]";
        if (!detail.empty()) line << " " << detail;
        std::cout << line.str() << "\n";
        if (!ok) ++failures;
    }
    return failures;
}
