#pragma once

#include <array>
#include <set>
#include <vector>

#include "fpec/error.hpp"

namespace fpec {

using Color = int;

inline constexpr Color kUncolored = 0;

// Total or partial assignment of positive colors to dense edge ids.
// Color 0 marks an edge not yet colored.
struct EdgeColoring {
    std::vector<Color> colors;

    EdgeColoring() = default;
    explicit EdgeColoring(std::size_t edge_count) : colors(edge_count, kUncolored) {}

    bool total() const {
        for (Color c : colors)
            if (c == kUncolored) return false;
        return true;
    }

    int palette_used() const {
        std::set<Color> used;
        for (Color c : colors)
            if (c != kUncolored) used.insert(c);
        return static_cast<int>(used.size());
    }

    Color max_color() const {
        Color m = 0;
        for (Color c : colors) m = std::max(m, c);
        return m;
    }
};

// Relabel colors 1..4 through a permutation given as perm[1..4].
inline EdgeColoring permute_palette(const EdgeColoring& c, const std::array<Color, 5>& perm) {
    EdgeColoring out = c;
    for (Color& col : out.colors) {
        if (col == kUncolored) continue;
        if (col < 1 || col > 4) throw precondition_error("permute_palette: color outside 1..4");
        col = perm[static_cast<std::size_t>(col)];
    }
    return out;
}

} // namespace fpec
