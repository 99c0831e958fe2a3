#pragma once

#include <cstdint>
#include <vector>

#include "hyperramsey/hypergraph.hpp"

namespace hyperramsey {

/// Vertex colouring with no monochromatic edge. Colours are 0..color_count-1
/// in order of first occurrence.
struct WeakColoring {
    std::vector<int> assignment;
    int color_count = 0;
};

struct WeakChromaticResult {
    int chi_w = 0;
    WeakColoring witness;  // lexicographically least optimal colouring
};

inline constexpr int kDefaultColoringCap = 12;

bool is_weak_coloring(const Hypergraph& h, const WeakColoring& c);

/// Exact chi_w(H) by backtracking. Throws std::length_error when
/// h.order() > cap.
WeakChromaticResult weak_chromatic_number(const Hypergraph& h, int cap = kDefaultColoringCap);

/// t(H): smallest colour class over all weak colourings with chi_w(H) colours.
/// Enumerates every optimal colouring up to renaming of colours.
int min_color_class(const Hypergraph& h, int cap = kDefaultColoringCap);

/// ceil(n / (r - 1)).
std::int64_t chi_w_complete(std::int64_t n, int r);
/// With n = q(r - 1) + k, 0 <= k < r - 1: k if k != 0, else r - 1.
std::int64_t t_complete(std::int64_t n, int r);

/// chi_w, t, c and delta; complete hypergraphs use the closed forms regardless of cap.
struct ColoringStats {
    std::int64_t chi_w = 0;
    std::int64_t t = 0;
    int largest_component = 0;
    int min_degree = 0;
};

ColoringStats coloring_stats(const Hypergraph& h, int cap = kDefaultColoringCap);

}  // namespace hyperramsey
