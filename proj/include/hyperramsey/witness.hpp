#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "hyperramsey/embedding.hpp"
#include "hyperramsey/two_coloring.hpp"

namespace hyperramsey {

/// Extends the vertex set `current` (every r-subset already an edge) by
/// `needed` vertices from `allowed`, keeping every r-subset an edge
/// according to `is_edge`. Vertices are added in ascending order; on success
/// the full clique is written to `out`.
template <typename IsEdge>
bool extend_clique(int r, IsEdge&& is_edge, VertexMask current, VertexMask allowed, int needed, VertexMask& out) {
    if (needed == 0) {
        out = current;
        return true;
    }
    if (popcount(allowed) < needed) return false;
    for (VertexMask rest = allowed; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        bool ok = true;
        if (popcount(current) >= r - 1) {
            for_each_subset_of(current, r - 1, [&](VertexMask s) {
                if (ok && !is_edge(s | bit(v))) ok = false;
            });
        }
        if (!ok) continue;
        const VertexMask above = (v == 63) ? 0 : (allowed & ~((bit(v) << 1) - 1));
        if (popcount(above) < needed - 1) return false;
        if (extend_clique(r, is_edge, current | bit(v), above, needed - 1, out)) return true;
    }
    return false;
}

/// Colouring of K_p^(r), p = (chi_w - 1)(c - 1) + t - 1: chi_w - 1 blocks of
/// c - 1 consecutive vertices, then one block of t - 1 vertices. Edges inside
/// a block are blue, all others red. It has no red H1 and no blue H2 whenever
/// chi_w = chi_w(H1), t = t(H1), c = c(H2) and c >= t.
TwoColoring burr_witness(int chi_w, int t, int c, int r);

/// Appends a red K_{m-1}^(r) on new vertices; edges meeting both parts are blue.
TwoColoring extend_red_clique(const TwoColoring& base, int m);

/// Colouring of K_{3j+1}^(3) over Z/pZ: {0, x, -x} and the cosets of the
/// kernel of a -> a^3 are red, everything else blue. Throws
/// std::invalid_argument when 3j + 1 is not prime.
TwoColoring cubic_residue_witness(int j);

enum class WitnessFailure { clean, red_embedding, blue_clique, blue_embedding };
std::string_view to_string(WitnessFailure f);

struct WitnessVerdict {
    WitnessFailure kind = WitnessFailure::clean;
    std::optional<Embedding> embedding;  // red (or blue pattern) embedding
    std::vector<int> clique;             // blue clique vertices

    bool clean() const { return kind == WitnessFailure::clean; }
};

/// Checks for a red copy of red_pattern, then for a blue K_{blue_n}^(r).
/// Throws std::invalid_argument on uniformity mismatch.
WitnessVerdict verify_witness(const TwoColoring& c, const Hypergraph& red_pattern, int blue_n);

/// As above with an arbitrary blue pattern.
WitnessVerdict verify_witness(const TwoColoring& c, const Hypergraph& red_pattern, const Hypergraph& blue_pattern);

/// Lexicographically first blue K_n^(r) (by ascending vertex search), if any.
std::optional<std::vector<int>> find_blue_clique(const TwoColoring& c, int n);

/// Order of the largest vertex set whose r-subsets are all blue.
int max_blue_clique(const TwoColoring& c);

}  // namespace hyperramsey
