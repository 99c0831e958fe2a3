#pragma once

#include <cstdint>
#include <optional>
#include <string_view>

#include "hyperramsey/hypergraph.hpp"
#include "hyperramsey/two_coloring.hpp"

namespace hyperramsey {

enum class EdgeOrder {
    colex,          ///< edges of K_p in colex order
    degree_guided,  ///< greedily prefer edges sharing r-1 vertices with many earlier edges
};

std::string_view to_string(EdgeOrder o);

struct SearchConfig {
    std::uint64_t node_budget = 100'000'000;
    /// Lex-leader pruning: after all edges inside {0..v-1} are coloured
    /// (v <= symmetry_levels), keep only colourings that are lexicographically
    /// least under permutations of those v vertices.
    bool symmetry = false;
    int symmetry_levels = 6;
    EdgeOrder edge_order = EdgeOrder::colex;
};

enum class Verdict { arrows, counterexample, budget_exhausted };
std::string_view to_string(Verdict v);

struct ArrowingResult {
    Verdict verdict = Verdict::budget_exhausted;
    std::optional<TwoColoring> counterexample;
    std::uint64_t nodes = 0;
};

/// Decides K_p^(r) -> (red_pattern, K_n^(r)). Colours edges one at a time,
/// red first, and prunes a partial colouring as soon as the newest red edge
/// completes a red copy of the pattern or the newest blue edge completes a
/// blue K_n. A full colouring that survives is returned as counterexample.
/// Throws std::invalid_argument when n < r, p > 64, or the budget is 0.
ArrowingResult arrows(int p, const Hypergraph& red_pattern, int blue_n, const SearchConfig& cfg = {});

struct RamseyResult {
    bool exact = false;  ///< false when the budget ran out
    /// Exact value when `exact`; otherwise every order below `lower` is known
    /// not to arrow.
    std::int64_t lower = 0;
    std::optional<std::int64_t> upper;
    /// Colouring of K_{lower-1} with neither red pattern nor blue K_n.
    std::optional<TwoColoring> certificate;
    std::uint64_t nodes = 0;
};

/// Least p with K_p -> (red_pattern, K_n). The scan starts at the generalized
/// Burr lower bound, whose explicit colouring serves as the certificate below
/// it. The node budget is shared across the scan.
RamseyResult ramsey_number(const Hypergraph& red_pattern, int blue_n, const SearchConfig& cfg = {});

/// Largest number of pairwise disjoint red edges.
int independence_check(const TwoColoring& c);

}  // namespace hyperramsey
