#include "hyperramsey/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace hyperramsey {

namespace {

// Colour refinement seeded with degrees. Colours are ranks of sorted
// signatures, so they only depend on the isomorphism class.
std::vector<int> refined_colours(const Hypergraph& h) {
    const int n = h.order();
    std::vector<int> colour = degrees(h);
    std::size_t cells = 0;
    for (;;) {
        std::vector<std::vector<int>> sig(static_cast<std::size_t>(n));
        for (int v = 0; v < n; ++v) {
            auto& s = sig[static_cast<std::size_t>(v)];
            s.push_back(colour[static_cast<std::size_t>(v)]);
            std::vector<std::vector<int>> around;
            for (const auto& e : h.edges()) {
                if (!e.contains(v)) continue;
                std::vector<int> others;
                for (int u : e.vertices())
                    if (u != v) others.push_back(colour[static_cast<std::size_t>(u)]);
                std::sort(others.begin(), others.end());
                around.push_back(std::move(others));
            }
            std::sort(around.begin(), around.end());
            for (const auto& o : around) {
                s.push_back(-1);
                s.insert(s.end(), o.begin(), o.end());
            }
        }
        std::map<std::vector<int>, int> rank;
        for (const auto& s : sig) rank.emplace(s, 0);
        int next = 0;
        // Larger signatures first so high-degree vertices get small labels.
        for (auto it = rank.rbegin(); it != rank.rend(); ++it) it->second = next++;
        for (int v = 0; v < n; ++v) colour[static_cast<std::size_t>(v)] = rank[sig[static_cast<std::size_t>(v)]];
        if (rank.size() == cells) break;
        cells = rank.size();
    }
    return colour;
}

}  // namespace

CanonicalForm canonical_form(const Hypergraph& h) {
    const int n = h.order();
    const auto colour = refined_colours(h);
    const auto deg = degrees(h);

    // Cells in colour order; each cell owns a contiguous block of new labels.
    std::map<int, std::vector<int>> by_colour;
    for (int v = 0; v < n; ++v) by_colour[colour[static_cast<std::size_t>(v)]].push_back(v);
    std::vector<std::vector<int>> cells;
    std::vector<int> start;
    int label = 0;
    for (auto& [c, members] : by_colour) {
        start.push_back(label);
        label += static_cast<int>(members.size());
        cells.push_back(members);
    }

    CanonicalForm best{n, h.uniformity(), {}};
    bool have_best = false;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::vector<VertexMask> edges(h.edge_count());

    auto evaluate = [&] {
        for (std::size_t ci = 0; ci < cells.size(); ++ci)
            for (std::size_t k = 0; k < cells[ci].size(); ++k)
                perm[static_cast<std::size_t>(cells[ci][k])] = start[ci] + static_cast<int>(k);
        for (std::size_t i = 0; i < h.edge_count(); ++i) {
            VertexMask m = 0;
            for (VertexMask rest = h.edges()[i].mask(); rest; rest &= rest - 1)
                m |= bit(perm[static_cast<std::size_t>(std::countr_zero(rest))]);
            edges[i] = m;
        }
        std::sort(edges.begin(), edges.end());
        if (!have_best || edges < best.edges) {
            best.edges = edges;
            have_best = true;
        }
    };

    // Odometer over the permutations of every cell. Cells of isolated
    // vertices never touch an edge, so they are left fixed.
    std::vector<std::size_t> active;
    for (std::size_t ci = 0; ci < cells.size(); ++ci)
        if (cells[ci].size() > 1 && deg[static_cast<std::size_t>(cells[ci][0])] > 0) active.push_back(ci);
    for (;;) {
        evaluate();
        std::size_t i = 0;
        for (; i < active.size(); ++i) {
            auto& cell = cells[active[i]];
            if (std::next_permutation(cell.begin(), cell.end())) break;
        }
        if (i == active.size()) break;
    }
    return best;
}

Hypergraph from_canonical(const CanonicalForm& form) {
    std::vector<Hyperedge> edges;
    for (VertexMask m : form.edges) edges.push_back(Hyperedge::from_mask(m));
    return {form.order, form.uniformity, std::move(edges)};
}

bool is_isomorphic(const Hypergraph& a, const Hypergraph& b) {
    if (a.order() != b.order() || a.uniformity() != b.uniformity() || a.edge_count() != b.edge_count()) return false;
    auto da = degrees(a);
    auto db = degrees(b);
    std::sort(da.begin(), da.end());
    std::sort(db.begin(), db.end());
    if (da != db) return false;
    return canonical_form(a) == canonical_form(b);
}

}  // namespace hyperramsey
