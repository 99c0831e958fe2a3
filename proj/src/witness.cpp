#include "hyperramsey/witness.hpp"

#include <map>
#include <stdexcept>
#include <string>

namespace hyperramsey {

TwoColoring burr_witness(int chi_w, int t, int c, int r) {
    if (chi_w < 1 || t < 1 || c < 1) throw std::invalid_argument("burr_witness needs chi_w, t, c >= 1");
    const int order = (chi_w - 1) * (c - 1) + t - 1;
    if (order > kMaxOrder) throw std::invalid_argument("witness order exceeds 64");
    std::vector<int> block(static_cast<std::size_t>(order));
    for (int v = 0; v < order; ++v) block[static_cast<std::size_t>(v)] = c > 1 ? std::min(v / (c - 1), chi_w - 1) : chi_w - 1;
    TwoColoring out(order, r, EdgeColor::red);
    for_each_subset(order, r, [&](VertexMask e) {
        const int b = block[static_cast<std::size_t>(std::countr_zero(e))];
        bool inside = true;
        for (VertexMask rest = e; rest; rest &= rest - 1)
            inside = inside && block[static_cast<std::size_t>(std::countr_zero(rest))] == b;
        if (inside) out.set(e, EdgeColor::blue);
    });
    return out;
}

TwoColoring extend_red_clique(const TwoColoring& base, int m) {
    if (m < 1) throw std::invalid_argument("extend_red_clique needs m >= 1");
    const int p = base.order();
    const int order = p + m - 1;
    if (order > kMaxOrder) throw std::invalid_argument("extended order exceeds 64");
    const int r = base.uniformity();
    const VertexMask old_part = p == 0 ? 0 : bit(p) - 1;
    TwoColoring out(order, r, EdgeColor::blue);
    for_each_subset(order, r, [&](VertexMask e) {
        if ((e & ~old_part) == 0)
            out.set(e, base.color(e));
        else if ((e & old_part) == 0)
            out.set(e, EdgeColor::red);
    });
    return out;
}

TwoColoring cubic_residue_witness(int j) {
    const int p = 3 * j + 1;
    if (j < 1 || !is_prime(p)) throw std::invalid_argument("cubic_residue_witness needs 3j + 1 prime (j=" + std::to_string(j) + ")");
    if (p > kMaxOrder) throw std::invalid_argument("witness order exceeds 64");
    TwoColoring out(p, 3, EdgeColor::blue);
    for (int x = 1; x <= (p - 1) / 2; ++x) out.set(bit(0) | bit(x) | bit(p - x), EdgeColor::red);
    std::map<std::int64_t, VertexMask> fibres;
    for (std::int64_t x = 1; x < p; ++x) fibres[x * x % p * x % p] |= bit(static_cast<int>(x));
    for (const auto& [cube, members] : fibres) {
        if (popcount(members) != 3) throw std::logic_error("cube fibre does not have three elements");
        out.set(members, EdgeColor::red);
    }
    return out;
}

std::string_view to_string(WitnessFailure f) {
    switch (f) {
        case WitnessFailure::clean: return "clean";
        case WitnessFailure::red_embedding: return "found red embedding";
        case WitnessFailure::blue_clique: return "found blue clique";
        case WitnessFailure::blue_embedding: return "found blue embedding";
    }
    return "?";
}

std::optional<std::vector<int>> find_blue_clique(const TwoColoring& c, int n) {
    if (n < 0) throw std::invalid_argument("clique size must be non-negative");
    if (n > c.order()) return std::nullopt;
    const VertexMask all = c.order() == 64 ? ~VertexMask{0} : bit(c.order()) - 1;
    VertexMask found = 0;
    if (!extend_clique(c.uniformity(), [&](VertexMask e) { return c.is_blue(e); }, 0, all, n, found)) return std::nullopt;
    return mask_vertices(found);
}

int max_blue_clique(const TwoColoring& c) {
    int k = 0;
    while (k < c.order() && find_blue_clique(c, k + 1)) ++k;
    return k;
}

WitnessVerdict verify_witness(const TwoColoring& c, const Hypergraph& red_pattern, int blue_n) {
    if (red_pattern.uniformity() != c.uniformity()) throw std::invalid_argument("uniformity mismatch");
    WitnessVerdict v;
    if (auto emb = contains_sub(c.edges_of(EdgeColor::red), red_pattern)) {
        v.kind = WitnessFailure::red_embedding;
        v.embedding = std::move(emb);
        return v;
    }
    if (auto clique = find_blue_clique(c, blue_n)) {
        v.kind = WitnessFailure::blue_clique;
        v.clique = std::move(*clique);
    }
    return v;
}

WitnessVerdict verify_witness(const TwoColoring& c, const Hypergraph& red_pattern, const Hypergraph& blue_pattern) {
    if (red_pattern.uniformity() != c.uniformity() || blue_pattern.uniformity() != c.uniformity())
        throw std::invalid_argument("uniformity mismatch");
    WitnessVerdict v;
    if (auto emb = contains_sub(c.edges_of(EdgeColor::red), red_pattern)) {
        v.kind = WitnessFailure::red_embedding;
        v.embedding = std::move(emb);
        return v;
    }
    if (auto emb = contains_sub(c.edges_of(EdgeColor::blue), blue_pattern)) {
        v.kind = WitnessFailure::blue_embedding;
        v.embedding = std::move(emb);
    }
    return v;
}

}  // namespace hyperramsey
