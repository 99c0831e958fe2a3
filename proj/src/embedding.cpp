#include "hyperramsey/embedding.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperramsey {

EmbeddingPlan::EmbeddingPlan(const Hypergraph& pattern, VertexMask prefix) : pattern_(pattern) {
    const int n = pattern.order();
    const auto deg = degrees(pattern);
    VertexMask placed = 0;
    for (VertexMask rest = prefix; rest; rest &= rest - 1) {
        const int v = std::countr_zero(rest);
        if (v >= n) throw std::invalid_argument("prefix vertex outside pattern");
        order_.push_back(v);
        placed |= bit(v);
    }
    prefix_size_ = order_.size();

    while (static_cast<int>(order_.size()) < n) {
        int best = -1;
        int best_links = -1;
        for (int v = 0; v < n; ++v) {
            if ((placed >> v) & 1U) continue;
            int links = 0;
            for (const auto& e : pattern.edges())
                if (e.contains(v)) links += popcount(e.mask() & placed);
            const auto key = [&](int lv, int dv) { return std::pair{lv, dv}; };
            if (best < 0 || key(links, deg[static_cast<std::size_t>(v)]) > key(best_links, deg[static_cast<std::size_t>(best)])) {
                best = v;
                best_links = links;
            }
        }
        order_.push_back(best);
        placed |= bit(best);
    }

    std::vector<int> position(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < order_.size(); ++i) position[static_cast<std::size_t>(order_[i])] = static_cast<int>(i);
    checks_.assign(order_.size(), {});
    for (const auto& e : pattern.edges()) {
        int last = 0;
        for (VertexMask rest = e.mask(); rest; rest &= rest - 1)
            last = std::max(last, position[static_cast<std::size_t>(std::countr_zero(rest))]);
        checks_[static_cast<std::size_t>(last)].push_back(e.mask());
    }
}

std::optional<Embedding> contains_sub(const Hypergraph& host, const Hypergraph& pattern) {
    if (host.uniformity() != pattern.uniformity()) throw std::invalid_argument("uniformity mismatch");
    if (pattern.order() > host.order() || pattern.edge_count() > host.edge_count()) return std::nullopt;
    const EmbeddingPlan plan(pattern);
    const auto host_deg = degrees(host);
    const auto pattern_deg = degrees(pattern);
    return plan.find(
        host.order(), {}, [&](VertexMask m) { return host.has_edge(m); },
        [&](int pv, int hv) { return host_deg[static_cast<std::size_t>(hv)] >= pattern_deg[static_cast<std::size_t>(pv)]; });
}

bool is_valid_embedding(const Hypergraph& host, const Hypergraph& pattern, std::span<const int> map) {
    if (map.size() != static_cast<std::size_t>(pattern.order())) return false;
    std::vector<bool> seen(static_cast<std::size_t>(host.order()), false);
    for (int v : map) {
        if (v < 0 || v >= host.order() || seen[static_cast<std::size_t>(v)]) return false;
        seen[static_cast<std::size_t>(v)] = true;
    }
    for (const auto& e : pattern.edges()) {
        std::vector<int> img;
        for (int v : e.vertices()) img.push_back(map[static_cast<std::size_t>(v)]);
        std::sort(img.begin(), img.end());
        bool found = false;
        for (const auto& he : host.edges())
            if (he.vertices() == img) found = true;
        if (!found) return false;
    }
    return true;
}

}  // namespace hyperramsey
