#include "hyperramsey/hypergraph.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace hyperramsey {

Hyperedge::Hyperedge(const std::vector<int>& vertices) {
    for (int v : vertices) {
        if (v < 0 || v >= kMaxOrder) throw std::invalid_argument("hyperedge vertex " + std::to_string(v) + " outside [0, 64)");
        if (contains(v)) throw std::invalid_argument("hyperedge repeats vertex " + std::to_string(v));
        mask_ |= bit(v);
    }
}

int Hyperedge::max_vertex() const { return mask_ == 0 ? -1 : 63 - std::countl_zero(mask_); }

Hypergraph::Hypergraph(int order, int uniformity, std::vector<Hyperedge> edges)
    : order_(order), uniformity_(uniformity), edges_(std::move(edges)) {
    if (uniformity < 2) throw std::invalid_argument("uniformity must be at least 2");
    if (order < 0 || order > kMaxOrder) throw std::invalid_argument("order must lie in [0, 64]");
    for (const auto& e : edges_) {
        if (e.size() != uniformity) throw std::invalid_argument("edge does not have exactly r vertices");
        if (e.max_vertex() >= order) throw std::invalid_argument("edge vertex outside [0, order)");
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
}

namespace {
std::vector<Hyperedge> to_edges(const std::vector<std::vector<int>>& lists) {
    std::vector<Hyperedge> out;
    out.reserve(lists.size());
    for (const auto& l : lists) out.emplace_back(l);
    return out;
}
}  // namespace

Hypergraph::Hypergraph(int order, int uniformity, const std::vector<std::vector<int>>& edges)
    : Hypergraph(order, uniformity, to_edges(edges)) {}

bool Hypergraph::has_edge(VertexMask m) const { return edge_index(m) >= 0; }

std::ptrdiff_t Hypergraph::edge_index(VertexMask m) const {
    const auto it = std::lower_bound(edges_.begin(), edges_.end(), Hyperedge::from_mask(m));
    if (it == edges_.end() || it->mask() != m) return -1;
    return it - edges_.begin();
}

int ComponentPartition::largest() const {
    std::size_t best = 0;
    for (const auto& b : blocks) best = std::max(best, b.size());
    return static_cast<int>(best);
}

std::vector<int> ComponentPartition::block_of(int order) const {
    std::vector<int> out(static_cast<std::size_t>(order), -1);
    for (std::size_t i = 0; i < blocks.size(); ++i)
        for (int v : blocks[i]) out[static_cast<std::size_t>(v)] = static_cast<int>(i);
    return out;
}

Hypergraph complete_hypergraph(int n, int r) {
    if (n < 1) throw std::invalid_argument("complete hypergraph needs at least one vertex");
    if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
    if (n > kMaxOrder) throw std::invalid_argument("order must not exceed 64");
    std::vector<Hyperedge> edges;
    edges.reserve(static_cast<std::size_t>(binomial(n, r)));
    for_each_subset(n, r, [&](VertexMask m) { edges.push_back(Hyperedge::from_mask(m)); });
    return {n, r, std::move(edges)};
}

int degree(const Hypergraph& h, int v) {
    if (v < 0 || v >= h.order()) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
    return static_cast<int>(std::count_if(h.edges().begin(), h.edges().end(), [v](const Hyperedge& e) { return e.contains(v); }));
}

std::vector<int> degrees(const Hypergraph& h) {
    std::vector<int> d(static_cast<std::size_t>(h.order()), 0);
    for (const auto& e : h.edges())
        for (VertexMask m = e.mask(); m; m &= m - 1) ++d[static_cast<std::size_t>(std::countr_zero(m))];
    return d;
}

int min_degree(const Hypergraph& h) {
    const auto d = degrees(h);
    return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
}

ComponentPartition components(const Hypergraph& h) {
    // Union-find over vertices; each edge merges its vertices.
    std::vector<int> parent(static_cast<std::size_t>(h.order()));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int v) {
        while (parent[static_cast<std::size_t>(v)] != v) {
            parent[static_cast<std::size_t>(v)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(v)])];
            v = parent[static_cast<std::size_t>(v)];
        }
        return v;
    };
    for (const auto& e : h.edges()) {
        int root = find(std::countr_zero(e.mask()));
        for (VertexMask m = e.mask(); m; m &= m - 1) {
            const int other = find(std::countr_zero(m));
            if (other == root) continue;
            parent[static_cast<std::size_t>(std::max(other, root))] = std::min(other, root);
            root = std::min(other, root);
        }
    }
    // Blocks ordered by smallest member.
    ComponentPartition out;
    std::vector<int> block_index(static_cast<std::size_t>(h.order()), -1);
    for (int v = 0; v < h.order(); ++v) {
        const int root = find(v);
        auto& idx = block_index[static_cast<std::size_t>(root)];
        if (idx < 0) {
            idx = static_cast<int>(out.blocks.size());
            out.blocks.emplace_back();
        }
        out.blocks[static_cast<std::size_t>(idx)].push_back(v);
    }
    return out;
}

Hypergraph without_edge(const Hypergraph& h, std::size_t edge_position) {
    if (edge_position >= h.edge_count()) throw std::out_of_range("edge position out of range");
    std::vector<Hyperedge> edges(h.edges().begin(), h.edges().end());
    edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(edge_position));
    return {h.order(), h.uniformity(), std::move(edges)};
}

Hypergraph with_edge(const Hypergraph& h, const Hyperedge& e) {
    std::vector<Hyperedge> edges(h.edges().begin(), h.edges().end());
    edges.push_back(e);
    return {h.order(), h.uniformity(), std::move(edges)};
}

Hypergraph relabel(const Hypergraph& h, std::span<const int> perm) {
    if (perm.size() != static_cast<std::size_t>(h.order())) throw std::invalid_argument("permutation size differs from order");
    std::vector<Hyperedge> edges;
    edges.reserve(h.edge_count());
    for (const auto& e : h.edges()) {
        VertexMask m = 0;
        for (VertexMask rest = e.mask(); rest; rest &= rest - 1) m |= bit(perm[static_cast<std::size_t>(std::countr_zero(rest))]);
        edges.push_back(Hyperedge::from_mask(m));
    }
    return {h.order(), h.uniformity(), std::move(edges)};
}

Hypergraph induced(const Hypergraph& h, std::span<const int> vertices) {
    std::vector<int> new_label(static_cast<std::size_t>(h.order()), -1);
    VertexMask keep = 0;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        const int v = vertices[i];
        if (v < 0 || v >= h.order()) throw std::out_of_range("vertex out of range");
        new_label[static_cast<std::size_t>(v)] = static_cast<int>(i);
        keep |= bit(v);
    }
    std::vector<Hyperedge> edges;
    for (const auto& e : h.edges()) {
        if ((e.mask() & ~keep) != 0) continue;
        VertexMask m = 0;
        for (VertexMask rest = e.mask(); rest; rest &= rest - 1) m |= bit(new_label[static_cast<std::size_t>(std::countr_zero(rest))]);
        edges.push_back(Hyperedge::from_mask(m));
    }
    return {static_cast<int>(vertices.size()), h.uniformity(), std::move(edges)};
}

Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b) {
    if (a.uniformity() != b.uniformity()) throw std::invalid_argument("uniformity mismatch");
    std::vector<Hyperedge> edges(a.edges().begin(), a.edges().end());
    for (const auto& e : b.edges()) edges.push_back(Hyperedge::from_mask(e.mask() << a.order()));
    return {a.order() + b.order(), a.uniformity(), std::move(edges)};
}

}  // namespace hyperramsey
