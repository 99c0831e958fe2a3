#pragma once

#include <compare>
#include <cstddef>
#include <span>
#include <vector>

#include "hyperramsey/combinatorics.hpp"

namespace hyperramsey {

/// An unordered set of distinct vertices. Ordering is colexicographic.
class Hyperedge {
public:
    Hyperedge() = default;
    /// Throws std::invalid_argument on repeated or negative vertices.
    explicit Hyperedge(const std::vector<int>& vertices);
    static Hyperedge from_mask(VertexMask m) {
        Hyperedge e;
        e.mask_ = m;
        return e;
    }

    VertexMask mask() const { return mask_; }
    int size() const { return popcount(mask_); }
    bool contains(int v) const { return (mask_ >> v) & 1U; }
    /// Sorted vertex list.
    std::vector<int> vertices() const { return mask_vertices(mask_); }
    int max_vertex() const;

    friend auto operator<=>(const Hyperedge&, const Hyperedge&) = default;

private:
    VertexMask mask_ = 0;
};

/// An r-uniform hypergraph on vertices {0, ..., order - 1}. Immutable after
/// construction; edges are kept sorted in colex order and duplicate-free.
class Hypergraph {
public:
    Hypergraph() = default;
    /// Throws std::invalid_argument when r < 2, order is outside [0, 64], or an
    /// edge does not have exactly r vertices inside [0, order).
    Hypergraph(int order, int uniformity, std::vector<Hyperedge> edges = {});
    Hypergraph(int order, int uniformity, const std::vector<std::vector<int>>& edges);

    int order() const { return order_; }
    int uniformity() const { return uniformity_; }
    std::span<const Hyperedge> edges() const { return edges_; }
    std::size_t edge_count() const { return edges_.size(); }
    bool empty() const { return edges_.empty(); }

    bool has_edge(VertexMask m) const;
    /// Position of the edge in edges(), or -1.
    std::ptrdiff_t edge_index(VertexMask m) const;
    VertexMask vertex_mask() const { return order_ == 64 ? ~VertexMask{0} : bit(order_) - 1; }

    friend bool operator==(const Hypergraph&, const Hypergraph&) = default;

private:
    int order_ = 0;
    int uniformity_ = 2;
    std::vector<Hyperedge> edges_;
};

/// Vertex blocks of the Berge-connectivity relation; isolated vertices are singletons.
struct ComponentPartition {
    std::vector<std::vector<int>> blocks;

    std::size_t count() const { return blocks.size(); }
    /// c(H): order of the largest block (0 for the empty hypergraph).
    int largest() const;
    /// Index of the block containing each vertex.
    std::vector<int> block_of(int order) const;
};

/// K_n^(r).
Hypergraph complete_hypergraph(int n, int r);

/// Number of edges containing v. Throws std::out_of_range.
int degree(const Hypergraph& h, int v);
std::vector<int> degrees(const Hypergraph& h);
/// delta(H); 0 for an order-0 hypergraph.
int min_degree(const Hypergraph& h);

ComponentPartition components(const Hypergraph& h);
inline int largest_component_order(const Hypergraph& h) { return components(h).largest(); }
inline bool is_connected(const Hypergraph& h) { return h.order() > 0 && components(h).count() == 1; }

Hypergraph without_edge(const Hypergraph& h, std::size_t edge_position);
Hypergraph with_edge(const Hypergraph& h, const Hyperedge& e);
/// Image of h under the vertex map perm (perm[old] = new, a bijection of [0, order)).
Hypergraph relabel(const Hypergraph& h, std::span<const int> perm);
/// Subhypergraph induced by `vertices`, relabelled 0..k-1 in the given order.
Hypergraph induced(const Hypergraph& h, std::span<const int> vertices);
Hypergraph disjoint_union(const Hypergraph& a, const Hypergraph& b);

}  // namespace hyperramsey
