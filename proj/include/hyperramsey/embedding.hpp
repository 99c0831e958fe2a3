#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hyperramsey/hypergraph.hpp"

namespace hyperramsey {

/// embedding[pattern vertex] = host vertex; always injective.
using Embedding = std::vector<int>;

/// Precomputed search order for embedding a fixed pattern into arbitrary hosts.
///
/// Pattern vertices are placed one at a time. Vertices in `prefix` come first
/// (ascending), then a connectivity-first order: the next vertex is the one
/// sharing edges with the most already-placed vertices, ties broken by larger
/// degree and then smaller index. Isolated pattern vertices come last. Each
/// pattern edge is checked at the step where its last vertex is placed.
class EmbeddingPlan {
public:
    explicit EmbeddingPlan(const Hypergraph& pattern, VertexMask prefix = 0);

    const Hypergraph& pattern() const { return pattern_; }
    std::span<const int> order() const { return order_; }
    std::size_t prefix_size() const { return prefix_size_; }

    /// Backtracking search. `has_edge(mask)` answers host-edge membership and
    /// `candidate_ok(pattern_vertex, host_vertex)` filters candidates. Images
    /// of the prefix vertices are fixed by `prefix_images` (in prefix order).
    /// Host candidates are tried in ascending order, so the result is the
    /// first embedding in a fixed lexicographic exploration order.
    template <typename HasEdge, typename CandidateOk>
    std::optional<Embedding> find(int host_order, std::span<const int> prefix_images, HasEdge&& has_edge,
                                  CandidateOk&& candidate_ok) const {
        const int n = pattern_.order();
        if (n > host_order) return std::nullopt;
        Embedding image(static_cast<std::size_t>(n), -1);
        VertexMask used = 0;
        for (std::size_t i = 0; i < prefix_size_; ++i) {
            const int hv = prefix_images[i];
            if (hv < 0 || hv >= host_order || ((used >> hv) & 1U)) return std::nullopt;
            image[static_cast<std::size_t>(order_[i])] = hv;
            used |= bit(hv);
        }
        for (std::size_t i = 0; i < prefix_size_; ++i)
            if (!edges_ok(i, image, has_edge)) return std::nullopt;
        if (extend(prefix_size_, host_order, image, used, has_edge, candidate_ok)) return image;
        return std::nullopt;
    }

    template <typename HasEdge>
    std::optional<Embedding> find(int host_order, HasEdge&& has_edge) const {
        return find(host_order, {}, has_edge, [](int, int) { return true; });
    }

private:
    template <typename HasEdge>
    bool edges_ok(std::size_t pos, const Embedding& image, HasEdge& has_edge) const {
        for (VertexMask pe : checks_[pos]) {
            VertexMask m = 0;
            for (VertexMask rest = pe; rest; rest &= rest - 1) m |= bit(image[static_cast<std::size_t>(std::countr_zero(rest))]);
            if (!has_edge(m)) return false;
        }
        return true;
    }

    template <typename HasEdge, typename CandidateOk>
    bool extend(std::size_t pos, int host_order, Embedding& image, VertexMask used, HasEdge& has_edge,
                CandidateOk& candidate_ok) const {
        if (pos == order_.size()) return true;
        const int pv = order_[pos];
        for (int hv = 0; hv < host_order; ++hv) {
            if ((used >> hv) & 1U) continue;
            if (!candidate_ok(pv, hv)) continue;
            image[static_cast<std::size_t>(pv)] = hv;
            if (edges_ok(pos, image, has_edge) &&
                extend(pos + 1, host_order, image, used | bit(hv), has_edge, candidate_ok))
                return true;
        }
        image[static_cast<std::size_t>(pv)] = -1;
        return false;
    }

    Hypergraph pattern_;
    std::vector<int> order_;
    std::size_t prefix_size_ = 0;
    std::vector<std::vector<VertexMask>> checks_;
};

/// An injective vertex map sending every pattern edge onto a host edge, or
/// nullopt. Isolated pattern vertices take any spare host vertices. Candidate
/// host vertices are filtered by degree. Throws std::invalid_argument on
/// uniformity mismatch.
std::optional<Embedding> contains_sub(const Hypergraph& host, const Hypergraph& pattern);

/// True iff `map` is an injective map into [0, host.order()) sending each
/// pattern edge to a host edge. Written independently of the search.
bool is_valid_embedding(const Hypergraph& host, const Hypergraph& pattern, std::span<const int> map);

}  // namespace hyperramsey
