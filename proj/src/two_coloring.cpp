#include "hyperramsey/two_coloring.hpp"

#include <algorithm>
#include <stdexcept>

namespace hyperramsey {

namespace {
std::size_t checked_edge_count(int order, int r) {
    if (r < 2) throw std::invalid_argument("uniformity must be at least 2");
    if (order < 0 || order > kMaxOrder) throw std::invalid_argument("order must lie in [0, 64]");
    const auto n = binomial(order, r);
    if (n > TwoColoring::kMaxEdges) throw std::length_error("colouring too large to store");
    return static_cast<std::size_t>(n);
}
}  // namespace

TwoColoring::TwoColoring(int order, int uniformity, EdgeColor fill)
    : order_(order), uniformity_(uniformity), colors_(checked_edge_count(order, uniformity), fill) {}

TwoColoring::TwoColoring(int order, int uniformity, std::vector<EdgeColor> colors)
    : order_(order), uniformity_(uniformity), colors_(std::move(colors)) {
    if (colors_.size() != checked_edge_count(order, uniformity))
        throw std::invalid_argument("colour vector length must be C(p, r)");
}

void TwoColoring::set(VertexMask edge, EdgeColor c) {
    if (popcount(edge) != uniformity_ || (edge >> order_) != 0) throw std::invalid_argument("not an edge of the host");
    colors_[static_cast<std::size_t>(colex_rank(edge))] = c;
}

Hypergraph TwoColoring::edges_of(EdgeColor c) const {
    std::vector<Hyperedge> edges;
    std::size_t i = 0;
    for_each_subset(order_, uniformity_, [&](VertexMask m) {
        if (colors_[i++] == c) edges.push_back(Hyperedge::from_mask(m));
    });
    return {order_, uniformity_, std::move(edges)};
}

std::size_t TwoColoring::count(EdgeColor c) const {
    return static_cast<std::size_t>(std::count(colors_.begin(), colors_.end(), c));
}

TwoColoring swap_colors(const TwoColoring& c) {
    auto colors = c.colors();
    for (auto& x : colors) x = x == EdgeColor::red ? EdgeColor::blue : EdgeColor::red;
    return {c.order(), c.uniformity(), std::move(colors)};
}

}  // namespace hyperramsey
