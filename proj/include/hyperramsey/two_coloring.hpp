#pragma once

#include <cstdint>
#include <vector>

#include "hyperramsey/hypergraph.hpp"

namespace hyperramsey {

enum class EdgeColor : std::uint8_t { red = 0, blue = 1 };

/// A red/blue colouring of every edge of K_p^(r), indexed by colex rank.
class TwoColoring {
public:
    /// Colourings are capped at 2^24 edges; throws std::length_error above it.
    static constexpr std::int64_t kMaxEdges = std::int64_t{1} << 24;

    TwoColoring() = default;
    TwoColoring(int order, int uniformity, EdgeColor fill = EdgeColor::blue);
    TwoColoring(int order, int uniformity, std::vector<EdgeColor> colors);

    int order() const { return order_; }
    int uniformity() const { return uniformity_; }
    std::size_t size() const { return colors_.size(); }
    const std::vector<EdgeColor>& colors() const { return colors_; }

    EdgeColor color(VertexMask edge) const { return colors_[static_cast<std::size_t>(colex_rank(edge))]; }
    EdgeColor color_at(std::size_t rank) const { return colors_[rank]; }
    bool is_red(VertexMask edge) const { return color(edge) == EdgeColor::red; }
    bool is_blue(VertexMask edge) const { return color(edge) == EdgeColor::blue; }
    void set(VertexMask edge, EdgeColor c);

    /// Subhypergraph of K_p^(r) spanned by edges of colour c.
    Hypergraph edges_of(EdgeColor c) const;
    std::size_t count(EdgeColor c) const;

    friend bool operator==(const TwoColoring&, const TwoColoring&) = default;

private:
    int order_ = 0;
    int uniformity_ = 2;
    std::vector<EdgeColor> colors_;
};

/// Exchanges red and blue; turns a witness for R(A, B) into one for R(B, A).
TwoColoring swap_colors(const TwoColoring& c);

}  // namespace hyperramsey
