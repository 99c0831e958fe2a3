#include "hyperramsey/weak_coloring.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

namespace hyperramsey {

namespace {

void check_cap(const Hypergraph& h, int cap) {
    if (h.order() > cap)
        throw std::length_error("order " + std::to_string(h.order()) + " exceeds colouring cap " + std::to_string(cap));
}

// Colours vertices 0..p-1 in order; colour of v is at most (colours used so
// far), which enumerates each partition exactly once. Edges are checked when
// their largest vertex is coloured.
class ColoringSearch {
public:
    ColoringSearch(const Hypergraph& h, int colors) : h_(h), colors_(colors), color_(static_cast<std::size_t>(h.order()), -1) {
        closing_.resize(static_cast<std::size_t>(h.order()));
        for (const auto& e : h.edges()) closing_[static_cast<std::size_t>(e.max_vertex())].push_back(e.mask());
    }

    template <typename Visit>
    void run(Visit&& visit) {
        stop_ = false;
        recurse(0, 0, visit);
    }

    void stop() { stop_ = true; }

private:
    template <typename Visit>
    void recurse(int v, int used, Visit& visit) {
        if (stop_) return;
        if (v == h_.order()) {
            if (used == colors_) visit(color_);
            return;
        }
        // Not enough vertices left to open the remaining colours.
        if (colors_ - used > h_.order() - v) return;
        const int limit = std::min(used + 1, colors_);
        for (int c = 0; c < limit && !stop_; ++c) {
            color_[static_cast<std::size_t>(v)] = c;
            if (closes_ok(v)) recurse(v + 1, std::max(used, c + 1), visit);
        }
        color_[static_cast<std::size_t>(v)] = -1;
    }

    bool closes_ok(int v) const {
        const int c = color_[static_cast<std::size_t>(v)];
        for (VertexMask e : closing_[static_cast<std::size_t>(v)]) {
            bool mono = true;
            for (VertexMask rest = e; rest && mono; rest &= rest - 1)
                mono = color_[static_cast<std::size_t>(std::countr_zero(rest))] == c;
            if (mono) return false;
        }
        return true;
    }

    const Hypergraph& h_;
    int colors_;
    std::vector<int> color_;
    std::vector<std::vector<VertexMask>> closing_;
    bool stop_ = false;
};

}  // namespace

bool is_weak_coloring(const Hypergraph& h, const WeakColoring& c) {
    if (c.assignment.size() != static_cast<std::size_t>(h.order())) return false;
    std::vector<bool> seen(static_cast<std::size_t>(std::max(c.color_count, 0)), false);
    for (int col : c.assignment) {
        if (col < 0 || col >= c.color_count) return false;
        seen[static_cast<std::size_t>(col)] = true;
    }
    if (std::find(seen.begin(), seen.end(), false) != seen.end()) return false;
    for (const auto& e : h.edges()) {
        const auto vs = e.vertices();
        const int first = c.assignment[static_cast<std::size_t>(vs[0])];
        if (std::all_of(vs.begin(), vs.end(), [&](int v) { return c.assignment[static_cast<std::size_t>(v)] == first; }))
            return false;
    }
    return true;
}

WeakChromaticResult weak_chromatic_number(const Hypergraph& h, int cap) {
    check_cap(h, cap);
    if (h.order() == 0) return {0, {{}, 0}};
    for (int k = 1; k <= h.order(); ++k) {
        ColoringSearch search(h, k);
        std::optional<std::vector<int>> found;
        search.run([&](const std::vector<int>& colors) {
            found = colors;
            search.stop();
        });
        if (found) return {k, {*found, k}};
    }
    throw std::logic_error("no weak colouring found");  // unreachable for r >= 2
}

int min_color_class(const Hypergraph& h, int cap) {
    const int chi = weak_chromatic_number(h, cap).chi_w;
    if (chi == 0) return 0;
    int best = h.order();
    ColoringSearch search(h, chi);
    search.run([&](const std::vector<int>& colors) {
        std::vector<int> size(static_cast<std::size_t>(chi), 0);
        for (int c : colors) ++size[static_cast<std::size_t>(c)];
        best = std::min(best, *std::min_element(size.begin(), size.end()));
        if (best == 1) search.stop();
    });
    return best;
}

std::int64_t chi_w_complete(std::int64_t n, int r) {
    if (n < 1 || r < 2) throw std::invalid_argument("need n >= 1 and r >= 2");
    return ceil_div(n, r - 1);
}

std::int64_t t_complete(std::int64_t n, int r) {
    if (n < 1 || r < 2) throw std::invalid_argument("need n >= 1 and r >= 2");
    const std::int64_t k = n % (r - 1);
    return k != 0 ? k : r - 1;
}

ColoringStats coloring_stats(const Hypergraph& h, int cap) {
    ColoringStats s;
    s.largest_component = largest_component_order(h);
    s.min_degree = min_degree(h);
    const bool complete = h.order() >= 1 && static_cast<std::int64_t>(h.edge_count()) == binomial(h.order(), h.uniformity());
    if (complete) {
        s.chi_w = chi_w_complete(h.order(), h.uniformity());
        s.t = t_complete(h.order(), h.uniformity());
    } else {
        s.chi_w = weak_chromatic_number(h, cap).chi_w;
        s.t = min_color_class(h, cap);
    }
    return s;
}

}  // namespace hyperramsey
