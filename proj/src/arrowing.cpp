#include "hyperramsey/arrowing.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <map>
#include <numeric>
#include <stdexcept>

#include "hyperramsey/bounds.hpp"
#include "hyperramsey/embedding.hpp"
#include "hyperramsey/weak_coloring.hpp"
#include "hyperramsey/witness.hpp"

namespace hyperramsey {

std::string_view to_string(EdgeOrder o) { return o == EdgeOrder::colex ? "colex" : "degree-guided"; }

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::arrows: return "arrows";
        case Verdict::counterexample: return "counterexample";
        case Verdict::budget_exhausted: return "budget-exhausted";
    }
    return "?";
}

namespace {

enum : std::uint8_t { kUncoloured = 0, kRed = 1, kBlue = 2 };

std::vector<VertexMask> edge_order(int p, int r, EdgeOrder how) {
    std::vector<VertexMask> colex;
    for_each_subset(p, r, [&](VertexMask m) { colex.push_back(m); });
    if (how == EdgeOrder::colex || colex.empty()) return colex;

    // Greedy: next edge is the one sharing r - 1 vertices with the most
    // already-ordered edges; ties go to the colex-smaller edge.
    std::vector<VertexMask> out;
    std::vector<int> score(colex.size(), 0);
    std::vector<bool> taken(colex.size(), false);
    std::size_t pick = 0;
    for (std::size_t step = 0; step < colex.size(); ++step) {
        if (step > 0) {
            int best = -1;
            for (std::size_t i = 0; i < colex.size(); ++i)
                if (!taken[i] && score[i] > best) {
                    best = score[i];
                    pick = i;
                }
        }
        taken[pick] = true;
        out.push_back(colex[pick]);
        for (std::size_t i = 0; i < colex.size(); ++i)
            if (!taken[i] && popcount(colex[i] & colex[pick]) == r - 1) ++score[i];
    }
    return out;
}

class ArrowingSearch {
public:
    ArrowingSearch(int p, const Hypergraph& pattern, int n, const SearchConfig& cfg)
        : p_(p), r_(pattern.uniformity()), n_(n), cfg_(cfg), pattern_(pattern) {
        for (int v = 0; v <= kMaxOrder; ++v)
            for (int i = 0; i <= r_; ++i) binom_[static_cast<std::size_t>(v)][static_cast<std::size_t>(i)] = i <= 8 ? binomial(v, i) : 0;
        order_ = edge_order(p, r_, cfg.edge_order);
        state_.assign(order_.size(), kUncoloured);
        all_ = p == 64 ? ~VertexMask{0} : bit(p) - 1;
        if (pattern.order() <= p)
            for (const auto& e : pattern.edges()) plans_.emplace_back(pattern, e.mask());
        if (cfg.symmetry) prepare_symmetry();
    }

    ArrowingResult run() {
        ArrowingResult res;
        if (pattern_.empty() && pattern_.order() <= p_) {
            res.verdict = Verdict::arrows;
            return res;
        }
        const bool found = dfs(0);
        res.nodes = nodes_;
        if (exhausted_) {
            res.verdict = Verdict::budget_exhausted;
        } else if (found) {
            res.verdict = Verdict::counterexample;
            std::vector<EdgeColor> colors(state_.size());
            for (std::size_t i = 0; i < state_.size(); ++i) colors[i] = state_[i] == kRed ? EdgeColor::red : EdgeColor::blue;
            res.counterexample = TwoColoring(p_, r_, std::move(colors));
        } else {
            res.verdict = Verdict::arrows;
        }
        return res;
    }

private:
    std::size_t rank(VertexMask m) const {
        std::size_t out = 0;
        std::size_t i = 1;
        for (; m; m &= m - 1, ++i) out += static_cast<std::size_t>(binom_[static_cast<std::size_t>(std::countr_zero(m))][i]);
        return out;
    }

    bool coloured(VertexMask m, std::uint8_t c) const { return state_[rank(m)] == c; }

    bool red_complete(VertexMask e) const {
        auto is_red = [this](VertexMask m) { return coloured(m, kRed); };
        auto any = [](int, int) { return true; };
        auto images = mask_vertices(e);
        for (const auto& plan : plans_) {
            std::sort(images.begin(), images.end());
            do {
                if (plan.find(p_, images, is_red, any)) return true;
            } while (std::next_permutation(images.begin(), images.end()));
        }
        return false;
    }

    bool blue_complete(VertexMask e) const {
        VertexMask out = 0;
        return extend_clique(r_, [this](VertexMask m) { return coloured(m, kBlue); }, e, all_ & ~e, n_ - r_, out);
    }

    void prepare_symmetry() {
        boundary_.assign(order_.size() + 1, 0);
        const int top = std::min(cfg_.symmetry_levels, p_);
        for (int v = r_ + 1; v <= top; ++v) {
            const auto count = static_cast<std::size_t>(binomial(v, r_));
            const bool prefix_is_kv =
                std::all_of(order_.begin(), order_.begin() + static_cast<std::ptrdiff_t>(count), [v](VertexMask m) { return (m >> v) == 0; });
            if (!prefix_is_kv) continue;
            boundary_[count] = v;
            // perm_maps_[v][k][i] = colex rank of sigma_k(e_i) for each non-identity sigma_k in S_v.
            std::vector<VertexMask> kv;
            for_each_subset(v, r_, [&](VertexMask m) { kv.push_back(m); });
            std::vector<int> sigma(static_cast<std::size_t>(v));
            std::iota(sigma.begin(), sigma.end(), 0);
            auto& maps = perm_maps_[v];
            while (std::next_permutation(sigma.begin(), sigma.end())) {
                std::vector<std::uint32_t> map(kv.size());
                for (std::size_t i = 0; i < kv.size(); ++i) {
                    VertexMask img = 0;
                    for (VertexMask rest = kv[i]; rest; rest &= rest - 1) img |= bit(sigma[static_cast<std::size_t>(std::countr_zero(rest))]);
                    map[i] = static_cast<std::uint32_t>(rank(img));
                }
                maps.push_back(std::move(map));
            }
        }
    }

    // Edges inside {0..v-1} occupy colex ranks 0..C(v,r)-1, so the restricted
    // colouring is a prefix of state_.
    bool lex_leader(int v) const {
        for (const auto& map : perm_maps_.at(v)) {
            for (std::size_t i = 0; i < map.size(); ++i) {
                const auto y = state_[map[i]];
                const auto x = state_[i];
                if (y < x) return false;
                if (y > x) break;
            }
        }
        return true;
    }

    bool dfs(std::size_t idx) {
        if (idx == order_.size()) return true;
        const VertexMask e = order_[idx];
        const std::size_t rk = rank(e);
        for (std::uint8_t c : {kRed, kBlue}) {
            if (++nodes_ > cfg_.node_budget) {
                exhausted_ = true;
                state_[rk] = kUncoloured;
                return false;
            }
            state_[rk] = c;
            bool dead = c == kRed ? red_complete(e) : blue_complete(e);
            if (!dead && cfg_.symmetry && boundary_[idx + 1] != 0) dead = !lex_leader(boundary_[idx + 1]);
            if (!dead && dfs(idx + 1)) return true;
            if (exhausted_) {
                state_[rk] = kUncoloured;
                return false;
            }
        }
        state_[rk] = kUncoloured;
        return false;
    }

    int p_;
    int r_;
    int n_;
    SearchConfig cfg_;
    Hypergraph pattern_;
    std::array<std::array<std::int64_t, 9>, kMaxOrder + 1> binom_{};
    std::vector<VertexMask> order_;
    std::vector<std::uint8_t> state_;
    VertexMask all_ = 0;
    std::vector<EmbeddingPlan> plans_;
    std::vector<int> boundary_;
    std::map<int, std::vector<std::vector<std::uint32_t>>> perm_maps_;
    std::uint64_t nodes_ = 0;
    bool exhausted_ = false;
};

}  // namespace

ArrowingResult arrows(int p, const Hypergraph& red_pattern, int blue_n, const SearchConfig& cfg) {
    const int r = red_pattern.uniformity();
    if (blue_n < r) throw std::invalid_argument("blue clique size must be at least r");
    if (p < 0 || p > kMaxOrder) throw std::invalid_argument("p must lie in [0, 64]");
    if (r > 8) throw std::invalid_argument("search supports uniformity up to 8");
    if (cfg.node_budget == 0) throw std::invalid_argument("node budget must be positive");
    if (binomial(p, r) > TwoColoring::kMaxEdges) throw std::invalid_argument("host has too many edges to search");
    return ArrowingSearch(p, red_pattern, blue_n, cfg).run();
}

RamseyResult ramsey_number(const Hypergraph& red_pattern, int blue_n, const SearchConfig& cfg) {
    const int r = red_pattern.uniformity();
    if (blue_n < r) throw std::invalid_argument("blue clique size must be at least r");
    RamseyResult out;

    int start = 0;
    std::optional<TwoColoring> below;
    const auto chi = chi_w_complete(blue_n, r);
    const auto t = t_complete(blue_n, r);
    const auto c = largest_component_order(red_pattern);
    if (applicable(burr_lower(chi, t, c))) {
        // R(K_n, H) = R(H, K_n), so the colour-swapped witness certifies the bound.
        auto seed = swap_colors(burr_witness(static_cast<int>(chi), static_cast<int>(t), c, r));
        if (verify_witness(seed, red_pattern, blue_n).clean()) {
            start = seed.order() + 1;
            below = std::move(seed);
        }
    }
    if (!below) below = TwoColoring(0, r);

    SearchConfig remaining = cfg;
    for (int p = start; p <= kMaxOrder; ++p) {
        const auto res = arrows(p, red_pattern, blue_n, remaining);
        out.nodes += res.nodes;
        if (res.verdict == Verdict::budget_exhausted) {
            out.lower = p;
            out.certificate = std::move(below);
            return out;
        }
        if (res.verdict == Verdict::arrows) {
            out.exact = true;
            out.lower = p;
            out.upper = p;
            out.certificate = std::move(below);
            return out;
        }
        below = res.counterexample;
        if (remaining.node_budget <= res.nodes) {
            out.lower = p + 1;
            out.certificate = std::move(below);
            return out;
        }
        remaining.node_budget -= res.nodes;
    }
    throw std::invalid_argument("Ramsey number exceeds the 64-vertex search limit");
}

int independence_check(const TwoColoring& c) {
    const auto red = c.edges_of(EdgeColor::red);
    const auto edges = red.edges();
    int best = 0;
    auto dfs = [&](auto&& self, std::size_t from, VertexMask used, int size) -> void {
        best = std::max(best, size);
        const int room = popcount(~used & red.vertex_mask()) / c.uniformity();
        if (size + room <= best) return;
        for (std::size_t i = from; i < edges.size(); ++i)
            if ((edges[i].mask() & used) == 0) self(self, i + 1, used | edges[i].mask(), size + 1);
    };
    dfs(dfs, 0, 0, 0);
    return best;
}

}  // namespace hyperramsey
