#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "hyperramsey/isomorphism.hpp"

using namespace hyperramsey;

namespace {

// Least sorted edge-mask vector over all p! relabellings.
std::vector<VertexMask> brute_canonical(const Hypergraph& h) {
    std::vector<int> perm(static_cast<std::size_t>(h.order()));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<VertexMask> best;
    bool first = true;
    do {
        std::vector<VertexMask> edges;
        for (const auto& e : h.edges()) {
            VertexMask m = 0;
            for (int v : e.vertices()) m |= bit(perm[v]);
            edges.push_back(m);
        }
        std::sort(edges.begin(), edges.end());
        if (first || edges < best) best = edges;
        first = false;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

Hypergraph random_hypergraph(std::mt19937& rng, int p, int r, double density) {
    std::vector<Hyperedge> edges;
    std::bernoulli_distribution keep(density);
    for_each_subset(p, r, [&](VertexMask m) {
        if (keep(rng)) edges.push_back(Hyperedge::from_mask(m));
    });
    return {p, r, edges};
}

}  // namespace

TEST_CASE("canonical form is invariant under relabelling") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 200; ++trial) {
        const int p = 3 + static_cast<int>(rng() % 7);
        const auto h = random_hypergraph(rng, p, 3, 0.2);
        std::vector<int> perm(static_cast<std::size_t>(p));
        std::iota(perm.begin(), perm.end(), 0);
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto g = relabel(h, perm);
        CHECK(canonical_form(g) == canonical_form(h));
        CHECK(is_isomorphic(g, h));
        CHECK(from_canonical(canonical_form(h)).edge_count() == h.edge_count());
        CHECK(is_isomorphic(from_canonical(canonical_form(h)), h));
    }
}

TEST_CASE("isomorphism classes match brute force on small hypergraphs") {
    std::mt19937 rng(5);
    for (int trial = 0; trial < 400; ++trial) {
        const int p = 3 + static_cast<int>(rng() % 4);
        const int r = 2 + static_cast<int>(rng() % 2);
        const auto a = random_hypergraph(rng, p, r, 0.4);
        const auto b = random_hypergraph(rng, p, r, 0.4);
        CHECK(is_isomorphic(a, b) == (brute_canonical(a) == brute_canonical(b)));
    }
}

TEST_CASE("number of classes with at most three 3-edges on six vertices") {
    std::set<CanonicalForm> fast;
    std::set<std::vector<VertexMask>> slow;
    std::vector<VertexMask> all;
    for_each_subset(6, 3, [&](VertexMask m) { all.push_back(m); });
    auto add = [&](std::vector<Hyperedge> edges) {
        const Hypergraph h(6, 3, std::move(edges));
        fast.insert(canonical_form(h));
        slow.insert(brute_canonical(h));
    };
    add({});
    for (std::size_t a = 0; a < all.size(); ++a) {
        add({Hyperedge::from_mask(all[a])});
        for (std::size_t b = a + 1; b < all.size(); ++b) {
            add({Hyperedge::from_mask(all[a]), Hyperedge::from_mask(all[b])});
            for (std::size_t c = b + 1; c < all.size(); ++c)
                add({Hyperedge::from_mask(all[a]), Hyperedge::from_mask(all[b]), Hyperedge::from_mask(all[c])});
        }
    }
    CHECK(fast.size() == slow.size());
}

TEST_CASE("different orders or uniformities are never isomorphic") {
    CHECK_FALSE(is_isomorphic(Hypergraph(4, 3), Hypergraph(5, 3)));
    CHECK_FALSE(is_isomorphic(Hypergraph(4, 3), Hypergraph(4, 2)));
    CHECK(is_isomorphic(Hypergraph(4, 3), Hypergraph(4, 3)));
}
