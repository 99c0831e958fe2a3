#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>

#include "hyperramsey/hypergraph.hpp"

using namespace hyperramsey;

namespace {

Hypergraph random_hypergraph(std::mt19937& rng, int p, int r, double density) {
    std::vector<Hyperedge> edges;
    std::bernoulli_distribution keep(density);
    for_each_subset(p, r, [&](VertexMask m) {
        if (keep(rng)) edges.push_back(Hyperedge::from_mask(m));
    });
    return {p, r, edges};
}

// Reachability by repeated sweeps over the edge list.
std::vector<int> naive_component_labels(const Hypergraph& h) {
    std::vector<int> label(static_cast<std::size_t>(h.order()));
    for (int v = 0; v < h.order(); ++v) label[v] = v;
    bool changed = true;
    while (changed) {
        changed = false;
        for (const auto& e : h.edges()) {
            int low = h.order();
            for (int v : e.vertices()) low = std::min(low, label[v]);
            for (int v : e.vertices())
                if (label[v] != low) {
                    label[v] = low;
                    changed = true;
                }
        }
    }
    return label;
}

}  // namespace

TEST_CASE("construction validates and normalises edges") {
    CHECK_THROWS_AS(Hyperedge({1, 1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Hyperedge({-1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(65, 3), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(4, 3, std::vector<std::vector<int>>{{0, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(4, 3, std::vector<std::vector<int>>{{0, 1, 4}}), std::invalid_argument);

    const Hypergraph h(5, 3, std::vector<std::vector<int>>{{2, 3, 4}, {0, 1, 2}, {2, 1, 0}});
    REQUIRE(h.edge_count() == 2);
    CHECK(h.edges()[0].vertices() == std::vector<int>{0, 1, 2});
    CHECK(h.has_edge(vertices_mask({2, 3, 4})));
    CHECK_FALSE(h.has_edge(vertices_mask({1, 3, 4})));
    CHECK(h.edge_index(vertices_mask({2, 3, 4})) == 1);
    CHECK(h.edge_index(vertices_mask({0, 3, 4})) == -1);
}

TEST_CASE("complete hypergraph, degrees") {
    const auto k = complete_hypergraph(6, 3);
    CHECK(k.edge_count() == 20);
    CHECK(min_degree(k) == 10);
    CHECK(degree(k, 5) == 10);
    CHECK_THROWS_AS(degree(k, 6), std::out_of_range);
    CHECK(complete_hypergraph(2, 3).empty());
    CHECK(min_degree(Hypergraph(0, 3)) == 0);
}

TEST_CASE("components agree with a naive sweep") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
        const int p = 1 + static_cast<int>(rng() % 9);
        const int r = 2 + static_cast<int>(rng() % 3);
        const auto h = random_hypergraph(rng, p, r, 0.08);
        const auto labels = naive_component_labels(h);
        const auto part = components(h);
        const auto block = part.block_of(p);
        for (int a = 0; a < p; ++a)
            for (int b = 0; b < p; ++b) CHECK((labels[a] == labels[b]) == (block[a] == block[b]));
        int largest = 0;
        for (int v = 0; v < p; ++v) largest = std::max<int>(largest, static_cast<int>(std::count(labels.begin(), labels.end(), labels[v])));
        CHECK(part.largest() == largest);
        CHECK(is_connected(h) == (part.count() == 1));
    }
}

TEST_CASE("edge edits, relabelling, induced subhypergraphs and unions") {
    const Hypergraph h(5, 3, std::vector<std::vector<int>>{{0, 1, 2}, {2, 3, 4}});
    CHECK(without_edge(h, 0).edge_count() == 1);
    CHECK(with_edge(h, Hyperedge({0, 1, 2})) == h);
    CHECK(with_edge(h, Hyperedge({0, 3, 4})).edge_count() == 3);

    const std::vector<int> perm{4, 3, 2, 1, 0};
    const auto g = relabel(h, perm);
    CHECK(g.has_edge(vertices_mask({2, 3, 4})));
    CHECK(g.has_edge(vertices_mask({0, 1, 2})));

    const std::vector<int> keep{2, 3, 4};
    const auto sub = induced(h, keep);
    CHECK(sub.order() == 3);
    CHECK(sub.edge_count() == 1);

    const auto u = disjoint_union(h, h);
    CHECK(u.order() == 10);
    CHECK(u.edge_count() == 4);
    CHECK(components(u).count() == 2);
}
