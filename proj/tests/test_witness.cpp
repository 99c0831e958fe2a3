#include <doctest.h>

#include <random>
#include <stdexcept>

#include "hyperramsey/trees.hpp"
#include "hyperramsey/weak_coloring.hpp"
#include "hyperramsey/witness.hpp"

using namespace hyperramsey;

namespace {

TwoColoring random_coloring(std::mt19937& rng, int p, int r, double red) {
    TwoColoring c(p, r);
    std::bernoulli_distribution coin(red);
    for_each_subset(p, r, [&](VertexMask e) { c.set(e, coin(rng) ? EdgeColor::red : EdgeColor::blue); });
    return c;
}

}  // namespace

TEST_CASE("Burr colouring layout") {
    const auto c = burr_witness(2, 2, 5, 3);
    REQUIRE(c.order() == 5);
    for_each_subset(5, 3, [&](VertexMask e) { CHECK(c.is_red(e) == ((e & bit(4)) != 0)); });
    CHECK(verify_witness(c, complete_hypergraph(4, 3), loose_path(5, 3)).clean());
    CHECK(verify_witness(swap_colors(c), loose_path(5, 3), 4).clean());

    // Blocks are consecutive, the t - 1 block last.
    const auto d = burr_witness(3, 2, 4, 3);
    REQUIRE(d.order() == 7);
    CHECK(d.is_blue(vertices_mask({0, 1, 2})));
    CHECK(d.is_blue(vertices_mask({3, 4, 5})));
    CHECK(d.is_red(vertices_mask({2, 3, 4})));
    CHECK(d.is_red(vertices_mask({4, 5, 6})));
    CHECK_THROWS_AS(burr_witness(0, 1, 3, 3), std::invalid_argument);
}

TEST_CASE("Burr colourings are clean for complete red sides and tree blue sides") {
    for (int k = 3; k <= 6; ++k) {
        const auto chi = static_cast<int>(chi_w_complete(k, 3));
        const auto t = static_cast<int>(t_complete(k, 3));
        for (int m : {3, 5, 7})
            for (const auto& tree : enumerate_trees(m, 3)) {
                const auto c = burr_witness(chi, t, m, 3);
                CHECK(c.order() == (chi - 1) * (m - 1) + t - 1);
                CHECK(verify_witness(c, complete_hypergraph(k, 3), tree).clean());
            }
    }
}

TEST_CASE("extending by a red clique preserves cleanliness") {
    std::mt19937 rng(31);
    struct Case {
        Hypergraph h;
        int r;
        int n;
    };
    const std::vector<Case> cases{{loose_path(3, 2), 2, 4}, {loose_path(4, 2), 2, 4}, {loose_path(5, 3), 3, 6}, {loose_cycle_c4(), 3, 6}};
    int bases = 0;
    for (const auto& cs : cases) {
        const int smaller = cs.n - cs.r + 1;
        for (int trial = 0; trial < 300; ++trial) {
            const int p = cs.r + static_cast<int>(rng() % 4);
            const auto base = random_coloring(rng, p, cs.r, 0.3);
            if (!verify_witness(base, cs.h, smaller).clean()) continue;
            ++bases;
            const auto ext = extend_red_clique(base, cs.h.order());
            CHECK(ext.order() == p + cs.h.order() - 1);
            CHECK(verify_witness(ext, cs.h, cs.n).clean());
        }
    }
    CHECK(bases > 20);
}

TEST_CASE("cubic residue colourings") {
    for (int j : {2, 4}) {
        const auto c = cubic_residue_witness(j);
        CHECK(c.order() == 3 * j + 1);
        const auto red = c.edges_of(EdgeColor::red);
        for (std::size_t a = 0; a < red.edge_count(); ++a)
            for (std::size_t b = a + 1; b < red.edge_count(); ++b) CHECK(popcount(red.edges()[a].mask() & red.edges()[b].mask()) <= 1);
        CHECK_FALSE(find_blue_clique(c, 2 * j + 1));
        CHECK(max_blue_clique(c) <= std::max(3 * j / 2 + 1, 2 * j));
        CHECK(verify_witness(c, loose_cycle_c4(), 2 * j + 1).clean());
    }
    CHECK_THROWS_AS(cubic_residue_witness(3), std::invalid_argument);
    CHECK_THROWS_AS(cubic_residue_witness(0), std::invalid_argument);
}

TEST_CASE("failed verification carries evidence") {
    const TwoColoring all_red(6, 3, EdgeColor::red);
    const auto path = loose_path(5, 3);
    const auto v = verify_witness(all_red, path, 4);
    CHECK(v.kind == WitnessFailure::red_embedding);
    REQUIRE(v.embedding);
    CHECK(is_valid_embedding(all_red.edges_of(EdgeColor::red), path, *v.embedding));

    const TwoColoring all_blue(5, 3, EdgeColor::blue);
    const auto w = verify_witness(all_blue, path, 5);
    CHECK(w.kind == WitnessFailure::blue_clique);
    CHECK(w.clique == std::vector<int>{0, 1, 2, 3, 4});
    CHECK(verify_witness(all_blue, path, complete_hypergraph(4, 3)).kind == WitnessFailure::blue_embedding);
    CHECK(max_blue_clique(all_blue) == 5);
    CHECK(find_blue_clique(all_blue, 6) == std::nullopt);
    CHECK_THROWS_AS(verify_witness(all_blue, complete_hypergraph(3, 2), 3), std::invalid_argument);
}
