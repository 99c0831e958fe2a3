#include <doctest.h>

#include <stdexcept>

#include "hyperramsey/arrowing.hpp"
#include "hyperramsey/bounds.hpp"
#include "hyperramsey/trees.hpp"
#include "hyperramsey/witness.hpp"

using namespace hyperramsey;

namespace {

// Tries all 2^C(p, r) colourings.
bool exhaustive_arrows(int p, const Hypergraph& red, int n) {
    const auto edges = static_cast<int>(binomial(p, red.uniformity()));
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << edges); ++bits) {
        std::vector<EdgeColor> colors(static_cast<std::size_t>(edges));
        for (int i = 0; i < edges; ++i) colors[i] = ((bits >> i) & 1U) ? EdgeColor::red : EdgeColor::blue;
        if (verify_witness(TwoColoring(p, red.uniformity(), colors), red, n).clean()) return false;
    }
    return true;
}

SearchConfig config(bool symmetry, EdgeOrder order) {
    SearchConfig cfg;
    cfg.symmetry = symmetry;
    cfg.edge_order = order;
    return cfg;
}

}  // namespace

TEST_CASE("search agrees with exhaustive enumeration") {
    struct Case {
        int p;
        Hypergraph red;
        int n;
    };
    const std::vector<Case> cases{{4, loose_cycle_c4(), 4}, {5, loose_cycle_c4(), 4}, {5, loose_path(5, 3), 4}, {4, loose_path(5, 3), 4},
                                  {4, loose_path(3, 2), 3}, {5, loose_path(3, 2), 3}, {5, loose_path(4, 2), 3}, {6, loose_path(4, 2), 3}};
    for (const auto& c : cases) {
        const bool expected = exhaustive_arrows(c.p, c.red, c.n);
        for (bool sym : {false, true})
            for (auto order : {EdgeOrder::colex, EdgeOrder::degree_guided}) {
                const auto res = arrows(c.p, c.red, c.n, config(sym, order));
                CHECK((res.verdict == Verdict::arrows) == expected);
                if (res.verdict == Verdict::counterexample) {
                    REQUIRE(res.counterexample);
                    CHECK(verify_witness(*res.counterexample, c.red, c.n).clean());
                }
            }
    }
}

TEST_CASE("exact small values") {
    CHECK(ramsey_number(loose_cycle_c4(), 4).lower == 5);
    CHECK(ramsey_number(loose_path(5, 3), 4).lower == 6);
    for (int n = 3; n <= 6; ++n) CHECK(ramsey_number(loose_path(3, 3), n).lower == n);
    const auto graph = ramsey_number(loose_path(3, 2), 3);
    CHECK(graph.exact);
    CHECK(graph.lower == 5);
    REQUIRE(graph.upper);
    CHECK(*graph.upper == 5);
    REQUIRE(graph.certificate);
    CHECK(graph.certificate->order() == 4);
    CHECK(verify_witness(*graph.certificate, loose_path(3, 2), 3).clean());
}

TEST_CASE("search results lie in the best known interval") {
    for (int n : {3, 4}) {
        const auto res = ramsey_number(loose_path(5, 3), n, config(true, EdgeOrder::colex));
        REQUIRE(res.exact);
        const auto iv = best_interval(Family::tree, 5, n, 3).interval;
        CHECK(res.lower >= iv.lower);
        CHECK(res.lower <= iv.upper);
        if (iv.exact()) CHECK(res.lower == iv.lower);
    }
}

TEST_CASE("the 3-edge star against K4") {
    const auto star = star_tree(3, 3);
    const auto iv = best_interval(Family::tree, 7, 4, 3).interval;
    const auto sym = ramsey_number(star, 4, config(true, EdgeOrder::colex));
    const auto plain = ramsey_number(star, 4, config(false, EdgeOrder::degree_guided));
    REQUIRE(sym.exact);
    REQUIRE(plain.exact);
    CHECK(sym.lower == plain.lower);
    CHECK(sym.lower >= iv.lower);
    CHECK(sym.lower <= iv.upper);
    CHECK(sym.lower == 8);
    REQUIRE(sym.certificate);
    CHECK(verify_witness(*sym.certificate, star, 4).clean());
}

TEST_CASE("budget exhaustion is its own verdict") {
    SearchConfig tiny;
    tiny.node_budget = 1;
    const auto res = arrows(6, loose_path(5, 3), 4, tiny);
    CHECK(res.verdict == Verdict::budget_exhausted);
    CHECK_FALSE(res.counterexample);
    const auto r = ramsey_number(loose_path(5, 3), 4, tiny);
    CHECK_FALSE(r.exact);
    CHECK_FALSE(r.upper);
    CHECK(r.lower == 6);
    REQUIRE(r.certificate);
    CHECK(verify_witness(*r.certificate, loose_path(5, 3), 4).clean());
}

TEST_CASE("argument checks and degenerate patterns") {
    SearchConfig zero;
    zero.node_budget = 0;
    CHECK_THROWS_AS(arrows(5, loose_cycle_c4(), 4, zero), std::invalid_argument);
    CHECK_THROWS_AS(arrows(5, loose_cycle_c4(), 2), std::invalid_argument);
    CHECK_THROWS_AS(arrows(65, loose_cycle_c4(), 4), std::invalid_argument);
    CHECK(arrows(4, Hypergraph(4, 3), 4).verdict == Verdict::arrows);
    CHECK(arrows(3, Hypergraph(4, 3), 4).verdict == Verdict::counterexample);
    // Host too small for either pattern: the all-red colouring survives.
    CHECK(arrows(3, loose_path(5, 3), 4).verdict == Verdict::counterexample);
    CHECK(to_string(Verdict::budget_exhausted) == "budget-exhausted");
    CHECK(to_string(EdgeOrder::degree_guided) == "degree-guided");
}

TEST_CASE("red matching number") {
    CHECK(independence_check(TwoColoring(6, 3, EdgeColor::red)) == 2);
    CHECK(independence_check(TwoColoring(8, 3, EdgeColor::red)) == 2);
    CHECK(independence_check(TwoColoring(9, 3, EdgeColor::red)) == 3);
    CHECK(independence_check(TwoColoring(9, 3, EdgeColor::blue)) == 0);
    CHECK(independence_check(cubic_residue_witness(2)) == 2);
}
