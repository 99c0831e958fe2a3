#include <doctest.h>

#include <stdexcept>

#include "hyperramsey/bounds.hpp"
#include "hyperramsey/weak_coloring.hpp"

using namespace hyperramsey;

namespace {

std::int64_t value(const BoundResult& b) { return record(b).value; }

}  // namespace

TEST_CASE("generalized Burr lower bound") {
    CHECK(value(burr_lower(2, 2, 5)) == 6);
    CHECK(value(burr_lower(3, 1, 5)) == 9);
    CHECK(value(burr_lower(4, 2, 7)) == 20);
    const auto skip = burr_lower(2, 3, 2);
    REQUIRE_FALSE(applicable(skip));
    CHECK(source_of(skip) == "generalized-burr-lower");
    CHECK_THROWS_AS(record(skip), std::logic_error);
}

TEST_CASE("goodness targets") {
    CHECK(goodness_target(5, 4, 3).target == 6);
    CHECK(goodness_target(7, 7, 3).target == 19);
    CHECK(goodness_target(4, 5, 3).target == 7);
    CHECK(goodness_target(4, 4, 3).target == 5);
    CHECK(goodness_target(4, 6, 3).target == 8);
    CHECK(goodness_target(4, 7, 3).target == 10);
}

TEST_CASE("Chvatal-Harary interval") {
    const auto [lo, hi] = chvatal_harary_interval(5, 5, 3);
    CHECK(lo.value == 9);
    CHECK(hi.value == 17);
    for (int m = 2; m <= 9; ++m)
        for (int n = 2; n <= 9; ++n) {
            const auto [l, h] = chvatal_harary_interval(m, n, 2);
            CHECK(l.value == (m - 1) * (n - 1) + 1);
            CHECK(h.value == l.value);
        }
    const auto [l3, h3] = chvatal_harary_interval(3, 4, 3);
    CHECK(l3.value == 3);
    CHECK(h3.value == 7);
    CHECK(best_interval(Family::tree, 3, 4, 3).interval.lower == 4);
    CHECK(best_interval(Family::tree, 3, 4, 3).interval.upper == 4);
    CHECK_THROWS_AS(chvatal_harary_interval(6, 5, 3), std::invalid_argument);
    CHECK_THROWS_AS(chvatal_harary_interval(5, 2, 3), std::invalid_argument);
}

TEST_CASE("upper bounds") {
    CHECK(value(loh_upper(5, 5, 3)) == 9);
    for (int j = 1; j <= 8; ++j)
        for (int n = 3; n <= 15; n += 2) CHECK(value(loh_upper(2 * j + 1, n, 3)) == j * (n - 1) + 1);
    for (int m = 2; m <= 8; ++m) CHECK(value(loh_upper(m, 6, 2)) == (m - 1) * 5 + 1);
    CHECK_THROWS_AS(loh_upper(6, 5, 3), std::invalid_argument);

    CHECK(value(matching_upper_t2rm1(3, 4)) == 6);
    CHECK(value(matching_upper_t2rm1(3, 7)) == 13);
    CHECK(value(matching_upper_t2rm1(5, 6)) == 14);
    CHECK(value(burr_lower(chi_w_complete(6, 5), t_complete(6, 5), 9)) <= 14);
    CHECK_FALSE(applicable(matching_upper_t2rm1(4, 6)));
    CHECK_FALSE(applicable(matching_upper_t2rm1(3, 3)));
}

TEST_CASE("recursions") {
    CHECK(step_lower_verygood(6, 5).value == 10);
    CHECK(step_lower_verygood(5, 5).value == 9);
    CHECK(step_lower_verygood(3, 3).value == 5);

    CHECK(value(recursion_upper_free_edge(4, 5, 5, 3, 4, FreeEdgeVariant::B)) == 7);
    for (int j = 3; j <= 7; ++j)
        for (int n = 4; n <= 10; n += 2)
            CHECK(value(recursion_upper_free_edge((j - 1) * (n - 1), j * (n - 2) + 1, 2 * j + 1, 3, n, FreeEdgeVariant::B)) == j * (n - 1));
    const auto skip = recursion_upper_free_edge(100, 5, 5, 3, 4, FreeEdgeVariant::A);
    REQUIRE_FALSE(applicable(skip));
    CHECK(std::get<Inapplicable>(skip).failed_guard.find("n1 <= n2 + m - r + 1") != std::string::npos);
    CHECK_FALSE(applicable(recursion_upper_free_edge(4, 5, 3, 3, 4, FreeEdgeVariant::A)));
    CHECK_FALSE(applicable(recursion_upper_free_edge(4, 5, 5, 3, 3, FreeEdgeVariant::B)));
}

TEST_CASE("3-uniform tree bounds") {
    auto iv = treebounds_3(4, 6);
    CHECK(iv.lower == 18);
    CHECK(iv.upper == 20);
    iv = treebounds_3(4, 7);
    CHECK(iv.lower == 25);
    CHECK(iv.exact());
    iv = treebounds_3(7, 10);
    CHECK(iv.lower == 58);
    CHECK(iv.upper == 63);
    for (int j = 2; j <= 15; ++j)
        for (int n = 3; n <= 21; n += 2) CHECK(treebounds_3(j, n).lower == goodness_target(2 * j + 1, n, 3).target);
    CHECK_THROWS_AS(treebounds_3(1, 5), std::invalid_argument);
    CHECK_THROWS_AS(treebounds_3(3, 2), std::invalid_argument);
}

TEST_CASE("loose path bounds") {
    auto iv = loose_path_bounds_3(3, 8);
    CHECK(iv.lower == 20);
    CHECK(iv.upper == 20);
    iv = loose_path_bounds_3(5, 6);
    CHECK(iv.lower == 22);
    CHECK(iv.upper == 24);
    for (int j = 2; j <= 12; ++j) {
        iv = loose_path_bounds_3(j, 4);
        CHECK(iv.lower == 2 * j + 2);
        CHECK(iv.upper == 2 * j + 2);
    }
    CHECK(loose_path_bounds_3(3, 6).upper == 14);
    CHECK(loose_path_bounds_3(1, 5).lower == 5);
}

TEST_CASE("disjoint copies") {
    CHECK(disjoint_copies_bounds(2, 5, 5, 3, true).value == 19);
    CHECK(disjoint_copies_bounds(2, 5, 5, 3, true).direction == Direction::exact);
    for (int m : {3, 5, 7})
        for (int n : {5, 6, 7}) CHECK(disjoint_copies_bounds(1, m, n, 3, true).value == goodness_target(m, n, 3).target);
    const auto small = disjoint_copies_bounds(2, 5, 4, 3, true);
    CHECK(small.direction == Direction::upper);
    CHECK(small.value == (5 - 1) * 1 + 5 + 2);
    CHECK(disjoint_copies_bounds(2, 5, 5, 3, false).direction == Direction::upper);
}

TEST_CASE("best intervals and goodness status") {
    auto rep = best_interval(Family::tree, 13, 8, 3);
    CHECK(rep.interval.lower == 38);
    CHECK(rep.interval.upper == 42);
    CHECK(rep.status == GoodnessStatus::open);
    rep = best_interval(Family::path, 13, 8, 3);
    CHECK(rep.interval.lower == 38);
    CHECK(rep.interval.upper == 41);
    rep = best_interval(Family::tree, 9, 9, 3);
    CHECK(rep.interval.lower == 33);
    CHECK(rep.interval.upper == 33);
    CHECK(rep.status == GoodnessStatus::proven_good);
    CHECK(n_good_status(Family::tree, 7, 7, 3) == GoodnessStatus::proven_good);
    CHECK(best_interval(Family::tree, 5, 9, 3).interval.lower == 17);

    // Inapplicable bounds are reported, not dropped.
    bool saw_inapplicable = false;
    for (const auto& b : rep.considered)
        if (!applicable(b)) saw_inapplicable = true;
    CHECK(saw_inapplicable);
    CHECK_THROWS_AS(best_interval(Family::tree, 6, 5, 3), std::invalid_argument);
    CHECK(parse_family("path") == Family::path);
    CHECK_THROWS_AS(parse_family("cycle"), std::invalid_argument);
}

TEST_CASE("cross-bound consistency, stepping and goodness reduction") {
    BoundsEngine engine;
    for (int r : {3, 4, 5})
        for (auto family : {Family::tree, Family::path})
            for (int m = r; m <= 31; m += r - 1)
                for (int n = r; n <= 21; ++n) {
                    const auto& rep = engine.interval(family, m, n, r);
                    for (const auto& a : rep.considered)
                        for (const auto& b : rep.considered)
                            if (applicable(a) && applicable(b) && record(a).bounds_below() && record(b).bounds_above())
                                CHECK(record(a).value <= record(b).value);
                    CHECK(rep.interval.lower >= rep.target.target);
                    // Stepping from R(H, K_r) = m never passes the best upper bound.
                    std::int64_t stepped = m;
                    for (int k = r; k + r - 1 <= n; k += r - 1) stepped = step_lower_verygood(stepped, m).value;
                    if ((n - r) % (r - 1) == 0) CHECK(stepped <= rep.interval.upper);
                    if (rep.status == GoodnessStatus::proven_good && n - r + 1 >= r)
                        CHECK(engine.interval(family, m, n - r + 1, r).status == GoodnessStatus::proven_good);
                    if ((n - 1) % (r - 1) == 0) CHECK(value(loh_upper(m, n, r)) == rep.target.target);
                }
}

TEST_CASE("loose cycle C4") {
    const auto four = cycle_c4_bounds(4);
    CHECK(four.lower == 5);
    REQUIRE(four.upper);
    CHECK(*four.upper == 5);
    CHECK(four.status == GoodnessStatus::proven_good);

    const auto five = cycle_c4_bounds(5);
    CHECK(five.lower == 8);
    CHECK(five.target.target == 7);
    CHECK_FALSE(five.upper);
    CHECK(five.status == GoodnessStatus::not_good);

    CHECK(value(cubic_residue_lower(2)) == 8);
    CHECK(value(cubic_residue_lower(4)) == 14);
    CHECK_FALSE(applicable(cubic_residue_lower(3)));
    CHECK_FALSE(applicable(cubic_residue_lower(5)));
    // 3j + 1 prime forces j even.
    for (int j = 1; j <= 40; ++j)
        if (applicable(cubic_residue_lower(j))) CHECK(j % 2 == 0);
    const auto six = cycle_c4_bounds(6);
    CHECK(six.status == GoodnessStatus::open);
    CHECK_THROWS_AS(cycle_c4_bounds(2), std::invalid_argument);
}
