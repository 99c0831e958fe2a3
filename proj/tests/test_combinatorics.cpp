#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "hyperramsey/combinatorics.hpp"

using namespace hyperramsey;

TEST_CASE("binomial matches Pascal's triangle") {
    std::vector<std::vector<std::int64_t>> pascal(62, std::vector<std::int64_t>(62, 0));
    for (int n = 0; n < 62; ++n) {
        pascal[n][0] = 1;
        for (int k = 1; k <= n; ++k) pascal[n][k] = pascal[n - 1][k - 1] + (k < n ? pascal[n - 1][k] : 0);
    }
    for (int n = 0; n < 62; ++n)
        for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == pascal[n][k]);
    CHECK(binomial(5, 6) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(-1, 2) == 0);
    CHECK_THROWS_AS(binomial(200, 100), std::overflow_error);
}

TEST_CASE("for_each_subset visits C(n, k) sets in increasing colex order") {
    for (int n = 0; n <= 10; ++n) {
        for (int k = 0; k <= n; ++k) {
            std::vector<VertexMask> seen;
            for_each_subset(n, k, [&](VertexMask m) { seen.push_back(m); });
            CHECK(static_cast<std::int64_t>(seen.size()) == binomial(n, k));
            CHECK(std::is_sorted(seen.begin(), seen.end()));
            CHECK(std::adjacent_find(seen.begin(), seen.end()) == seen.end());
            for (std::size_t i = 0; i < seen.size(); ++i) {
                CHECK(popcount(seen[i]) == k);
                CHECK((seen[i] >> n) == 0);
                CHECK(colex_rank(seen[i]) == static_cast<std::int64_t>(i));
                CHECK(colex_unrank(static_cast<std::int64_t>(i), k) == seen[i]);
            }
        }
    }
    int calls = 0;
    for_each_subset(3, 4, [&](VertexMask) { ++calls; });
    CHECK(calls == 0);
}

TEST_CASE("colex order of 2-subsets") {
    std::vector<std::vector<int>> sets;
    for_each_subset(4, 2, [&](VertexMask m) { sets.push_back(mask_vertices(m)); });
    const std::vector<std::vector<int>> expected{{0, 1}, {0, 2}, {1, 2}, {0, 3}, {1, 3}, {2, 3}};
    CHECK(sets == expected);
}

TEST_CASE("for_each_subset_of restricts to the ground set") {
    const VertexMask ground = vertices_mask({1, 4, 6, 9});
    std::vector<VertexMask> seen;
    for_each_subset_of(ground, 2, [&](VertexMask m) { seen.push_back(m); });
    REQUIRE(seen.size() == 6);
    for (auto m : seen) CHECK((m & ~ground) == 0);
    CHECK(seen.front() == vertices_mask({1, 4}));
    CHECK(seen.back() == vertices_mask({6, 9}));
}

TEST_CASE("mask conversions and small helpers") {
    CHECK(mask_vertices(vertices_mask({5, 0, 63})) == std::vector<int>{0, 5, 63});
    CHECK(ceil_div(7, 2) == 4);
    CHECK(ceil_div(8, 2) == 4);
    const std::vector<int> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31};
    for (int n = -2; n <= 31; ++n) CHECK(is_prime(n) == std::binary_search(primes.begin(), primes.end(), n));
}
