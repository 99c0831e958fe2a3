#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace hyperramsey {

/// Vertex sets up to 64 vertices are stored as bitmasks. For sets of a fixed
/// size, numeric order of the masks is colexicographic order of the sets.
using VertexMask = std::uint64_t;

inline constexpr int kMaxOrder = 64;

/// Exact binomial coefficient; C(n, k) = 0 when k < 0, n < 0 or k > n.
/// Throws std::overflow_error if the result does not fit in 64 bits.
std::int64_t binomial(std::int64_t n, std::int64_t k);

inline int popcount(VertexMask m) { return std::popcount(m); }

inline VertexMask bit(int v) { return VertexMask{1} << v; }

/// Vertices of a mask in increasing order.
std::vector<int> mask_vertices(VertexMask m);

VertexMask vertices_mask(const std::vector<int>& vertices);

/// Rank of an r-subset in colex order: sum over i of C(c_i, i + 1) with c_0 < c_1 < ...
std::int64_t colex_rank(VertexMask m);

/// Inverse of colex_rank for subsets of size r.
VertexMask colex_unrank(std::int64_t rank, int r);

/// Next mask with the same popcount in increasing numeric (colex) order.
inline VertexMask next_same_popcount(VertexMask m) {
    const VertexMask c = m & (~m + 1);
    const VertexMask rr = m + c;
    return (((rr ^ m) >> 2) / c) | rr;
}

/// Calls f(mask) for every k-subset of {0, ..., n - 1} in colex order.
template <typename F>
void for_each_subset(int n, int k, F&& f) {
    if (k < 0 || k > n) return;
    if (k == 0) {
        f(VertexMask{0});
        return;
    }
    const VertexMask first = (k == 64) ? ~VertexMask{0} : (bit(k) - 1);
    const VertexMask last = first << (n - k);
    for (VertexMask m = first;; m = next_same_popcount(m)) {
        f(m);
        if (m == last) break;
    }
}

/// Calls f(mask) for every k-subset of the set bits of `ground`.
template <typename F>
void for_each_subset_of(VertexMask ground, int k, F&& f) {
    const auto vs = mask_vertices(ground);
    const int n = static_cast<int>(vs.size());
    for_each_subset(n, k, [&](VertexMask local) {
        VertexMask out = 0;
        for (VertexMask rest = local; rest; rest &= rest - 1) out |= bit(vs[std::countr_zero(rest)]);
        f(out);
    });
}

inline std::int64_t ceil_div(std::int64_t a, std::int64_t b) { return (a + b - 1) / b; }

bool is_prime(std::int64_t n);

}  // namespace hyperramsey
