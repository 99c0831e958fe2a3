#include "hyperramsey/combinatorics.hpp"

#include <stdexcept>

namespace hyperramsey {

std::int64_t binomial(std::int64_t n, std::int64_t k) {
    if (n < 0 || k < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 acc = 1;
    for (std::int64_t i = 1; i <= k; ++i) {
        acc = acc * static_cast<unsigned __int128>(n - k + i) / static_cast<unsigned __int128>(i);
        if (acc > static_cast<unsigned __int128>(INT64_MAX)) throw std::overflow_error("binomial coefficient overflows 64 bits");
    }
    return static_cast<std::int64_t>(acc);
}

std::vector<int> mask_vertices(VertexMask m) {
    std::vector<int> out;
    out.reserve(static_cast<std::size_t>(popcount(m)));
    for (; m; m &= m - 1) out.push_back(std::countr_zero(m));
    return out;
}

VertexMask vertices_mask(const std::vector<int>& vertices) {
    VertexMask m = 0;
    for (int v : vertices) {
        if (v < 0 || v >= kMaxOrder) throw std::out_of_range("vertex index outside [0, 64)");
        m |= bit(v);
    }
    return m;
}

std::int64_t colex_rank(VertexMask m) {
    std::int64_t rank = 0;
    int i = 1;
    for (; m; m &= m - 1, ++i) rank += binomial(std::countr_zero(m), i);
    return rank;
}

VertexMask colex_unrank(std::int64_t rank, int r) {
    VertexMask m = 0;
    for (int i = r; i >= 1; --i) {
        int c = i - 1;
        while (binomial(c + 1, i) <= rank) ++c;
        rank -= binomial(c, i);
        m |= bit(c);
    }
    return m;
}

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

}  // namespace hyperramsey
