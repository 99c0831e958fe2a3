#include "hyperramsey/bounds.hpp"

#include <algorithm>
#include <stdexcept>

#include "hyperramsey/combinatorics.hpp"
#include "hyperramsey/weak_coloring.hpp"

namespace hyperramsey {

namespace {

using std::int64_t;
using std::to_string;

void require(bool ok, const std::string& what) {
    if (!ok) throw std::invalid_argument(what);
}

void require_tree_instance(int m, int n, int r) {
    require(r >= 2, "uniformity must be at least 2");
    require(m >= r && (m - r) % (r - 1) == 0, "tree order " + to_string(m) + " is not r + k(r - 1) for r = " + to_string(r));
    require(n >= r, "clique size n = " + to_string(n) + " is below r = " + to_string(r));
}

BoundRecord make(std::string source, Direction d, int64_t value, std::string conditions) {
    return {std::move(source), d, value, std::move(conditions)};
}

std::string mnr(int m, int n, int r) { return "m=" + to_string(m) + ", n=" + to_string(n) + ", r=" + to_string(r); }

}  // namespace

std::string_view to_string(Direction d) {
    switch (d) {
        case Direction::lower: return "lower";
        case Direction::upper: return "upper";
        case Direction::exact: return "exact";
    }
    return "?";
}

std::string_view to_string(GoodnessStatus s) {
    switch (s) {
        case GoodnessStatus::proven_good: return "proven-good";
        case GoodnessStatus::open: return "open";
        case GoodnessStatus::not_good: return "not-good";
    }
    return "?";
}

std::string_view to_string(Family f) { return f == Family::tree ? "tree" : "path"; }

Family parse_family(std::string_view name) {
    if (name == "tree") return Family::tree;
    if (name == "path") return Family::path;
    throw std::invalid_argument("unknown family '" + std::string(name) + "' (expected tree or path)");
}

const BoundRecord& record(const BoundResult& b) {
    if (const auto* rec = std::get_if<BoundRecord>(&b)) return *rec;
    const auto& na = std::get<Inapplicable>(b);
    throw std::logic_error(na.source + " is inapplicable: " + na.failed_guard);
}

std::string_view source_of(const BoundResult& b) {
    return std::visit([](const auto& x) -> std::string_view { return x.source; }, b);
}

GoodnessTarget goodness_target(int m, int n, int r) {
    require(r >= 2 && m >= 1 && n >= 1, "goodness target needs m, n >= 1 and r >= 2");
    return {m, n, r, (chi_w_complete(n, r) - 1) * (m - 1) + t_complete(n, r)};
}

BoundResult burr_lower(int64_t chi_w, int64_t t, int64_t c) {
    const std::string cond = "chi_w=" + to_string(chi_w) + ", t=" + to_string(t) + ", c=" + to_string(c);
    if (c < t) return Inapplicable{"generalized-burr-lower", "c(H2) >= t(H1) fails: " + cond};
    return make("generalized-burr-lower", Direction::lower, (chi_w - 1) * (c - 1) + t, cond + ", c >= t");
}

std::pair<BoundRecord, BoundRecord> chvatal_harary_interval(int m, int n, int r) {
    require_tree_instance(m, n, r);
    const std::string cond = mnr(m, n, r);
    return {make("chvatal-harary-lower", Direction::lower, int64_t{m - 1} * (chi_w_complete(n, r) - 1) + 1, cond),
            make("chvatal-harary-upper", Direction::upper, int64_t{m - 1} * (n - 1) + 1, cond)};
}

BoundResult loh_upper(int m, int n, int r) {
    require_tree_instance(m, n, r);
    return make("loh-upper", Direction::upper, int64_t{m - 1} * (n - 1) / (r - 1) + 1, mnr(m, n, r) + ", n >= r");
}

BoundResult matching_upper_t2rm1(int r, int n) {
    const std::string cond = "r=" + to_string(r) + ", n=" + to_string(n);
    if (r < 3 || r % 2 == 0) return Inapplicable{"odd-r-matching-upper", "r must be odd and >= 3: " + cond};
    if (n < r + 1) return Inapplicable{"odd-r-matching-upper", "n >= r + 1 fails: " + cond};
    const int64_t half = (r + 1) / 2;
    const int64_t value = n % 2 == 0 ? half * n - (r - 1) : half * n - (r - 1) / 2;
    return make("odd-r-matching-upper", Direction::upper, value, cond + ", tree of order 2r-1");
}

BoundRecord step_lower_verygood(int64_t prev, int m) {
    return make("very-good-step", Direction::lower, prev + m - 1,
                "R(H, K_{n-r+1}) >= " + to_string(prev) + ", H connected of order m=" + to_string(m));
}

BoundResult recursion_upper_free_edge(int64_t n1, int64_t n2, int m, int r, int n, FreeEdgeVariant variant) {
    const bool a = variant == FreeEdgeVariant::A;
    const std::string source = a ? "free-edge-recursion-a" : "free-edge-recursion-b";
    const std::string cond = "n1=" + to_string(n1) + ", n2=" + to_string(n2) + ", " + mnr(m, n, r);
    if (m - r + 1 < r) return Inapplicable{source, "order of H' = m - r + 1 >= r fails: " + cond};
    if (n < r + 1) return Inapplicable{source, "n >= r + 1 fails: " + cond};
    if (a) {
        if (n1 > n2 + m - r + 1) return Inapplicable{source, "n1 <= n2 + m - r + 1 fails: " + cond};
        return make(source, Direction::upper, n2 + m - r + 1, cond);
    }
    if (n2 > n1 + n - 1) return Inapplicable{source, "n2 <= n1 + n - 1 fails: " + cond};
    return make(source, Direction::upper, n1 + n - 1, cond);
}

RamseyInterval treebounds_3(int j, int n) {
    require(j >= 2, "tree bounds need j >= 2");
    require(n >= 3, "tree bounds need n >= 3");
    const std::string cond = "j=" + to_string(j) + ", n=" + to_string(n);
    if (n % 2 == 1) {
        const auto rec = make("tree-bounds-3", Direction::exact, int64_t{j} * (n - 1) + 1, cond + ", n odd");
        return {rec.value, rec.value, rec, rec};
    }
    const auto lo = make("tree-bounds-3", Direction::lower, int64_t{j} * (n - 2) + 2, cond + ", n even");
    const auto hi = make("tree-bounds-3", Direction::upper, int64_t{j} * (n - 1), cond + ", n even");
    return {lo.value, hi.value, lo, hi};
}

RamseyInterval loose_path_bounds_3(int j, int n) {
    require(j >= 1, "loose path bounds need j >= 1");
    return best_interval(Family::path, 2 * j + 1, n, 3).interval;
}

BoundRecord disjoint_copies_bounds(int a, int m, int n, int r, bool single_good) {
    require(a >= 1 && m >= 1 && r >= 2 && n >= 1, "disjoint copies need a, m, n >= 1 and r >= 2");
    const int64_t blocks = chi_w_complete(n, r) - 1;
    const int64_t t = t_complete(n, r);
    const std::string cond = "a=" + to_string(a) + ", " + mnr(m, n, r);
    if (single_good && n >= 2 * r - 1)
        return make("disjoint-copies", Direction::exact, (int64_t{a} * m - 1) * blocks + t, cond + ", H n-good, n >= 2r-1");
    const std::string why = single_good ? ", n < 2r-1 so goodness is not claimed" : ", H not known n-good";
    return make("disjoint-copies", Direction::upper, int64_t{m - 1} * blocks + int64_t{a - 1} * m + t, cond + why);
}

const IntervalReport& BoundsEngine::interval(Family family, int m, int n, int r) {
    const auto key = std::tuple{family, m, n, r};
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;
    require_tree_instance(m, n, r);

    IntervalReport rep;
    rep.family = family;
    rep.m = m;
    rep.n = n;
    rep.r = r;
    rep.target = goodness_target(m, n, r);
    auto& out = rep.considered;
    const std::string cond = mnr(m, n, r);

    auto [ch_lo, ch_hi] = chvatal_harary_interval(m, n, r);
    out.emplace_back(ch_lo);
    out.emplace_back(ch_hi);
    out.push_back(burr_lower(chi_w_complete(n, r), t_complete(n, r), m));

    if (m == r)
        out.emplace_back(make("single-edge-tree", Direction::exact, n, cond + ", tree is one edge"));
    else
        out.emplace_back(Inapplicable{"single-edge-tree", "m == r fails: " + cond});
    if (n == r)
        out.emplace_back(make("single-edge-clique", Direction::exact, m, cond + ", K_n is one edge"));
    else
        out.emplace_back(Inapplicable{"single-edge-clique", "n == r fails: " + cond});

    if (n - r + 1 >= r)
        out.emplace_back(step_lower_verygood(interval(family, m, n - r + 1, r).interval.lower, m));
    else
        out.emplace_back(Inapplicable{"very-good-step", "n - r + 1 >= r fails: " + cond});

    out.push_back(loh_upper(m, n, r));
    if (m == 2 * r - 1)
        out.push_back(matching_upper_t2rm1(r, n));
    else
        out.emplace_back(Inapplicable{"odd-r-matching-upper", "m == 2r - 1 fails: " + cond});

    if (r == 3 && m >= 5) {
        const auto tb = treebounds_3((m - 1) / 2, n);
        out.emplace_back(tb.lower_src);
        if (!tb.exact()) out.emplace_back(tb.upper_src);
    } else {
        out.emplace_back(Inapplicable{"tree-bounds-3", "r == 3 and m >= 5 fails: " + cond});
    }

    if (m - r + 1 >= r && n >= r + 1) {
        const int64_t n1 = interval(family, m - r + 1, n, r).interval.upper;
        const int64_t n2 = interval(family, m, n - 1, r).interval.upper;
        out.push_back(recursion_upper_free_edge(n1, n2, m, r, n, FreeEdgeVariant::A));
        out.push_back(recursion_upper_free_edge(n1, n2, m, r, n, FreeEdgeVariant::B));
    } else {
        out.emplace_back(Inapplicable{"free-edge-recursion-a", "m - r + 1 >= r and n >= r + 1 fails: " + cond});
        out.emplace_back(Inapplicable{"free-edge-recursion-b", "m - r + 1 >= r and n >= r + 1 fails: " + cond});
    }

    if (family == Family::path) {
        const int j = (m - 1) / 2;
        auto path_fact = [&](bool guard, const char* source, Direction d, int64_t value, const std::string& guard_text) {
            if (r == 3 && guard)
                out.emplace_back(make(source, d, value, cond + ", loose path, " + guard_text));
            else
                out.emplace_back(Inapplicable{source, "loose path with r == 3 and " + guard_text + " fails: " + cond});
        };
        path_fact(n == 4, "loose-path-4-good", Direction::exact, 2 * int64_t{j} + 2, "n == 4");
        path_fact(m == 7 && n == 8, "loose-path-p7-k8", Direction::exact, 20, "m == 7, n == 8");
        path_fact(m == 7 && n == 6, "loose-path-p7-k6", Direction::exact, 14, "m == 7, n == 6 (goodness reduction of P7 vs K8)");
        path_fact(n == 8 && j >= 3, "loose-path-k8-recursion", Direction::upper, 7 * int64_t{j} - 1, "n == 8, j >= 3");
        path_fact(n == 6 && j >= 3, "loose-path-k6-recursion", Direction::upper, 5 * int64_t{j} - 1, "n == 6, j >= 3");
    }

    bool have_lo = false;
    bool have_hi = false;
    for (const auto& b : out) {
        const auto* rec = std::get_if<BoundRecord>(&b);
        if (!rec) continue;
        if (rec->bounds_below() && (!have_lo || rec->value > rep.interval.lower)) {
            rep.interval.lower = rec->value;
            rep.interval.lower_src = *rec;
            have_lo = true;
        }
        if (rec->bounds_above() && (!have_hi || rec->value < rep.interval.upper)) {
            rep.interval.upper = rec->value;
            rep.interval.upper_src = *rec;
            have_hi = true;
        }
    }
    if (rep.interval.lower > rep.interval.upper)
        throw std::logic_error("inconsistent bounds for " + cond + ": lower " + to_string(rep.interval.lower) + " (" +
                               rep.interval.lower_src.source + ") exceeds upper " + to_string(rep.interval.upper) + " (" +
                               rep.interval.upper_src.source + ")");

    if (rep.interval.lower > rep.target.target)
        rep.status = GoodnessStatus::not_good;
    else if (rep.interval.exact() && rep.interval.lower == rep.target.target)
        rep.status = GoodnessStatus::proven_good;
    else
        rep.status = GoodnessStatus::open;

    return cache_.emplace(key, std::move(rep)).first->second;
}

IntervalReport best_interval(Family family, int m, int n, int r) {
    BoundsEngine engine;
    return engine.interval(family, m, n, r);
}

GoodnessStatus n_good_status(Family family, int m, int n, int r) { return best_interval(family, m, n, r).status; }

BoundResult cubic_residue_lower(int j) {
    const std::string cond = "j=" + to_string(j) + ", p=3j+1=" + to_string(3 * int64_t{j} + 1);
    if (j < 1 || !is_prime(3 * int64_t{j} + 1)) return Inapplicable{"cubic-residue-witness", "3j + 1 prime fails: " + cond};
    return make("cubic-residue-witness", Direction::lower, 3 * int64_t{j} + 2, cond + " prime, n=2j+1");
}

CycleC4Report cycle_c4_bounds(int n) {
    require(n >= 3, "C4 bounds need n >= 3");
    CycleC4Report rep;
    rep.n = n;
    rep.target = goodness_target(4, n, 3);
    auto& out = rep.considered;
    const std::string cond = "C4 vs K_" + to_string(n);
    out.push_back(burr_lower(chi_w_complete(n, 3), t_complete(n, 3), 4));
    if (n == 3)
        out.emplace_back(make("single-edge-clique", Direction::exact, 4, cond + ", K_n is one edge"));
    else
        out.emplace_back(Inapplicable{"single-edge-clique", "n == 3 fails: " + cond});
    if (n == 4)
        out.emplace_back(make("c4-4-good", Direction::exact, 5, cond));
    else
        out.emplace_back(Inapplicable{"c4-4-good", "n == 4 fails: " + cond});
    if (n % 2 == 1)
        out.push_back(cubic_residue_lower((n - 1) / 2));
    else
        out.emplace_back(Inapplicable{"cubic-residue-witness", "n odd fails: " + cond});

    for (const auto& b : out) {
        const auto* rec = std::get_if<BoundRecord>(&b);
        if (!rec) continue;
        if (rec->bounds_below()) rep.lower = std::max(rep.lower, rec->value);
        if (rec->bounds_above()) rep.upper = rep.upper ? std::min(*rep.upper, rec->value) : rec->value;
    }
    if (rep.upper && rep.lower > *rep.upper) throw std::logic_error("inconsistent bounds for " + cond);
    if (rep.lower > rep.target.target)
        rep.status = GoodnessStatus::not_good;
    else if (rep.upper && *rep.upper == rep.lower && rep.lower == rep.target.target)
        rep.status = GoodnessStatus::proven_good;
    return rep;
}

}  // namespace hyperramsey
