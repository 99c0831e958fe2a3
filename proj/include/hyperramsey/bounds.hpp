#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <tuple>
#include <variant>
#include <vector>

namespace hyperramsey {

enum class Direction { lower, upper, exact };

std::string_view to_string(Direction d);

/// One instantiated inequality: `source` names the result it comes from and
/// `conditions` records the hypotheses that were checked.
struct BoundRecord {
    std::string source;
    Direction direction = Direction::lower;
    std::int64_t value = 0;
    std::string conditions;

    bool bounds_below() const { return direction != Direction::upper; }
    bool bounds_above() const { return direction != Direction::lower; }
};

/// A bound whose hypothesis failed; kept so callers can see why it was skipped.
struct Inapplicable {
    std::string source;
    std::string failed_guard;
};

using BoundResult = std::variant<BoundRecord, Inapplicable>;

inline bool applicable(const BoundResult& b) { return std::holds_alternative<BoundRecord>(b); }
/// Throws std::logic_error naming the failed guard when the bound is inapplicable.
const BoundRecord& record(const BoundResult& b);
std::string_view source_of(const BoundResult& b);

struct RamseyInterval {
    std::int64_t lower = 0;
    std::int64_t upper = 0;
    BoundRecord lower_src;
    BoundRecord upper_src;

    bool exact() const { return lower == upper; }
};

/// (ceil(n/(r-1)) - 1)(m - 1) + t(K_n^(r)): the Ramsey number a connected
/// order-m hypergraph must attain against K_n^(r) to be n-good.
struct GoodnessTarget {
    int m = 0;
    int n = 0;
    int r = 0;
    std::int64_t target = 0;
};

GoodnessTarget goodness_target(int m, int n, int r);

enum class GoodnessStatus { proven_good, open, not_good };
std::string_view to_string(GoodnessStatus s);

// Individual bounds. Instances that are not well-formed (tree order with the
// wrong residue, n < r, ...) throw std::invalid_argument; an unmet
// hypothesis yields Inapplicable.

/// (chi_w(H1) - 1)(c(H2) - 1) + t(H1), provided c(H2) >= t(H1).
BoundResult burr_lower(std::int64_t chi_w, std::int64_t t, std::int64_t c);

/// (m-1)(ceil(n/(r-1)) - 1) + 1 <= R(T_m, K_n) <= (m-1)(n-1) + 1.
std::pair<BoundRecord, BoundRecord> chvatal_harary_interval(int m, int n, int r);

/// R(T_m, K_n) <= (m-1)(n-1)/(r-1) + 1 for n >= r.
BoundResult loh_upper(int m, int n, int r);

/// Matching bound for T_{2r-1}: r odd >= 3, n >= r + 1.
BoundResult matching_upper_t2rm1(int r, int n);

/// R(H, K_{n-r+1}) >= prev  implies  R(H, K_n) >= prev + m - 1.
BoundRecord step_lower_verygood(std::int64_t prev, int m);

enum class FreeEdgeVariant {
    A,  ///< R(H, K_n) <= n2 + m - r + 1 when n1 <= n2 + m - r + 1
    B,  ///< R(H, K_n) <= n1 + n - 1 when n2 <= n1 + n - 1
};

/// H = H' + free edge, n1 >= R(H', K_n), n2 >= R(H, K_{n-1}).
BoundResult recursion_upper_free_edge(std::int64_t n1, std::int64_t n2, int m, int r, int n, FreeEdgeVariant variant);

/// 3-uniform trees of order 2j+1: exact j(n-1)+1 for odd n, [j(n-2)+2, j(n-1)] for even n.
RamseyInterval treebounds_3(int j, int n);

/// Loose paths P_{2j+1}^(3): tree bounds tightened by every path-specific result.
RamseyInterval loose_path_bounds_3(int j, int n);

/// aH for an order-m hypergraph H. With single_good and n >= 2r - 1 the
/// result is the exact value (am - 1)(ceil(n/(r-1)) - 1) + t; otherwise only
/// the upper bound (m-1)(ceil(n/(r-1)) - 1) + (a-1)m + t.
BoundRecord disjoint_copies_bounds(int a, int m, int n, int r, bool single_good);

enum class Family { tree, path };
std::string_view to_string(Family f);
Family parse_family(std::string_view name);

struct IntervalReport {
    Family family = Family::tree;
    int m = 0;
    int n = 0;
    int r = 0;
    RamseyInterval interval;
    GoodnessTarget target;
    GoodnessStatus status = GoodnessStatus::open;
    /// Every bound consulted, applicable or not, in registry order.
    std::vector<BoundResult> considered;
};

/// Best known bounds on R(T_m^(r), K_n^(r); r), where T is any tree of order m
/// (Family::tree) or the loose path P_m^(r) (Family::path). Bounds live in a
/// registry of guarded formulas; recursive bounds reuse memoised cells.
class BoundsEngine {
public:
    /// Throws std::invalid_argument for malformed instances and
    /// std::logic_error if the folded lower bound exceeds the upper bound.
    const IntervalReport& interval(Family family, int m, int n, int r);

private:
    std::int64_t best_lower(Family family, int m, int n, int r);
    std::int64_t best_upper(Family family, int m, int n, int r);

    std::map<std::tuple<Family, int, int, int>, IntervalReport> cache_;
};

IntervalReport best_interval(Family family, int m, int n, int r);
GoodnessStatus n_good_status(Family family, int m, int n, int r);

/// Results for the loose cycle C_4^(3) against K_n^(3).
struct CycleC4Report {
    int n = 0;
    std::int64_t lower = 0;
    std::optional<std::int64_t> upper;
    GoodnessTarget target;
    GoodnessStatus status = GoodnessStatus::open;
    std::vector<BoundResult> considered;
};

/// R(C_4^(3), K_{2j+1}^(3)) > 3j + 1 whenever 3j + 1 is prime.
BoundResult cubic_residue_lower(int j);

CycleC4Report cycle_c4_bounds(int n);

}  // namespace hyperramsey
