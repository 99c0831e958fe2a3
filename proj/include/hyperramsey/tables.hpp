#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "hyperramsey/bounds.hpp"

namespace hyperramsey {

/// Inclusive integer range written "a..b" or "a".
struct IntRange {
    int lo = 0;
    int hi = 0;
};

/// Throws std::invalid_argument on malformed text or lo > hi.
IntRange parse_range(std::string_view text);

enum class TableFormat { text, csv, json };
TableFormat parse_table_format(std::string_view name);

/// "6" for a point, "[8, 9]" otherwise.
std::string format_interval(const RamseyInterval& iv);

/// Cells in row-major (m, n) order. Row values m outside the tree-order
/// residue class m = r (mod r - 1) are skipped, as are columns n < r.
std::vector<IntervalReport> table_cells(BoundsEngine& engine, Family family, IntRange rows, IntRange cols, int r = 3);

std::string render_table(const std::vector<IntervalReport>& cells, TableFormat format);

}  // namespace hyperramsey
