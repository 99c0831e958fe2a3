#include "hyperramsey/tables.hpp"

#include <charconv>
#include <iomanip>
#include <sstream>
#include <stdexcept>

#include "hyperramsey/io.hpp"

namespace hyperramsey {

namespace {

int parse_int(std::string_view s, std::string_view whole) {
    int v = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty())
        throw std::invalid_argument("bad range \"" + std::string(whole) + "\"");
    return v;
}

}  // namespace

IntRange parse_range(std::string_view text) {
    IntRange out;
    if (const auto dots = text.find(".."); dots != std::string_view::npos) {
        out.lo = parse_int(text.substr(0, dots), text);
        out.hi = parse_int(text.substr(dots + 2), text);
    } else {
        out.lo = out.hi = parse_int(text, text);
    }
    if (out.lo > out.hi) throw std::invalid_argument("empty range \"" + std::string(text) + "\"");
    return out;
}

TableFormat parse_table_format(std::string_view name) {
    if (name == "text") return TableFormat::text;
    if (name == "csv") return TableFormat::csv;
    if (name == "json") return TableFormat::json;
    throw std::invalid_argument("unknown table format \"" + std::string(name) + "\"");
}

std::string format_interval(const RamseyInterval& iv) {
    if (iv.exact()) return std::to_string(iv.lower);
    return "[" + std::to_string(iv.lower) + ", " + std::to_string(iv.upper) + "]";
}

std::vector<IntervalReport> table_cells(BoundsEngine& engine, Family family, IntRange rows, IntRange cols, int r) {
    std::vector<IntervalReport> out;
    for (int m = std::max(rows.lo, r); m <= rows.hi; ++m) {
        if ((m - r) % (r - 1) != 0) continue;
        for (int n = std::max(cols.lo, r); n <= cols.hi; ++n) out.push_back(engine.interval(family, m, n, r));
    }
    return out;
}

std::string render_table(const std::vector<IntervalReport>& cells, TableFormat format) {
    std::ostringstream os;
    switch (format) {
        case TableFormat::text: {
            std::vector<int> cols;
            for (const auto& c : cells) {
                if (!cols.empty() && c.m != cells.front().m) break;
                cols.push_back(c.n);
            }
            os << std::setw(5) << "m\\n";
            for (int n : cols) os << std::setw(10) << n;
            os << '\n';
            for (std::size_t i = 0; i < cells.size(); i += cols.size()) {
                os << std::setw(5) << cells[i].m;
                for (std::size_t k = 0; k < cols.size(); ++k) os << std::setw(10) << format_interval(cells[i + k].interval);
                os << '\n';
            }
            break;
        }
        case TableFormat::csv:
            os << "family,m,n,r,lower,upper,exact,target,status,lower_source,upper_source\n";
            for (const auto& c : cells)
                os << to_string(c.family) << ',' << c.m << ',' << c.n << ',' << c.r << ',' << c.interval.lower << ','
                   << c.interval.upper << ',' << (c.interval.exact() ? "true" : "false") << ',' << c.target.target << ','
                   << to_string(c.status) << ',' << c.interval.lower_src.source << ',' << c.interval.upper_src.source << '\n';
            break;
        case TableFormat::json: {
            auto arr = nlohmann::json::array();
            for (const auto& c : cells) arr.push_back(to_json(c));
            os << arr.dump(2) << '\n';
            break;
        }
    }
    return os.str();
}

}  // namespace hyperramsey
