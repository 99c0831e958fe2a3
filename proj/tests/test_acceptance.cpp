#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "hyperramsey/acceptance.hpp"

using namespace hyperramsey;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace

TEST_CASE("table differences name the cell") {
    const std::string a = "  m\\n         4         5\n    5         6         9\n    7    [8, 9]        13\n";
    std::string b = a;
    b.replace(b.find("[8, 9]"), 6, "[8, 8]");
    CHECK(first_table_difference(a, a).empty());
    CHECK(first_table_difference(a, b) == "cell (m=7, n=4): expected [8, 9], got [8, 8]");
    CHECK(first_table_difference(a, a + "\n") == "row 3 label: expected <missing>, got ");
}

TEST_CASE("a corrupted golden fails the table criterion and names the cell") {
    const auto dir = std::filesystem::temp_directory_path() / "hyperramsey_corrupt_golden";
    std::filesystem::create_directories(dir);
    const std::filesystem::path golden = HYPERRAMSEY_GOLDEN_DIR;
    auto tree = slurp(golden / "table_tree.txt");
    tree.replace(tree.find("[14, 15]"), 8, "[14, 16]");
    std::ofstream(dir / "table_tree.txt") << tree;
    std::filesystem::copy_file(golden / "table_path.txt", dir / "table_path.txt", std::filesystem::copy_options::overwrite_existing);

    AcceptanceOptions opt;
    opt.golden_dir = dir;
    const auto res = check_tables(opt);
    CHECK(res.outcome == Outcome::fail);
    CHECK(res.detail.find("cell (m=7, n=6): expected [14, 16], got [14, 15]") != std::string::npos);

    opt.golden_dir = golden;
    CHECK(check_tables(opt).outcome == Outcome::pass);
    std::filesystem::remove_all(dir);
}

TEST_CASE("a budget of one node is reported as exhaustion, not failure") {
    AcceptanceOptions opt;
    opt.node_budget = 1;
    const auto res = check_exact_small_numbers(opt);
    CHECK(res.outcome == Outcome::budget_exhausted);
    CHECK(format_result(res).rfind("BUDGET", 0) == 0);
}
