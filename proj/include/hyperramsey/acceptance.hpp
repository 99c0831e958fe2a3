#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace hyperramsey {

enum class Outcome { pass, fail, budget_exhausted };
std::string_view to_string(Outcome o);

struct CriterionResult {
    int id = 0;
    std::string name;
    Outcome outcome = Outcome::fail;
    std::string detail;
    double seconds = 0.0;
};

struct AcceptanceOptions {
    std::uint64_t node_budget = 100'000'000;
    /// Directory holding table_tree.txt and table_path.txt.
    std::filesystem::path golden_dir;
    std::uint32_t seed = 20240601;
    int random_hosts = 1000;
};

CriterionResult check_exact_small_numbers(const AcceptanceOptions& opt);
CriterionResult check_witnesses(const AcceptanceOptions& opt);
CriterionResult check_tables(const AcceptanceOptions& opt);
CriterionResult check_closed_forms(const AcceptanceOptions& opt);
CriterionResult check_tree_equivalence(const AcceptanceOptions& opt);
CriterionResult check_degree_embedding(const AcceptanceOptions& opt);
CriterionResult check_bound_consistency(const AcceptanceOptions& opt);
CriterionResult check_path_p7_k8(const AcceptanceOptions& opt);

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& opt);

/// "PASS  3 table reproduction (0.01 s): detail"
std::string format_result(const CriterionResult& r);

/// First differing cell between two rendered text tables, or "" if equal.
std::string first_table_difference(std::string_view expected, std::string_view actual);

}  // namespace hyperramsey
