#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <ctime>
#include <fstream>
#include <iostream>
#include <set>
#include <json.hpp>

#include "hyperramsey/acceptance.hpp"
#include "hyperramsey/arrowing.hpp"
#include "hyperramsey/bounds.hpp"
#include "hyperramsey/io.hpp"
#include "hyperramsey/isomorphism.hpp"
#include "hyperramsey/tables.hpp"
#include "hyperramsey/trees.hpp"
#include "hyperramsey/weak_coloring.hpp"
#include "hyperramsey/witness.hpp"

using namespace hyperramsey;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitBudget = 2;
constexpr int kExitUsage = 64;
constexpr std::string_view kVersion = "0.1.0";

#ifndef HYPERRAMSEY_GOLDEN_DIR
#define HYPERRAMSEY_GOLDEN_DIR "tests/golden"
#endif

struct Run {
    std::string command;
    json parameters = json::object();
    json verdicts = json::array();
    int exit_code = kExitOk;
};

void print(const json& j) { std::cout << j.dump(2) << '\n'; }

// Search budget: the flag wins, then RAMSEY_BUDGET, then the library default.
std::uint64_t resolve_budget(const std::optional<std::uint64_t>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("RAMSEY_BUDGET")) {
        try {
            std::size_t used = 0;
            const auto v = std::stoull(env, &used);
            if (used == std::string_view(env).size()) return v;
        } catch (const std::exception&) {
        }
        throw std::invalid_argument(std::string("RAMSEY_BUDGET is not a non-negative integer: ") + env);
    }
    return SearchConfig{}.node_budget;
}

json certificate_json(const TreeCertificate& cert) {
    json attach = json::array();
    for (const auto& a : cert.attach_vertex) attach.push_back(a ? json(*a) : json(nullptr));
    return {{"build_order", cert.build_order}, {"attach_vertex", attach}};
}

json verdict_json(const WitnessVerdict& v) {
    json j = {{"verdict", to_string(v.kind)}};
    if (v.embedding) j["embedding"] = *v.embedding;
    if (!v.clique.empty()) j["clique"] = v.clique;
    return j;
}

struct TableArgs {
    std::string family = "tree";
    std::string rows = "5..15";
    std::string cols = "4..10";
    std::string format = "text";
    int r = 3;
};

struct CellArgs {
    std::string family = "tree";
    int m = 0;
    int n = 0;
    int r = 3;
    bool c4 = false;
};

void add_table(CLI::App& parent, TableArgs& args, Run& run) {
    auto* cmd = parent.add_subcommand("table", "Best known intervals for R(T_m, K_n) over a grid");
    cmd->add_option("--family", args.family, "tree or path")->check(CLI::IsMember({"tree", "path"}));
    cmd->add_option("--rows", args.rows, "tree orders m, as a..b");
    cmd->add_option("--cols", args.cols, "clique orders n, as a..b");
    cmd->add_option("--format", args.format, "text, csv or json")->check(CLI::IsMember({"text", "csv", "json"}));
    cmd->add_option("-r,--uniformity", args.r, "uniformity")->check(CLI::Range(2, 16));
    cmd->callback([&] {
        run.command = "table";
        run.parameters = {{"family", args.family}, {"rows", args.rows}, {"cols", args.cols}, {"format", args.format}, {"r", args.r}};
        BoundsEngine engine;
        const auto cells = table_cells(engine, parse_family(args.family), parse_range(args.rows), parse_range(args.cols), args.r);
        std::cout << render_table(cells, parse_table_format(args.format));
        for (const auto& c : cells) run.verdicts.push_back(format_interval(c.interval));
    });
}

void add_cell(CLI::App& parent, CellArgs& args, Run& run) {
    auto* cmd = parent.add_subcommand("cell", "One interval with the provenance of every bound consulted");
    cmd->add_option("--family", args.family, "tree or path")->check(CLI::IsMember({"tree", "path"}));
    cmd->add_option("-m", args.m, "tree order");
    cmd->add_option("-n", args.n, "clique order")->required();
    cmd->add_option("-r,--uniformity", args.r, "uniformity")->check(CLI::Range(2, 16));
    cmd->add_flag("--c4", args.c4, "report the loose cycle C_4 (r = 3) instead of a tree");
    cmd->callback([&] {
        run.command = "cell";
        run.parameters = {{"family", args.family}, {"m", args.m}, {"n", args.n}, {"r", args.r}, {"c4", args.c4}};
        if (args.c4) {
            const auto rep = cycle_c4_bounds(args.n);
            print(to_json(rep));
            run.verdicts.push_back(to_string(rep.status));
            return;
        }
        if (args.m == 0) throw CLI::RequiredError("-m");
        BoundsEngine engine;
        const auto& rep = engine.interval(parse_family(args.family), args.m, args.n, args.r);
        print(to_json(rep, true));
        run.verdicts.push_back(format_interval(rep.interval));
    });
}

}  // namespace

int main(int argc, char** argv) {
    const auto t0 = std::chrono::steady_clock::now();
    CLI::App app{"Ramsey numbers of uniform hypergraph trees versus complete hypergraphs"};
    app.set_version_flag("--version", std::string(kVersion));
    app.require_subcommand(1);
    std::string manifest_path;
    app.add_option("--manifest", manifest_path, "write the run manifest to FILE instead of stderr");

    Run run;

    TableArgs table_args, bounds_table_args;
    CellArgs cell_args, bounds_cell_args;
    add_table(app, table_args, run);
    add_cell(app, cell_args, run);
    auto* bounds = app.add_subcommand("bounds", "Bounds engine (table, cell)");
    bounds->require_subcommand(1);
    add_table(*bounds, bounds_table_args, run);
    add_cell(*bounds, bounds_cell_args, run);

    // trees
    auto* trees = app.add_subcommand("trees", "Tree enumeration and recognition");
    trees->require_subcommand(1);
    int enum_m = 0, enum_r = 3;
    auto* trees_enum = trees->add_subcommand("enum", "All trees of order m up to isomorphism, as JSON");
    trees_enum->add_option("-m,--order", enum_m, "tree order")->required();
    trees_enum->add_option("-r,--uniformity", enum_r, "uniformity")->check(CLI::Range(2, 16));
    trees_enum->callback([&] {
        run.command = "trees enum";
        run.parameters = {{"order", enum_m}, {"r", enum_r}};
        json arr = json::array();
        for (const auto& t : enumerate_trees(enum_m, enum_r)) arr.push_back(to_json(t));
        print(arr);
        run.verdicts.push_back(arr.size());
    });
    std::string check_input, check_method = "build";
    auto* trees_check = trees->add_subcommand("check", "Decide whether a hypergraph is a tree");
    trees_check->add_option("--input", check_input, "hypergraph JSON file")->required();
    trees_check->add_option("--method", check_method, "build, acyclic, components or unique-path")
        ->check(CLI::IsMember({"build", "acyclic", "components", "unique-path"}));
    trees_check->callback([&] {
        run.command = "trees check";
        run.parameters = {{"input", check_input}, {"method", check_method}};
        const auto v = is_tree(read_hypergraph(check_input), parse_tree_method(check_method));
        json j = {{"method", check_method}, {"is_tree", v.is_tree}};
        if (v.certificate) j["certificate"] = certificate_json(*v.certificate);
        print(j);
        run.verdicts.push_back(v.is_tree);
    });

    // invariants
    std::string inv_input;
    auto* invariants = app.add_subcommand("invariants", "chi_w, t, c and minimum degree of a hypergraph");
    invariants->add_option("--input", inv_input, "hypergraph JSON file")->required();
    invariants->callback([&] {
        run.command = "invariants";
        run.parameters = {{"input", inv_input}};
        const auto s = coloring_stats(read_hypergraph(inv_input));
        json j = {{"chi_w", s.chi_w}, {"t", s.t}, {"c", s.largest_component}, {"delta", s.min_degree}};
        print(j);
        run.verdicts.push_back(j);
    });

    // witness
    auto* witness = app.add_subcommand("witness", "Lower-bound colourings");
    witness->require_subcommand(1);
    int burr_chi = 0, burr_t = 0, burr_c = 0, burr_r = 3;
    bool burr_swap = false;
    auto* w_burr = witness->add_subcommand("burr", "Block colouring: blue inside blocks, red across");
    w_burr->add_option("--chi-w", burr_chi, "chi_w of the red side")->required();
    w_burr->add_option("--t", burr_t, "t of the red side")->required();
    w_burr->add_option("--c", burr_c, "largest component order of the blue side")->required();
    w_burr->add_option("-r,--uniformity", burr_r, "uniformity")->check(CLI::Range(2, 16));
    w_burr->add_flag("--swap", burr_swap, "exchange the colours");
    w_burr->callback([&] {
        run.command = "witness burr";
        run.parameters = {{"chi_w", burr_chi}, {"t", burr_t}, {"c", burr_c}, {"r", burr_r}, {"swap", burr_swap}};
        auto c = burr_witness(burr_chi, burr_t, burr_c, burr_r);
        print(to_json(burr_swap ? swap_colors(c) : c));
        run.verdicts.push_back(c.order());
    });
    std::string extend_base;
    int extend_m = 0;
    auto* w_extend = witness->add_subcommand("extend", "Append a red K_{m-1} joined in blue");
    w_extend->add_option("--base", extend_base, "colouring JSON file")->required();
    w_extend->add_option("-m", extend_m, "order of the red pattern")->required();
    w_extend->callback([&] {
        run.command = "witness extend";
        run.parameters = {{"base", extend_base}, {"m", extend_m}};
        const auto c = extend_red_clique(read_coloring(extend_base), extend_m);
        print(to_json(c));
        run.verdicts.push_back(c.order());
    });
    int cubic_j = 0;
    auto* w_cubic = witness->add_subcommand("cubic", "Cubic residue colouring of K_{3j+1}^(3)");
    w_cubic->add_option("-j", cubic_j, "3j + 1 must be prime")->required();
    w_cubic->callback([&] {
        run.command = "witness cubic";
        run.parameters = {{"j", cubic_j}};
        const auto c = cubic_residue_witness(cubic_j);
        print(to_json(c));
        run.verdicts.push_back(c.order());
    });
    std::string verify_coloring, verify_red, verify_blue;
    int verify_blue_n = 0;
    auto* w_verify = witness->add_subcommand("verify", "Check a colouring for a red pattern and a blue clique or pattern");
    w_verify->add_option("--coloring", verify_coloring, "colouring JSON file")->required();
    w_verify->add_option("--red", verify_red, "red pattern JSON file")->required();
    auto* blue_clique = w_verify->add_option("--blue-clique", verify_blue_n, "forbidden blue clique order");
    auto* blue_pattern = w_verify->add_option("--blue", verify_blue, "forbidden blue pattern JSON file");
    blue_clique->excludes(blue_pattern);
    w_verify->callback([&] {
        run.command = "witness verify";
        run.parameters = {{"coloring", verify_coloring}, {"red", verify_red}, {"blue_clique", verify_blue_n}, {"blue", verify_blue}};
        if (verify_blue.empty() && blue_clique->count() == 0) throw CLI::RequiredError("--blue-clique or --blue");
        const auto c = read_coloring(verify_coloring);
        const auto red = read_hypergraph(verify_red);
        const auto v = verify_blue.empty() ? verify_witness(c, red, verify_blue_n) : verify_witness(c, red, read_hypergraph(verify_blue));
        print(verdict_json(v));
        run.verdicts.push_back(to_string(v.kind));
        if (!v.clean()) run.exit_code = kExitFailure;
    });

    // arrows / ramsey
    int arrows_p = 0, search_n = 0;
    std::string search_red, edge_order = "colex";
    std::optional<std::uint64_t> budget_flag;
    bool symmetry = false;
    auto add_search_options = [&](CLI::App* cmd) {
        cmd->add_option("--red", search_red, "red pattern JSON file")->required();
        cmd->add_option("--blue-clique", search_n, "blue clique order")->required();
        cmd->add_option("--budget", budget_flag, "node budget (default: RAMSEY_BUDGET or 1e8)");
        cmd->add_flag("--symmetry", symmetry, "lex-leader pruning on the first vertices");
        cmd->add_option("--edge-order", edge_order, "colex or degree-guided")->check(CLI::IsMember({"colex", "degree-guided"}));
    };
    auto make_config = [&] {
        SearchConfig cfg;
        cfg.node_budget = resolve_budget(budget_flag);
        cfg.symmetry = symmetry;
        cfg.edge_order = edge_order == "colex" ? EdgeOrder::colex : EdgeOrder::degree_guided;
        return cfg;
    };
    auto* arrows_cmd = app.add_subcommand("arrows", "Decide K_p -> (red pattern, blue K_n)");
    arrows_cmd->add_option("-p", arrows_p, "host order")->required();
    add_search_options(arrows_cmd);
    arrows_cmd->callback([&] {
        run.command = "arrows";
        const auto cfg = make_config();
        run.parameters = {{"p", arrows_p}, {"red", search_red}, {"blue_clique", search_n}, {"budget", cfg.node_budget},
                          {"symmetry", symmetry}, {"edge_order", edge_order}};
        const auto res = arrows(arrows_p, read_hypergraph(search_red), search_n, cfg);
        json j = {{"verdict", to_string(res.verdict)}, {"nodes", res.nodes}};
        if (res.counterexample) j["counterexample"] = to_json(*res.counterexample);
        print(j);
        run.verdicts.push_back(to_string(res.verdict));
        if (res.verdict == Verdict::budget_exhausted) run.exit_code = kExitBudget;
    });
    auto* ramsey_cmd = app.add_subcommand("ramsey", "Least p with K_p -> (red pattern, blue K_n)");
    add_search_options(ramsey_cmd);
    ramsey_cmd->callback([&] {
        run.command = "ramsey";
        const auto cfg = make_config();
        run.parameters = {{"red", search_red}, {"blue_clique", search_n}, {"budget", cfg.node_budget}, {"symmetry", symmetry}, {"edge_order", edge_order}};
        const auto res = ramsey_number(read_hypergraph(search_red), search_n, cfg);
        json j = {{"exact", res.exact}, {"lower", res.lower}, {"nodes", res.nodes}};
        j["upper"] = res.upper ? json(*res.upper) : json(nullptr);
        if (res.certificate) j["certificate"] = to_json(*res.certificate);
        print(j);
        run.verdicts.push_back(res.exact ? json(res.lower) : json("budget-exhausted"));
        if (!res.exact) run.exit_code = kExitBudget;
    });

    // census
    int census_m = 0, census_r = 3, census_n = 0;
    std::optional<std::uint64_t> census_budget;
    auto* census = app.add_subcommand("census", "Compare all trees of one order against K_n (heuristic probe)");
    census->add_option("-m,--order", census_m, "tree order (at most 9)")->required();
    census->add_option("-r,--uniformity", census_r, "uniformity (3)");
    census->add_option("-n", census_n, "clique order")->required();
    census->add_option("--budget", census_budget, "node budget for each exact search (default 1e6)");
    census->callback([&] {
        run.command = "census";
        if (census_r != 3 || census_m > 9) throw std::invalid_argument("census is limited to r = 3 and m <= 9");
        SearchConfig cfg;
        cfg.node_budget = census_budget ? *census_budget : (std::getenv("RAMSEY_BUDGET") ? resolve_budget(std::nullopt) : 1'000'000);
        cfg.symmetry = true;
        run.parameters = {{"m", census_m}, {"r", census_r}, {"n", census_n}, {"budget", cfg.node_budget}};
        BoundsEngine engine;
        const auto& generic = engine.interval(Family::tree, census_m, census_n, census_r);
        const auto path = loose_path(census_m, census_r);
        json rows = json::array();
        std::set<std::int64_t> exact_values;
        bool undecided = false;
        for (const auto& t : enumerate_trees(census_m, census_r)) {
            RamseyInterval iv = generic.interval;
            const bool is_path = is_isomorphic(t, path);
            if (is_path) iv = engine.interval(Family::path, census_m, census_n, census_r).interval;
            json row = {{"tree", to_json(t)}, {"loose_path", is_path}, {"lower", iv.lower}, {"upper", iv.upper}};
            if (iv.exact()) {
                row["exact"] = iv.lower;
                row["exact_from"] = "bounds";
                exact_values.insert(iv.lower);
            } else {
                const auto res = ramsey_number(t, census_n, cfg);
                if (res.exact) {
                    row["exact"] = res.lower;
                    row["exact_from"] = "search";
                    exact_values.insert(res.lower);
                } else {
                    row["exact"] = nullptr;
                    row["search"] = {{"verdict", "budget-exhausted"}, {"below", res.lower}, {"nodes", res.nodes}};
                    undecided = true;
                }
            }
            rows.push_back(std::move(row));
        }
        const bool divergent = exact_values.size() > 1;
        json out = {{"m", census_m},
                    {"n", census_n},
                    {"r", census_r},
                    {"trees", rows.size()},
                    {"family_interval", format_interval(generic.interval)},
                    {"results", rows},
                    {"divergent", divergent}};
        print(out);
        run.verdicts.push_back(divergent ? "divergent" : (undecided ? "undecided" : "uniform"));
        if (undecided) run.exit_code = kExitBudget;
    });

    // verify-all
    std::optional<std::uint64_t> verify_budget;
    std::string golden_dir = HYPERRAMSEY_GOLDEN_DIR;
    auto* verify_all = app.add_subcommand("verify-all", "Run every acceptance check and print one line per check");
    verify_all->add_option("--budget", verify_budget, "node budget for the exact searches");
    verify_all->add_option("--golden-dir", golden_dir, "directory with the golden tables");
    verify_all->callback([&] {
        run.command = "verify-all";
        AcceptanceOptions opt;
        opt.node_budget = resolve_budget(verify_budget);
        opt.golden_dir = golden_dir;
        run.parameters = {{"budget", opt.node_budget}, {"golden_dir", golden_dir}};
        bool failed = false, exhausted = false;
        for (const auto& r : run_acceptance(opt)) {
            std::cout << format_result(r) << std::endl;
            run.verdicts.push_back(to_string(r.outcome));
            failed = failed || r.outcome == Outcome::fail;
            exhausted = exhausted || r.outcome == Outcome::budget_exhausted;
        }
        run.exit_code = failed ? kExitFailure : (exhausted ? kExitBudget : kExitOk);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFailure;
    }

    const auto wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const json manifest = {{"command", run.command},
                           {"parameters", run.parameters},
                           {"versions", {{"hyperramsey", kVersion}, {"cli11", CLI11_VERSION},
                                         {"nlohmann_json", std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." + std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                                                               std::to_string(NLOHMANN_JSON_VERSION_PATCH)}}},
                           {"wall_time_s", wall},
                           {"timestamp", static_cast<std::int64_t>(std::time(nullptr))},
                           {"verdicts", run.verdicts},
                           {"exit_code", run.exit_code}};
    if (manifest_path.empty()) {
        std::cerr << manifest.dump() << '\n';
    } else {
        std::ofstream out(manifest_path);
        if (!out) {
            std::cerr << "error: cannot write manifest " << manifest_path << '\n';
            return kExitFailure;
        }
        out << manifest.dump(2) << '\n';
    }
    return run.exit_code;
}
