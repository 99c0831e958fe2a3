#include "hyperramsey/io.hpp"

#include <fstream>
#include <stdexcept>

namespace hyperramsey {

namespace {

int int_field(const nlohmann::json& j, const char* key) {
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
        throw std::invalid_argument(std::string("missing integer field \"") + key + "\"");
    return j.at(key).get<int>();
}

std::vector<std::vector<int>> edge_list(const nlohmann::json& j, const char* key) {
    if (!j.contains(key) || !j.at(key).is_array()) throw std::invalid_argument(std::string("missing array field \"") + key + "\"");
    std::vector<std::vector<int>> out;
    for (const auto& e : j.at(key)) {
        if (!e.is_array()) throw std::invalid_argument("edges must be arrays of vertices");
        std::vector<int> vs;
        for (const auto& v : e) {
            if (!v.is_number_integer()) throw std::invalid_argument("vertices must be integers");
            vs.push_back(v.get<int>());
        }
        out.push_back(std::move(vs));
    }
    return out;
}

nlohmann::json edges_json(const Hypergraph& h) {
    auto arr = nlohmann::json::array();
    for (const auto& e : h.edges()) arr.push_back(e.vertices());
    return arr;
}

}  // namespace

nlohmann::json to_json(const Hypergraph& h) {
    return {{"order", h.order()}, {"r", h.uniformity()}, {"edges", edges_json(h)}};
}

Hypergraph hypergraph_from_json(const nlohmann::json& j) {
    return {int_field(j, "order"), int_field(j, "r"), edge_list(j, "edges")};
}

nlohmann::json to_json(const TwoColoring& c) {
    return {{"order", c.order()}, {"r", c.uniformity()}, {"red", edges_json(c.edges_of(EdgeColor::red))}};
}

TwoColoring coloring_from_json(const nlohmann::json& j) {
    const Hypergraph red(int_field(j, "order"), int_field(j, "r"), edge_list(j, "red"));
    TwoColoring out(red.order(), red.uniformity(), EdgeColor::blue);
    for (const auto& e : red.edges()) out.set(e.mask(), EdgeColor::red);
    return out;
}

nlohmann::json to_json(const BoundRecord& b) {
    return {{"source", b.source}, {"direction", to_string(b.direction)}, {"value", b.value}, {"conditions", b.conditions}};
}

nlohmann::json to_json(const BoundResult& b) {
    if (const auto* rec = std::get_if<BoundRecord>(&b)) return to_json(*rec);
    const auto& skip = std::get<Inapplicable>(b);
    return {{"source", skip.source}, {"inapplicable", skip.failed_guard}};
}

nlohmann::json to_json(const IntervalReport& rep, bool with_considered) {
    nlohmann::json j = {
        {"family", to_string(rep.family)},
        {"m", rep.m},
        {"n", rep.n},
        {"r", rep.r},
        {"lower", rep.interval.lower},
        {"upper", rep.interval.upper},
        {"exact", rep.interval.exact()},
        {"lower_source", rep.interval.lower_src.source},
        {"upper_source", rep.interval.upper_src.source},
        {"target", rep.target.target},
        {"status", to_string(rep.status)},
    };
    if (with_considered) {
        auto arr = nlohmann::json::array();
        for (const auto& b : rep.considered) arr.push_back(to_json(b));
        j["considered"] = std::move(arr);
    }
    return j;
}

nlohmann::json to_json(const CycleC4Report& rep) {
    nlohmann::json j = {{"n", rep.n}, {"lower", rep.lower}, {"target", rep.target.target}, {"status", to_string(rep.status)}};
    j["upper"] = rep.upper ? nlohmann::json(*rep.upper) : nlohmann::json(nullptr);
    auto arr = nlohmann::json::array();
    for (const auto& b : rep.considered) arr.push_back(to_json(b));
    j["considered"] = std::move(arr);
    return j;
}

nlohmann::json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    try {
        return nlohmann::json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(path.string() + ": " + e.what());
    }
}

Hypergraph read_hypergraph(const std::filesystem::path& path) { return hypergraph_from_json(read_json_file(path)); }

TwoColoring read_coloring(const std::filesystem::path& path) { return coloring_from_json(read_json_file(path)); }

}  // namespace hyperramsey
