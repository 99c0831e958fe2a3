#pragma once

#include <filesystem>
#include <json.hpp>

#include "hyperramsey/bounds.hpp"
#include "hyperramsey/hypergraph.hpp"
#include "hyperramsey/two_coloring.hpp"

namespace hyperramsey {

/// {"order": p, "r": r, "edges": [[v, ...], ...]} with edges in colex order.
nlohmann::json to_json(const Hypergraph& h);
/// Throws std::invalid_argument on a malformed document.
Hypergraph hypergraph_from_json(const nlohmann::json& j);

/// {"order": p, "r": r, "red": [[v, ...], ...]}; every other edge is blue.
nlohmann::json to_json(const TwoColoring& c);
TwoColoring coloring_from_json(const nlohmann::json& j);

nlohmann::json to_json(const BoundRecord& b);
nlohmann::json to_json(const BoundResult& b);
nlohmann::json to_json(const IntervalReport& rep, bool with_considered = false);
nlohmann::json to_json(const CycleC4Report& rep);

/// File helpers; throw std::runtime_error when the file cannot be read.
nlohmann::json read_json_file(const std::filesystem::path& path);
Hypergraph read_hypergraph(const std::filesystem::path& path);
TwoColoring read_coloring(const std::filesystem::path& path);

}  // namespace hyperramsey
