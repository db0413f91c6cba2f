#pragma once

#include <json.hpp>

#include "jchi/stable_graph.hpp"

namespace jchi::detail {

nlohmann::json graph_json(const StableGraph& g);
StableGraph graph_from_json_value(const nlohmann::json& doc, bool require_stable);
nlohmann::json parse_json(std::string_view text, const char* what);

}  // namespace jchi::detail
