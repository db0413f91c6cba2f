#include "jchi/graph_cache.hpp"

#include <cstdlib>

#include "jchi/canonical.hpp"
#include "jchi/enumerate.hpp"
#include "jchi/graph_io.hpp"
#include "json_detail.hpp"

namespace jchi {

using nlohmann::json;

std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag) {
  if (flag && !flag->empty()) return *flag;
  if (const char* env = std::getenv("JCHI_CACHE_DIR"); env && *env) return env;
  return "jchi-cache";
}

std::filesystem::path GraphCache::file_for(int genus, int legs, bool genus0_only) const {
  return dir_ / ("G_" + std::to_string(genus) + "_" + std::to_string(legs) + (genus0_only ? "_g0" : "") + ".json");
}

std::string graph_table_to_json(int genus, int legs, bool genus0_only, const std::vector<StableGraph>& graphs) {
  json list = json::array();
  for (const StableGraph& g : graphs) list.push_back({{"key", canonical_key(g).hex()}, {"graph", detail::graph_json(g)}});
  return json{{"format", "jchi-graphs"},   {"version", kGraphCacheVersion}, {"genus", genus},
              {"legs", legs},              {"genus0_only", genus0_only},    {"graphs", list}}
      .dump();
}

std::optional<std::vector<StableGraph>> GraphCache::load(int genus, int legs, bool genus0_only) const {
  const auto path = file_for(genus, legs, genus0_only);
  std::error_code ec;
  if (!std::filesystem::exists(path, ec)) return std::nullopt;
  try {
    const json doc = detail::parse_json(read_text_file(path), "graph cache");
    if (doc.value("format", "") != "jchi-graphs" || doc.value("version", -1) != kGraphCacheVersion) return std::nullopt;
    if (doc.value("genus", -1) != genus || doc.value("legs", -1) != legs ||
        doc.value("genus0_only", !genus0_only) != genus0_only) {
      return std::nullopt;
    }
    std::vector<StableGraph> out;
    for (const json& item : doc.at("graphs")) {
      StableGraph g = detail::graph_from_json_value(item.at("graph"), true);
      if (canonical_key(g).hex() != item.at("key").get<std::string>()) return std::nullopt;
      out.push_back(std::move(g));
    }
    return out;
  } catch (const std::exception&) {
    return std::nullopt;
  }
}

void GraphCache::store(int genus, int legs, bool genus0_only, const std::vector<StableGraph>& graphs) const {
  std::filesystem::create_directories(dir_);
  write_text_file_atomic(file_for(genus, legs, genus0_only), graph_table_to_json(genus, legs, genus0_only, graphs));
}

std::vector<StableGraph> GraphCache::get_or_compute(int genus, int legs, bool genus0_only,
                                                    const Budget& budget) const {
  require_stable_range(genus, legs);
  if (auto cached = load(genus, legs, genus0_only)) return std::move(*cached);
  auto graphs = enumerate_stable_graphs(genus, legs, genus0_only, budget);
  store(genus, legs, genus0_only, graphs);
  return graphs;
}

}  // namespace jchi
