#pragma once

// On-disk cache of enumerated graph tables, one JSON document per
// (g, n, genus0_only):
//   {"format": "jchi-graphs", "version": N, "genus": g, "legs": n,
//    "genus0_only": b, "graphs": [{"key": hex, "graph": <graph>}, ...]}
// Documents with another version are ignored and recomputed.

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "jchi/errors.hpp"
#include "jchi/stable_graph.hpp"

namespace jchi {

inline constexpr int kGraphCacheVersion = 1;

/// `flag` if given, else $JCHI_CACHE_DIR, else ./jchi-cache.
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& flag);

class GraphCache {
 public:
  explicit GraphCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path file_for(int genus, int legs, bool genus0_only) const;

  /// nullopt when absent, unreadable, or of another version.
  std::optional<std::vector<StableGraph>> load(int genus, int legs, bool genus0_only) const;
  void store(int genus, int legs, bool genus0_only, const std::vector<StableGraph>& graphs) const;

  /// Cached table if present, else enumerate and store.
  std::vector<StableGraph> get_or_compute(int genus, int legs, bool genus0_only, const Budget& budget = {}) const;

 private:
  std::filesystem::path dir_;
};

std::string graph_table_to_json(int genus, int legs, bool genus0_only, const std::vector<StableGraph>& graphs);

}  // namespace jchi
