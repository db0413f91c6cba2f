#pragma once

// Graph file format (JSON):
//   {"vertices":[{"genus":0},...],
//    "edges":[[u,v],...],                      loops as [v,v]
//    "legs":[{"vertex":v,"label":k},...]}
// Half-edges are numbered in file order, first endpoint first.

#include <filesystem>
#include <string>
#include <string_view>

#include "jchi/stable_graph.hpp"

namespace jchi {

std::string graph_to_json(const StableGraph& g);

/// Parses and structurally checks a graph document. Stability and
/// connectivity are checked only when `require_stable` is set; every
/// failure throws InvalidInput naming the violated invariant.
StableGraph graph_from_json(std::string_view text, bool require_stable = true);

StableGraph load_graph_file(const std::filesystem::path& path, bool require_stable = true);

/// Reads a whole file; throws InvalidInput if it cannot be opened.
std::string read_text_file(const std::filesystem::path& path);

/// Writes via a sibling temp file and rename so readers never see a
/// partial document.
void write_text_file_atomic(const std::filesystem::path& path, std::string_view contents);

}  // namespace jchi
